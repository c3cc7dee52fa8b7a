#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sftkit {

// Symbols are vertex indices of the presenting graph.
using Symbol = int;
using Word = std::vector<Symbol>;

// Digits when every symbol is < 10 ("0110"), otherwise dot separated
// ("3.12.0"). The empty word prints as "-".
std::string format_word(const Word& w);

// Inverse of format_word. Accepts "", "-", digit strings and dotted lists.
Word parse_word(std::string_view text);

Word concat(const Word& a, const Word& b);
Word slice(const Word& w, std::size_t from, std::size_t to);
Word rotate_left(const Word& w, std::size_t by);

bool is_prefix(const Word& prefix, const Word& w);

// Shortest u with w = u^k.
Word primitive_root(const Word& w);

}  // namespace sftkit
