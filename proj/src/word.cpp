#include "sftkit/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "sftkit/error.hpp"

namespace sftkit {

std::string format_word(const Word& w) {
  if (w.empty()) return "-";
  const bool digits = std::all_of(w.begin(), w.end(), [](Symbol s) { return s >= 0 && s < 10; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i > 0) out += '.';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text.empty() || text == "-") return w;
  if (text.find('.') == std::string_view::npos) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorKind::ParseError, "bad symbol '" + std::string(1, c) + "' in word '" +
                                               std::string(text) + "'");
      }
      w.push_back(c - '0');
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto dot = text.find('.', pos);
    const auto piece = text.substr(pos, dot == std::string_view::npos ? text.size() - pos : dot - pos);
    Symbol value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty() || value < 0) {
      throw Error(ErrorKind::ParseError, "bad word '" + std::string(text) + "'");
    }
    w.push_back(value);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
  to = std::min(to, w.size());
  if (from >= to) return {};
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

Word rotate_left(const Word& w, std::size_t by) {
  if (w.empty()) return w;
  Word out(w);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(by % w.size()), out.end());
  return out;
}

bool is_prefix(const Word& prefix, const Word& w) {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return slice(w, 0, p);
  }
  return w;
}

}  // namespace sftkit
