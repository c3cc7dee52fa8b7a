#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sftkit/word.hpp"

namespace sftkit {

using Matrix = std::vector<std::vector<int>>;

// A shift of finite type presented as the vertex shift of a {0,1} matrix:
// symbols are vertices and a word is admissible iff consecutive symbols are
// joined by edges. Every vertex has at least one successor and one
// predecessor.
class Presentation {
 public:
  Presentation() = default;

  std::size_t vertex_count() const { return successors_.size(); }
  bool has_edge(Symbol from, Symbol to) const;
  const std::vector<Symbol>& successors(Symbol v) const { return successors_.at(v); }
  const std::vector<Symbol>& predecessors(Symbol v) const { return predecessors_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  Matrix matrix() const;
  std::size_t edge_count() const;

  bool admissible(const Word& w) const;
  // Admissible and last symbol -> first symbol is an edge.
  bool closed(const Word& w) const;

  // Vertices reachable from `from` along paths of length >= 0.
  std::vector<Symbol> reachable(Symbol from) const;

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.successors_ == b.successors_;
  }

 private:
  friend Presentation build_presentation(const Matrix&, std::vector<std::string>);

  std::vector<std::vector<Symbol>> successors_;
  std::vector<std::vector<Symbol>> predecessors_;
  std::vector<std::string> labels_;
};

// Validates a square {0,1} matrix with no zero row and no zero column.
Presentation build_presentation(const Matrix& adjacency,
                                std::vector<std::string> labels = {});

// Admissible words of length m (paths with m vertices), lexicographic order.
std::vector<Word> language(const Presentation& P, std::size_t m);

// The higher-block presentation whose vertices are the admissible words of
// length `block_length` of P, with `blocks[v]` the word of vertex v.
struct HigherBlock {
  Presentation presentation;
  std::vector<Word> blocks;
  std::size_t block_length = 1;

  // x_0 x_1 ... -> [x_0..x_{k-1}] [x_1..x_k] ...; requires |w| >= k.
  Word encode(const Word& w) const;
  // Inverse of encode on non-empty words.
  Word decode(const Word& w) const;
  Symbol block_index(const Word& block) const;
};

HigherBlock higher_block(const Presentation& P, std::size_t block_length);

// Subshift of alphabet^N avoiding `forbidden`, recoded as a vertex shift of
// K-blocks where K = max(1, longest forbidden word - 1). Vertices that lie on
// no bi-infinite path are pruned when `prune` is set; otherwise their presence
// is an error.
struct ForbiddenWordsResult {
  Presentation presentation;
  // blocks[v] = the K-block over the original alphabet for vertex v.
  std::vector<Word> blocks;
  std::size_t block_length = 1;

  Word encode(const Word& w) const;
  Word decode(const Word& w) const;
};

ForbiddenWordsResult from_forbidden_words(std::size_t alphabet_size,
                                          const std::vector<Word>& forbidden,
                                          bool prune = true);

}  // namespace sftkit
