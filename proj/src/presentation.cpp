#include "sftkit/presentation.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "sftkit/error.hpp"

namespace sftkit {

bool Presentation::has_edge(Symbol from, Symbol to) const {
  if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= vertex_count() ||
      static_cast<std::size_t>(to) >= vertex_count()) {
    return false;
  }
  const auto& s = successors_[from];
  return std::binary_search(s.begin(), s.end(), to);
}

Matrix Presentation::matrix() const {
  const auto n = vertex_count();
  Matrix A(n, std::vector<int>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (Symbol v : successors_[u]) A[u][v] = 1;
  }
  return A;
}

std::size_t Presentation::edge_count() const {
  std::size_t total = 0;
  for (const auto& s : successors_) total += s.size();
  return total;
}

bool Presentation::admissible(const Word& w) const {
  for (Symbol s : w) {
    if (s < 0 || static_cast<std::size_t>(s) >= vertex_count()) return false;
  }
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!has_edge(w[i - 1], w[i])) return false;
  }
  return true;
}

bool Presentation::closed(const Word& w) const {
  return !w.empty() && admissible(w) && has_edge(w.back(), w.front());
}

std::vector<Symbol> Presentation::reachable(Symbol from) const {
  std::vector<char> seen(vertex_count(), 0);
  std::vector<Symbol> order{from};
  seen.at(from) = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Symbol t : successors_[order[i]]) {
      if (!seen[t]) {
        seen[t] = 1;
        order.push_back(t);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

Presentation build_presentation(const Matrix& adjacency, std::vector<std::string> labels) {
  const auto n = adjacency.size();
  if (n == 0) throw Error(ErrorKind::EmptyShift, "presentation has no vertices");
  for (const auto& row : adjacency) {
    if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "adjacency matrix is not square");
    for (int e : row) {
      if (e != 0 && e != 1) throw Error(ErrorKind::InvalidArgument, "adjacency entries must be 0 or 1");
    }
  }
  Presentation P;
  P.successors_.assign(n, {});
  P.predecessors_.assign(n, {});
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (adjacency[u][v]) {
        P.successors_[u].push_back(static_cast<Symbol>(v));
        P.predecessors_[v].push_back(static_cast<Symbol>(u));
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (P.successors_[v].empty()) {
      throw Error(ErrorKind::ZeroRowOrColumn, "row " + std::to_string(v) + " is zero (sink)");
    }
    if (P.predecessors_[v].empty()) {
      throw Error(ErrorKind::ZeroRowOrColumn, "column " + std::to_string(v) + " is zero (source)");
    }
  }
  if (labels.empty()) {
    for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  }
  if (labels.size() != n) throw Error(ErrorKind::InvalidArgument, "one label per vertex required");
  P.labels_ = std::move(labels);
  return P;
}

std::vector<Word> language(const Presentation& P, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "language length must be positive");
  std::vector<Word> out;
  Word current;
  auto extend = [&](auto&& self) -> void {
    if (current.size() == m) {
      out.push_back(current);
      return;
    }
    if (current.empty()) {
      for (std::size_t v = 0; v < P.vertex_count(); ++v) {
        current.push_back(static_cast<Symbol>(v));
        self(self);
        current.pop_back();
      }
      return;
    }
    for (Symbol t : P.successors(current.back())) {
      current.push_back(t);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

Word HigherBlock::encode(const Word& w) const {
  if (w.size() < block_length) throw Error(ErrorKind::WordTooShort, "word shorter than block length");
  Word out;
  for (std::size_t i = 0; i + block_length <= w.size(); ++i) {
    out.push_back(block_index(slice(w, i, i + block_length)));
  }
  return out;
}

Word HigherBlock::decode(const Word& w) const {
  if (w.empty()) return {};
  Word out;
  for (Symbol v : w) out.push_back(blocks.at(v).front());
  const auto& last = blocks.at(w.back());
  out.insert(out.end(), last.begin() + 1, last.end());
  return out;
}

Symbol HigherBlock::block_index(const Word& block) const {
  const auto it = std::lower_bound(blocks.begin(), blocks.end(), block);
  if (it == blocks.end() || *it != block) {
    throw Error(ErrorKind::InadmissibleWord, "block " + format_word(block) + " is not admissible");
  }
  return static_cast<Symbol>(it - blocks.begin());
}

HigherBlock higher_block(const Presentation& P, std::size_t block_length) {
  if (block_length == 0) throw Error(ErrorKind::InvalidArgument, "block length must be positive");
  HigherBlock hb;
  hb.block_length = block_length;
  hb.blocks = language(P, block_length);  // sorted
  const auto n = hb.blocks.size();
  Matrix A(n, std::vector<int>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (Symbol t : P.successors(hb.blocks[u].back())) {
      Word next = slice(hb.blocks[u], 1, block_length);
      next.push_back(t);
      A[u][hb.block_index(next)] = 1;
    }
  }
  std::vector<std::string> labels;
  for (const auto& b : hb.blocks) labels.push_back(format_word(b));
  hb.presentation = build_presentation(A, std::move(labels));
  return hb;
}

namespace {

bool avoids(const Word& w, const std::vector<Word>& forbidden) {
  for (const auto& f : forbidden) {
    if (f.size() > w.size()) continue;
    for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
      if (std::equal(f.begin(), f.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) return false;
    }
  }
  return true;
}

}  // namespace

Word ForbiddenWordsResult::encode(const Word& w) const {
  if (w.size() < block_length) throw Error(ErrorKind::WordTooShort, "word shorter than block length");
  Word out;
  for (std::size_t i = 0; i + block_length <= w.size(); ++i) {
    const auto block = slice(w, i, i + block_length);
    const auto it = std::find(blocks.begin(), blocks.end(), block);
    if (it == blocks.end()) {
      throw Error(ErrorKind::InadmissibleWord, "block " + format_word(block) + " not in the shift");
    }
    out.push_back(static_cast<Symbol>(it - blocks.begin()));
  }
  return out;
}

Word ForbiddenWordsResult::decode(const Word& w) const {
  if (w.empty()) return {};
  Word out;
  for (Symbol v : w) out.push_back(blocks.at(v).front());
  const auto& last = blocks.at(w.back());
  out.insert(out.end(), last.begin() + 1, last.end());
  return out;
}

ForbiddenWordsResult from_forbidden_words(std::size_t alphabet_size, const std::vector<Word>& forbidden,
                                          bool prune) {
  if (alphabet_size == 0) throw Error(ErrorKind::EmptyShift, "empty alphabet");
  std::size_t longest = 0;
  for (const auto& f : forbidden) {
    if (f.empty()) throw Error(ErrorKind::InvalidArgument, "forbidden words must be non-empty");
    for (Symbol s : f) {
      if (s < 0 || static_cast<std::size_t>(s) >= alphabet_size) {
        throw Error(ErrorKind::InvalidArgument, "forbidden word uses a symbol outside the alphabet");
      }
    }
    longest = std::max(longest, f.size());
  }
  const std::size_t K = std::max<std::size_t>(1, longest > 0 ? longest - 1 : 1);

  // Enumerate K-blocks avoiding the forbidden words.
  std::vector<Word> blocks;
  Word current;
  auto enumerate = [&](auto&& self) -> void {
    if (current.size() == K) {
      blocks.push_back(current);
      return;
    }
    for (std::size_t a = 0; a < alphabet_size; ++a) {
      current.push_back(static_cast<Symbol>(a));
      if (avoids(current, forbidden)) self(self);
      current.pop_back();
    }
  };
  enumerate(enumerate);

  const auto n = blocks.size();
  std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[blocks[i]] = i;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t a = 0; a < alphabet_size; ++a) {
      Word joined = blocks[u];
      joined.push_back(static_cast<Symbol>(a));
      if (!avoids(joined, forbidden)) continue;
      const auto it = index.find(slice(joined, 1, joined.size()));
      if (it != index.end()) A[u][it->second] = 1;
    }
  }

  std::vector<char> alive(n, 1);
  bool changed = true;
  bool had_dead = false;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      bool out = false, in = false;
      for (std::size_t w = 0; w < n; ++w) {
        if (!alive[w]) continue;
        out = out || A[v][w];
        in = in || A[w][v];
      }
      if (!out || !in) {
        alive[v] = 0;
        changed = true;
        had_dead = true;
      }
    }
  }
  if (std::none_of(alive.begin(), alive.end(), [](char c) { return c != 0; })) {
    throw Error(ErrorKind::EmptyShift, "no bi-infinite sequence avoids the forbidden words");
  }
  if (had_dead && !prune) {
    throw Error(ErrorKind::SinkOrSourceAfterPruning, "block graph has sinks or sources");
  }

  ForbiddenWordsResult result;
  result.block_length = K;
  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v]) kept.push_back(v);
  }
  Matrix B(kept.size(), std::vector<int>(kept.size(), 0));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    result.blocks.push_back(blocks[kept[i]]);
    labels.push_back(format_word(blocks[kept[i]]));
    for (std::size_t j = 0; j < kept.size(); ++j) B[i][j] = A[kept[i]][kept[j]];
  }
  result.presentation = build_presentation(B, std::move(labels));
  return result;
}

}  // namespace sftkit
