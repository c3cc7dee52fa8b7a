#pragma once

// Shared generators and independent oracles for the unit and acceptance
// tests. Oracles deliberately avoid the library's algorithms: they work on
// explicit words, brute-force enumeration and exact rational elimination.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "sftkit/cohomology.hpp"
#include "sftkit/cylinder_function.hpp"
#include "sftkit/invariants.hpp"
#include "sftkit/point.hpp"
#include "sftkit/point_map.hpp"
#include "sftkit/presentation.hpp"

namespace support {

using namespace sftkit;

inline std::shared_ptr<const Presentation> full_shift(int symbols) {
  return share(build_presentation(Matrix(symbols, std::vector<int>(symbols, 1))));
}

inline std::shared_ptr<const Presentation> golden_mean() { return share(build_presentation({{1, 1}, {1, 0}})); }

inline std::shared_ptr<const Presentation> single_loop() { return share(build_presentation({{1}})); }

// The code {0, 10, 11} -> {10, 0, 11} on the full 2-shift.
inline std::vector<CodePair> standard_exchange() { return {{{0}, {1, 0}}, {{1, 0}, {0}}, {{1, 1}, {1, 1}}}; }

// A random {0,1} matrix on up to max_vertices vertices with no zero row or
// column.
inline Matrix random_matrix(Rng& rng, std::size_t max_vertices, bool strongly_connected = false) {
  std::uniform_int_distribution<std::size_t> size(1, max_vertices);
  while (true) {
    const auto n = size(rng);
    Matrix A(n, std::vector<int>(n, 0));
    for (auto& row : A) {
      for (auto& e : row) e = static_cast<int>(rng() % 3 == 0);
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      bool row = false, col = false;
      for (std::size_t j = 0; j < n; ++j) {
        row = row || A[i][j];
        col = col || A[j][i];
      }
      ok = row && col;
    }
    if (!ok) continue;
    if (strongly_connected) {
      for (std::size_t s = 0; s < n && ok; ++s) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
          const auto u = stack.back();
          stack.pop_back();
          for (std::size_t v = 0; v < n; ++v) {
            if (A[u][v] && !seen[v]) {
              seen[v] = true;
              stack.push_back(v);
            }
          }
        }
        ok = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
      }
      if (!ok) continue;
    }
    return A;
  }
}

// A complete prefix code of the full shift on `symbols` letters obtained by
// splitting `splits` random leaves of the code {""}.
inline std::vector<Word> random_complete_code(int symbols, int splits, Rng& rng) {
  std::vector<Word> code{Word{}};
  for (int s = 0; s < splits; ++s) {
    const auto i = rng() % code.size();
    const auto w = code[i];
    code.erase(code.begin() + static_cast<std::ptrdiff_t>(i));
    for (int c = 0; c < symbols; ++c) {
      auto v = w;
      v.push_back(c);
      code.push_back(v);
    }
  }
  return code;
}

inline std::vector<CodePair> random_exchange(int symbols, Rng& rng) {
  const int splits = 1 + static_cast<int>(rng() % 3);
  const auto from = random_complete_code(symbols, splits, rng);
  auto to = random_complete_code(symbols, splits, rng);
  std::shuffle(to.begin(), to.end(), rng);
  std::vector<CodePair> code;
  for (std::size_t i = 0; i < from.size(); ++i) code.push_back({from[i], to[i]});
  return code;
}

// Prefix exchange applied to a finite word: the code word at the front is
// replaced and the rest is copied.
inline Word exchange_word(const std::vector<CodePair>& code, const Word& x) {
  for (const auto& c : code) {
    if (x.size() >= c.from.size() && std::equal(c.from.begin(), c.from.end(), x.begin())) {
      Word out = c.to;
      out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(c.from.size()), x.end());
      return out;
    }
  }
  return {};
}

// Least k, then least l, such that sigma^k(h(sigma x)) and sigma^l(h(x)) agree
// on long random words x in Z(w) of the full shift, compared on their common
// finite part.
inline std::pair<int, int> exchange_cocycle_oracle(const std::vector<CodePair>& code, int symbols, const Word& w,
                                                   Rng& rng, int bound = 6, int samples = 64) {
  std::vector<Word> xs;
  for (int s = 0; s < samples; ++s) {
    Word x = w;
    while (x.size() < 40) x.push_back(static_cast<Symbol>(rng() % symbols));
    xs.push_back(x);
  }
  for (int k = 0; k <= bound; ++k) {
    for (int l = 0; l <= bound; ++l) {
      bool all = true;
      for (const auto& x : xs) {
        const auto a = exchange_word(code, Word(x.begin() + 1, x.end()));
        const auto b = exchange_word(code, x);
        for (std::size_t i = 0; i < 20 && all; ++i) all = a.at(k + i) == b.at(l + i);
        if (!all) break;
      }
      if (all) return {k, l};
    }
  }
  return {-1, -1};
}

// Every simple cycle of a weighted digraph, as arc index lists.
inline std::vector<std::vector<std::size_t>> simple_cycles(const WeightedDigraph& W) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(W.node_count, false);
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t u) {
    for (std::size_t a = 0; a < W.arcs.size(); ++a) {
      if (W.arcs[a].from != u) continue;
      const auto v = W.arcs[a].to;
      if (v == start) {
        path.push_back(a);
        cycles.push_back(path);
        path.pop_back();
      } else if (v > start && !on_path[v]) {
        on_path[v] = true;
        path.push_back(a);
        dfs(start, v);
        path.pop_back();
        on_path[v] = false;
      }
    }
  };
  for (std::size_t s = 0; s < W.node_count; ++s) {
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  return cycles;
}

inline std::optional<Value> min_simple_cycle_sum(const WeightedDigraph& W) {
  std::optional<Value> best;
  for (const auto& c : simple_cycles(W)) {
    Value s = 0;
    for (auto a : c) s += W.arcs[a].weight;
    best = best ? std::min(*best, s) : s;
  }
  return best;
}

// f evaluated on the periodic point c^inf straight from the table.
inline Value direct_orbit_sum(const CylinderFunction& f, const Word& c) {
  Value total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Word window;
    for (std::size_t t = 0; t < f.window(); ++t) window.push_back(c[(i + t) % c.size()]);
    total += f.table().at(window);
  }
  return total;
}

// Closed admissible words of length 1..max_length.
inline std::vector<Word> closed_words(const Presentation& P, std::size_t max_length) {
  std::vector<Word> out;
  std::vector<Word> frontier;
  for (std::size_t v = 0; v < P.vertex_count(); ++v) frontier.push_back({static_cast<Symbol>(v)});
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      if (P.has_edge(w.back(), w.front())) out.push_back(w);
      if (len == max_length) continue;
      for (Symbol s : P.successors(w.back())) {
        auto v = w;
        v.push_back(s);
        next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// True when every periodic orbit through at most max_length symbols has a
// non-negative f-sum.
inline bool cycle_oracle_positive(const CylinderFunction& f, std::size_t max_length) {
  for (const auto& c : closed_words(f.presentation(), max_length)) {
    if (direct_orbit_sum(f, c) < 0) return false;
  }
  return true;
}

using BigRational = boost::multiprecision::cpp_rational;

inline BigRational rational_determinant(const IntMatrix& M) {
  const auto n = M.size();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = M[i][j];
  }
  BigRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const BigRational factor = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  return det;
}

inline std::size_t rational_rank(const IntMatrix& M) {
  if (M.empty()) return 0;
  const auto rows = M.size(), cols = M[0].size();
  std::vector<std::vector<BigRational>> a(rows, std::vector<BigRational>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = M[i][j];
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const BigRational factor = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::int64_t oracle_determinant(const IntMatrix& M) {
  return static_cast<std::int64_t>(boost::multiprecision::numerator(rational_determinant(M)));
}

// Smith diagonal from determinantal divisors: d_k = gcd of the k x k minors.
inline std::vector<std::int64_t> oracle_smith(const IntMatrix& M) {
  const auto n = M.size();
  std::vector<std::int64_t> divisors{1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::int64_t g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, const std::function<void()>&)> choose =
        [&](std::size_t from, std::size_t depth, std::vector<std::size_t>& pick, const std::function<void()>& done) {
          if (depth == k) {
            done();
            return;
          }
          for (std::size_t i = from; i < n; ++i) {
            pick[depth] = i;
            choose(i + 1, depth + 1, pick, done);
          }
        };
    choose(0, 0, rows, [&] {
      choose(0, 0, cols, [&] {
        IntMatrix minor(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = M[rows[i]][cols[j]];
        }
        g = std::gcd(g, std::abs(oracle_determinant(minor)));
      });
    });
    divisors.push_back(g);
  }
  std::vector<std::int64_t> diagonal;
  for (std::size_t k = 1; k <= n; ++k) {
    diagonal.push_back(divisors[k - 1] == 0 ? 0 : divisors[k] / divisors[k - 1]);
  }
  return diagonal;
}

inline IntMatrix identity_minus(const Presentation& P) {
  const auto A = P.matrix();
  IntMatrix M(A.size(), std::vector<std::int64_t>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < A.size(); ++j) M[i][j] = (i == j ? 1 : 0) - A[i][j];
  }
  return M;
}

}  // namespace support
