#include "sftkit/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "sftkit/cylinder_function.hpp"
#include "sftkit/error.hpp"

namespace sftkit {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::InvalidArgument, "integer overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::InvalidArgument, "integer overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::InvalidArgument, "integer overflow");
  return r;
}

// row[r] -= q * row[s]
void row_axpy(IntMatrix& M, std::size_t r, std::size_t s, std::int64_t q) {
  for (std::size_t c = 0; c < M[r].size(); ++c) M[r][c] = checked_sub(M[r][c], checked_mul(q, M[s][c]));
}

void col_axpy(IntMatrix& M, std::size_t c, std::size_t s, std::int64_t q) {
  for (auto& row : M) row[c] = checked_sub(row[c], checked_mul(q, row[s]));
}

}  // namespace

std::vector<std::int64_t> smith_normal_form(IntMatrix M) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows == 0 ? 0 : M[0].size();
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry in the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (M[r][c] != 0 && (pr == rows || std::llabs(M[r][c]) < std::llabs(M[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) break;  // trailing block is zero
      std::swap(M[t], M[pr]);
      for (auto& row : M) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (M[r][t] != 0) {
          row_axpy(M, r, t, M[r][t] / M[t][t]);
          clean = clean && M[r][t] == 0;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (M[t][c] != 0) {
          col_axpy(M, c, t, M[t][c] / M[t][t]);
          clean = clean && M[t][c] == 0;
        }
      }
      if (!clean) continue;
      // Pivot must divide every remaining entry.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (M[r][c] % M[t][t] != 0) {
            for (std::size_t k = 0; k < cols; ++k) M[t][k] = checked_add(M[t][k], M[r][k]);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
  }
  std::vector<std::int64_t> diag(n);
  for (std::size_t t = 0; t < n; ++t) diag[t] = std::llabs(M[t][t]);
  return diag;
}

std::int64_t determinant(const IntMatrix& M) {
  const std::size_t n = M.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> A(n, std::vector<__int128>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (M[r].size() != n) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
    for (std::size_t c = 0; c < n; ++c) A[r][c] = M[r][c];
  }
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && A[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(A[k], A[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
      }
    }
    prev = A[k][k];
  }
  const __int128 d = sign * A[n - 1][n - 1];
  if (d > INT64_MAX || d < INT64_MIN) throw Error(ErrorKind::InvalidArgument, "determinant overflows 64 bits");
  return static_cast<std::int64_t>(d);
}

std::vector<std::int64_t> InvariantReport::group_factors() const {
  std::vector<std::int64_t> out;
  for (auto d : snf_diagonal) {
    if (d != 1) out.push_back(d);
  }
  return out;
}

InvariantReport bowen_franks(const Presentation& P) {
  const auto A = P.matrix();
  const auto n = A.size();
  IntMatrix M(n, std::vector<std::int64_t>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) M[r][c] = (r == c ? 1 : 0) - A[r][c];
  }
  return {smith_normal_form(M), determinant(M)};
}

namespace {

void check_partition(const std::vector<Symbol>& neighbours, const std::vector<std::vector<Symbol>>& parts) {
  if (parts.size() < 2) throw Error(ErrorKind::InvalidPartition, "a split needs at least two parts");
  std::multiset<Symbol> seen;
  for (const auto& part : parts) {
    if (part.empty()) throw Error(ErrorKind::InvalidPartition, "empty part");
    seen.insert(part.begin(), part.end());
  }
  if (!std::equal(seen.begin(), seen.end(), neighbours.begin(), neighbours.end())) {
    throw Error(ErrorKind::InvalidPartition, "parts do not partition the neighbours of the split vertex");
  }
}

struct SplitLayout {
  std::vector<Symbol> base;
  std::vector<std::ptrdiff_t> part;  // -1 for vertices other than the split one
  std::vector<std::string> labels;
};

SplitLayout layout(const Presentation& P, Symbol v, std::size_t parts) {
  SplitLayout L;
  const auto n = P.vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    L.base.push_back(static_cast<Symbol>(u));
    L.part.push_back(static_cast<Symbol>(u) == v ? 0 : -1);
    L.labels.push_back(P.labels()[u]);
  }
  L.labels[v] = P.labels()[v] + ".0";
  for (std::size_t i = 1; i < parts; ++i) {
    L.base.push_back(v);
    L.part.push_back(static_cast<std::ptrdiff_t>(i));
    L.labels.push_back(P.labels()[v] + "." + std::to_string(i));
  }
  return L;
}

bool contains(const std::vector<Symbol>& part, Symbol s) { return std::find(part.begin(), part.end(), s) != part.end(); }

}  // namespace

Presentation out_split(const Presentation& P, Symbol v, const std::vector<std::vector<Symbol>>& parts) {
  if (v < 0 || static_cast<std::size_t>(v) >= P.vertex_count()) throw Error(ErrorKind::InvalidPartition, "no such vertex");
  check_partition(P.successors(v), parts);
  const auto L = layout(P, v, parts.size());
  const auto m = L.base.size();
  Matrix A(m, std::vector<int>(m, 0));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (!P.has_edge(L.base[x], L.base[y])) continue;
      if (L.part[x] >= 0 && !contains(parts[L.part[x]], L.base[y])) continue;
      A[x][y] = 1;
    }
  }
  return build_presentation(A, L.labels);
}

Presentation in_split(const Presentation& P, Symbol v, const std::vector<std::vector<Symbol>>& parts) {
  if (v < 0 || static_cast<std::size_t>(v) >= P.vertex_count()) throw Error(ErrorKind::InvalidPartition, "no such vertex");
  check_partition(P.predecessors(v), parts);
  const auto L = layout(P, v, parts.size());
  const auto m = L.base.size();
  Matrix A(m, std::vector<int>(m, 0));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (!P.has_edge(L.base[x], L.base[y])) continue;
      if (L.part[y] >= 0 && !contains(parts[L.part[y]], L.base[x])) continue;
      A[x][y] = 1;
    }
  }
  return build_presentation(A, L.labels);
}

OrbitEquivalence out_split_conjugacy(std::shared_ptr<const Presentation> P, Symbol v,
                                     const std::vector<std::vector<Symbol>>& parts) {
  auto Q = share(out_split(*P, v, parts));
  const auto n = static_cast<Symbol>(P->vertex_count());
  const auto copy_of = [parts, v, n](Symbol next) -> Symbol {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (contains(parts[i], next)) return i == 0 ? v : n + static_cast<Symbol>(i) - 1;
    }
    return v;
  };
  const std::string tag = "split(" + std::to_string(v) + ")";
  auto forward = sliding_block_code(
      P, Q, 1, [v, copy_of](const Word& w) { return w[0] == v ? copy_of(w[1]) : w[0]; }, tag);
  auto inverse = sliding_block_code(
      Q, P, 0, [v, n](const Word& w) { return w[0] >= n ? v : w[0]; }, "merge(" + std::to_string(v) + ")");
  return {std::move(forward), std::move(inverse)};
}

Matrix attach_head(const Matrix& A, Symbol v) {
  const auto n = A.size();
  if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error(ErrorKind::InvalidArgument, "no such vertex");
  Matrix B(n + 1, std::vector<int>(n + 1, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) B[r][c] = A[r][c];
  }
  B[n][v] = 1;
  return B;
}

}  // namespace sftkit
