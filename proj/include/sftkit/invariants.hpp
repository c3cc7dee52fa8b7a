#pragma once

#include <cstdint>
#include <vector>

#include "sftkit/point_map.hpp"
#include "sftkit/presentation.hpp"

namespace sftkit {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Diagonal of the Smith normal form of M (invariant factors, each dividing
// the next, zeros last). Length is min(rows, cols). Exact; throws
// InvalidArgument on 64-bit overflow.
std::vector<std::int64_t> smith_normal_form(IntMatrix M);
std::int64_t determinant(const IntMatrix& M);

struct InvariantReport {
  std::vector<std::int64_t> snf_diagonal;
  std::int64_t determinant = 0;

  // The diagonal without its unit entries: the cyclic factors of the group.
  std::vector<std::int64_t> group_factors() const;
  // Equal groups and determinants, so matrices of different sizes compare
  // through their group factors.
  friend bool operator==(const InvariantReport& a, const InvariantReport& b) {
    return a.group_factors() == b.group_factors() && a.determinant == b.determinant;
  }
};

// Smith normal form and determinant of I - A.
InvariantReport bowen_franks(const Presentation& P);

// State splittings. Vertex v is replaced by one copy per part; the first copy
// keeps index v and the others are appended in order. An out-split
// partitions the successors of v, an in-split its predecessors. Throws
// InvalidPartition unless the parts are non-empty, disjoint, cover the
// successors (predecessors) and number at least two.
Presentation out_split(const Presentation& P, Symbol v, const std::vector<std::vector<Symbol>>& parts);
Presentation in_split(const Presentation& P, Symbol v, const std::vector<std::vector<Symbol>>& parts);

// The one-sided conjugacy between P and its out-split: forward reads one
// symbol ahead to choose the copy, inverse forgets the copy index.
OrbitEquivalence out_split_conjugacy(std::shared_ptr<const Presentation> P, Symbol v,
                                     const std::vector<std::vector<Symbol>>& parts);

// Adds a vertex with a single edge into v. The result has a source, so it is
// returned as a raw matrix; build_presentation rejects it.
Matrix attach_head(const Matrix& A, Symbol v);

}  // namespace sftkit
