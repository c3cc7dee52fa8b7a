#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sftkit/cylinder_function.hpp"
#include "sftkit/point_map.hpp"
#include "sftkit/tower.hpp"

namespace sftkit {

// (x, n, y) with sigma^i(x) = sigma^j(y) and n = i - j. The witnesses are
// canonical: the least i (and so the least j) that works.
struct GroupoidElement {
  EvPerPoint x;
  std::int64_t n = 0;
  EvPerPoint y;
  std::int64_t i = 0;
  std::int64_t j = 0;

  const EvPerPoint& range() const { return x; }
  const EvPerPoint& source() const { return y; }
  friend bool operator==(const GroupoidElement& a, const GroupoidElement& b) {
    return a.x == b.x && a.n == b.n && a.y == b.y;
  }
};

// Throws NotTailEquivalent when x and y have different tails, and
// DegreeImpossible when they do but not with degree n.
GroupoidElement make_element(const EvPerPoint& x, std::int64_t n, const EvPerPoint& y);
// Degrees n for which (x, n, y) exists: base + period * Z.
std::pair<std::int64_t, std::int64_t> feasible_degrees(const EvPerPoint& x, const EvPerPoint& y);

GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b);
GroupoidElement invert(const GroupoidElement& a);
GroupoidElement unit(const EvPerPoint& x);

std::string format_element(const GroupoidElement& e);

// sum_{i<r} g(sigma^i x) - sum_{j<s} g(sigma^j y) for the element's
// witnesses. Throws InvalidElement if the witnesses do not check out.
Value groupoid_cocycle_eval(const CylinderFunction& g, const GroupoidElement& e);

// The compact open bisection {(u t, |u| - |v|, v t)}.
struct CylinderBisection {
  Word u;
  Word v;
};

// Throws InvalidElement unless u, v are admissible with the same followers.
CylinderBisection make_bisection(const Presentation& P, const Word& u, const Word& v);
// (u t, |u| - |v|) for x = v t; throws NotInSource.
std::pair<EvPerPoint, std::int64_t> bisection_apply(const CylinderBisection& A, const EvPerPoint& x);

// (h(x), sum_{i<r}(l-k)(sigma^i x) - sum_{j<s}(l-k)(sigma^j y), h(y)).
// Throws CocycleInconsistent when the result is not an element.
GroupoidElement phi_from_oe_data(const PointMap& h, const CylinderFunction& k, const CylinderFunction& l,
                                 const GroupoidElement& e);

// An element of the groupoid of the tower: (e, floor over x, floor over y).
struct TowerGroupoidElement {
  GroupoidElement base;
  Value i = 0;
  Value j = 0;
};

// (iota(x, i), i - j + sum_{h=1}^{r} f(sigma^h x) - sum_{h=1}^{s} f(sigma^h y), iota(y, j))
// with (r, s) the canonical witnesses of the base element. Throws FloorOutOfRange.
GroupoidElement tower_iso(const Tower& T, const TowerGroupoidElement& theta);

}  // namespace sftkit
