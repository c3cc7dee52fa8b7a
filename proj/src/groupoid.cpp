#include "sftkit/groupoid.hpp"

#include <algorithm>

#include "sftkit/error.hpp"

namespace sftkit {

namespace {

bool same_rotation_class(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (rotate_left(a, r) == b) return true;
  }
  return false;
}

}  // namespace

GroupoidElement make_element(const EvPerPoint& x0, std::int64_t n, const EvPerPoint& y0) {
  const auto x = normalize_point(x0.prefix, x0.cycle);
  const auto y = normalize_point(y0.prefix, y0.cycle);
  if (!same_rotation_class(x.cycle, y.cycle)) {
    throw Error(ErrorKind::NotTailEquivalent, format_point(x) + " and " + format_point(y));
  }
  const auto px = static_cast<std::int64_t>(x.prefix.size());
  const auto py = static_cast<std::int64_t>(y.prefix.size());
  const auto per = static_cast<std::int64_t>(x.cycle.size());
  const auto last = std::max({px, py + n, n, std::int64_t{0}}) + per;
  for (std::int64_t i = std::max<std::int64_t>(0, n); i <= last; ++i) {
    if (shift_point(x, i) == shift_point(y, i - n)) return {x, n, y, i, i - n};
  }
  throw Error(ErrorKind::DegreeImpossible,
              "no witnesses for (" + format_point(x) + ", " + std::to_string(n) + ", " + format_point(y) + ")");
}

std::pair<std::int64_t, std::int64_t> feasible_degrees(const EvPerPoint& x, const EvPerPoint& y) {
  const auto xn = normalize_point(x.prefix, x.cycle);
  const auto yn = normalize_point(y.prefix, y.cycle);
  if (!same_rotation_class(xn.cycle, yn.cycle)) {
    throw Error(ErrorKind::NotTailEquivalent, format_point(xn) + " and " + format_point(yn));
  }
  const auto per = static_cast<std::int64_t>(xn.cycle.size());
  const auto px = static_cast<std::int64_t>(xn.prefix.size());
  const auto py = static_cast<std::int64_t>(yn.prefix.size());
  const auto a = shift_point(xn, px);
  for (std::int64_t r = 0; r < per; ++r) {
    if (shift_point(yn, py + r) == a) return {px - py - r, per};
  }
  throw Error(ErrorKind::NotTailEquivalent, format_point(xn) + " and " + format_point(yn));
}

GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b) {
  if (a.y != b.x) {
    throw Error(ErrorKind::NotComposable, format_element(a) + " . " + format_element(b));
  }
  return make_element(a.x, a.n + b.n, b.y);
}

GroupoidElement invert(const GroupoidElement& a) { return make_element(a.y, -a.n, a.x); }

GroupoidElement unit(const EvPerPoint& x) { return make_element(x, 0, x); }

std::string format_element(const GroupoidElement& e) {
  return "(" + format_point(e.x) + ", " + std::to_string(e.n) + ", " + format_point(e.y) + ")";
}

Value groupoid_cocycle_eval(const CylinderFunction& g, const GroupoidElement& e) {
  if (e.i < 0 || e.j < 0 || e.i - e.j != e.n || shift_point(e.x, e.i) != shift_point(e.y, e.j)) {
    throw Error(ErrorKind::InvalidElement, format_element(e) + " has bad witnesses");
  }
  return birkhoff_sum(g, e.x, static_cast<std::size_t>(e.i)) - birkhoff_sum(g, e.y, static_cast<std::size_t>(e.j));
}

CylinderBisection make_bisection(const Presentation& P, const Word& u, const Word& v) {
  if (!P.admissible(u) || !P.admissible(v)) {
    throw Error(ErrorKind::InvalidElement, "bisection words " + format_word(u) + "~" + format_word(v));
  }
  const auto followers = [&](const Word& w) {
    if (w.empty()) {
      std::vector<Symbol> all(P.vertex_count());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Symbol>(i);
      return all;
    }
    return P.successors(w.back());
  };
  if (followers(u) != followers(v)) {
    throw Error(ErrorKind::InvalidElement, "bisection " + format_word(u) + "~" + format_word(v) +
                                               " has mismatched followers");
  }
  return {u, v};
}

std::pair<EvPerPoint, std::int64_t> bisection_apply(const CylinderBisection& A, const EvPerPoint& x) {
  if (!in_cylinder(x, A.v)) {
    throw Error(ErrorKind::NotInSource, format_point(x) + " is not in the cylinder of " + format_word(A.v));
  }
  const auto t = shift_point(x, static_cast<std::int64_t>(A.v.size()));
  return {prepend(A.u, t), static_cast<std::int64_t>(A.u.size()) - static_cast<std::int64_t>(A.v.size())};
}

GroupoidElement phi_from_oe_data(const PointMap& h, const CylinderFunction& k, const CylinderFunction& l,
                                 const GroupoidElement& e) {
  const auto lk = l - k;
  const auto degree = groupoid_cocycle_eval(lk, e);
  try {
    return make_element(h(e.x), degree, h(e.y));
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::NotTailEquivalent || err.kind() == ErrorKind::DegreeImpossible) {
      throw Error(ErrorKind::CocycleInconsistent, "image of " + format_element(e) + " with degree " +
                                                      std::to_string(degree) + ": " + err.what());
    }
    throw;
  }
}

GroupoidElement tower_iso(const Tower& T, const TowerGroupoidElement& theta) {
  const auto& e = theta.base;
  const auto top = [&](const EvPerPoint& p) { return T.height(symbol_at(p, 0)); };
  if (theta.i < 0 || theta.i >= top(e.x) || theta.j < 0 || theta.j >= top(e.y)) {
    throw Error(ErrorKind::FloorOutOfRange, "floors (" + std::to_string(theta.i) + ", " + std::to_string(theta.j) +
                                                ") over " + format_element(e));
  }
  const auto climb = [&](const EvPerPoint& p, std::int64_t count) {
    Value total = 0;
    for (std::int64_t h = 1; h <= count; ++h) total += T.height(symbol_at(p, static_cast<std::size_t>(h)));
    return total;
  };
  const auto degree = theta.i - theta.j + climb(e.x, e.i) - climb(e.y, e.j);
  return make_element(T.iota(e.x, theta.i), degree, T.iota(e.y, theta.j));
}

}  // namespace sftkit
