#include "doctest.h"

#include "support.hpp"

#include "sftkit/groupoid.hpp"
#include "sftkit/orbit.hpp"
#include "sftkit/tower.hpp"

using namespace sftkit;
using support::full_shift;

namespace {

EvPerPoint pt(const char* text) { return parse_point(text); }

Word spell(const EvPerPoint& p, std::size_t n) {
  Word out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < p.prefix.size() ? p.prefix[i] : p.cycle[(i - p.prefix.size()) % p.cycle.size()]);
  }
  return out;
}

// sigma^i x = sigma^j y compared on spelled words long enough to cover both
// prefixes and several cycles.
bool witnesses_hold(const EvPerPoint& x, std::int64_t i, const EvPerPoint& y, std::int64_t j) {
  if (i < 0 || j < 0) return false;
  const std::size_t len = 48;
  const auto a = spell(x, static_cast<std::size_t>(i) + len);
  const auto b = spell(y, static_cast<std::size_t>(j) + len);
  return std::equal(a.begin() + i, a.end(), b.begin() + j);
}

// A random word u with u . t admissible, built backwards from t_0.
Word random_lead(const Presentation& P, Rng& rng, const EvPerPoint& t, std::size_t max_length) {
  Word u;
  Symbol next = symbol_at(t, 0);
  const auto length = rng() % (max_length + 1);
  for (std::size_t s = 0; s < length; ++s) {
    const auto& preds = P.predecessors(next);
    next = preds[rng() % preds.size()];
    u.insert(u.begin(), next);
  }
  return u;
}

GroupoidElement random_element(const Presentation& P, Rng& rng, std::size_t bound) {
  const auto t = random_point(P, rng, bound, bound);
  const auto x = prepend(random_lead(P, rng, t, bound), t);
  const auto y = prepend(random_lead(P, rng, t, bound), t);
  const auto [base, period] = feasible_degrees(x, y);
  const auto n = base + period * (static_cast<std::int64_t>(rng() % 5) - 2);
  return make_element(x, n, y);
}

}  // namespace

TEST_CASE("elements and witnesses") {
  const auto e = make_element(pt("/0"), -1, pt("1/0"));
  CHECK(e.i == 0);
  CHECK(e.j == 1);
  const auto u = make_element(pt("01/1"), 0, pt("01/1"));
  CHECK(u.i == 0);
  CHECK(u.j == 0);
  try {
    make_element(pt("/0"), 1, pt("/1"));
    FAIL("expected NotTailEquivalent");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotTailEquivalent);
  }
  try {
    make_element(pt("/01"), 0, pt("/10"));
    FAIL("expected DegreeImpossible");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::DegreeImpossible);
  }
}

TEST_CASE("composition and inversion examples") {
  const auto a = make_element(pt("/0"), -1, pt("1/0"));
  const auto b = make_element(pt("1/0"), 1, pt("/0"));
  CHECK(compose(a, b) == unit(pt("/0")));
  CHECK(invert(invert(a)) == a);
  const auto c = compose(make_element(pt("/01"), 1, pt("/10")), make_element(pt("/10"), 1, pt("/01")));
  CHECK(c == make_element(pt("/01"), 2, pt("/01")));
  CHECK_THROWS_AS(compose(a, a), Error);
}

TEST_CASE("canonical witnesses are least") {
  Rng rng(41);
  const auto P = full_shift(2);
  for (int trial = 0; trial < 400; ++trial) {
    const auto e = random_element(*P, rng, 3);
    CHECK(e.i - e.j == e.n);
    CHECK(witnesses_hold(e.x, e.i, e.y, e.j));
    if (e.i > 0 && e.j > 0) CHECK_FALSE(witnesses_hold(e.x, e.i - 1, e.y, e.j - 1));
  }
}

TEST_CASE("groupoid axioms") {
  Rng rng(42);
  const auto P = support::golden_mean();
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_element(*P, rng, 3);
    const auto y = a.y;
    const auto [base, period] = feasible_degrees(y, y);
    CHECK(base % period == 0);
    const auto lead = random_lead(*P, rng, y, 3);
    const auto z = prepend(lead, shift_point(y, static_cast<std::int64_t>(rng() % 3)));
    const auto [bz, pz] = feasible_degrees(y, z);
    const auto b = make_element(y, bz + pz * (static_cast<std::int64_t>(rng() % 3) - 1), z);
    const auto [bw, pw] = feasible_degrees(z, a.x);
    const auto c = make_element(z, bw + pw * (static_cast<std::int64_t>(rng() % 3) - 1), a.x);

    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(unit(a.x), a) == a);
    CHECK(compose(a, unit(a.y)) == a);
    CHECK(compose(a, invert(a)) == unit(a.x));
    CHECK(compose(invert(a), a) == unit(a.y));
    CHECK(compose(a, b).n == a.n + b.n);
  }
}

TEST_CASE("cocycle evaluation") {
  const auto P = full_shift(2);
  const auto e = make_element(pt("/0"), -1, pt("1/0"));
  CHECK(groupoid_cocycle_eval(CylinderFunction::constant(P, 1), e) == -1);
  const auto g = CylinderFunction::from_table(P, 1, {{{0}, 2}, {{1}, 5}});
  CHECK(groupoid_cocycle_eval(g, e) == -5);
  CHECK(groupoid_cocycle_eval(g, unit(pt("10/1"))) == 0);

  auto bad = e;
  bad.j = 2;
  CHECK_THROWS_AS(groupoid_cocycle_eval(g, bad), Error);

  Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = CylinderFunction::from_function(P, 2, [&](const Word&) { return static_cast<Value>(rng() % 9) - 4; });
    const auto a = random_element(*P, rng, 3);
    CHECK(groupoid_cocycle_eval(h.coboundary(), a) == h(a.x) - h(a.y));
    Value direct = 0;
    const auto xs = spell(a.x, static_cast<std::size_t>(a.i) + 2);
    const auto ys = spell(a.y, static_cast<std::size_t>(a.j) + 2);
    for (std::int64_t r = 0; r < a.i; ++r) direct += h.table().at({xs[r], xs[r + 1]});
    for (std::int64_t s = 0; s < a.j; ++s) direct -= h.table().at({ys[s], ys[s + 1]});
    CHECK(groupoid_cocycle_eval(h, a) == direct);
    const auto b = random_element(*P, rng, 3);
    if (a.y == b.x) CHECK(groupoid_cocycle_eval(h, compose(a, b)) == groupoid_cocycle_eval(h, a) + groupoid_cocycle_eval(h, b));
  }
}

TEST_CASE("cylinder bisections") {
  const auto P = full_shift(2);
  const auto id = make_bisection(*P, {}, {});
  CHECK(bisection_apply(id, pt("1/01")) == std::pair<EvPerPoint, std::int64_t>{pt("1/01"), 0});
  const auto A = make_bisection(*P, {1, 0}, {0});
  CHECK(bisection_apply(A, pt("/0")) == std::pair<EvPerPoint, std::int64_t>{pt("1/0"), 1});
  try {
    bisection_apply(A, pt("/1"));
    FAIL("expected NotInSource");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInSource);
  }
  const auto G = support::golden_mean();
  CHECK_THROWS_AS(make_bisection(*G, {1}, {0}), Error);
}

TEST_CASE("elements induced by orbit equivalence data") {
  const auto P = full_shift(2);
  const auto id = identity_map(P);
  const auto zero = CylinderFunction::constant(P, 0);
  const auto one = CylinderFunction::constant(P, 1);
  Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const auto e = random_element(*P, rng, 3);
    CHECK(phi_from_oe_data(id, zero, one, e) == e);
  }

  const auto h = prefix_exchange(P, P, support::standard_exchange());
  const auto pair = derive_cocycle_pair(h, 8);
  CHECK(phi_from_oe_data(h, pair.k, pair.l, unit(pt("/0"))) == unit(pt("1/0")));
  CHECK(phi_from_oe_data(h, pair.k, pair.l, make_element(pt("/01"), 2, pt("/01"))) ==
        make_element(pt("/10"), 2, pt("/10")));

  // Composition is preserved.
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_element(*P, rng, 3);
    const auto [base, period] = feasible_degrees(a.y, a.x);
    const auto b = make_element(a.y, base + period * (static_cast<std::int64_t>(rng() % 3) - 1), a.x);
    const auto lhs = phi_from_oe_data(h, pair.k, pair.l, compose(a, b));
    const auto rhs = compose(phi_from_oe_data(h, pair.k, pair.l, a), phi_from_oe_data(h, pair.k, pair.l, b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tower groupoid examples") {
  const auto L = support::single_loop();
  const auto x = pt("/0");

  const auto T1 = Tower(CylinderFunction::constant(L, 1));
  const auto e = unit(x);
  CHECK(tower_iso(T1, {e, 0, 0}) == unit(T1.iota(x, 0)));

  const auto T = Tower(CylinderFunction::constant(L, 2));
  CHECK(tower_iso(T, {unit(x), 1, 0}) == make_element(T.iota(x, 1), 1, T.iota(x, 0)));
  const auto loop = make_element(x, 1, x);
  CHECK(loop.i == 1);
  CHECK(loop.j == 0);
  CHECK(tower_iso(T, {loop, 0, 0}) == make_element(T.iota(x, 0), 2, T.iota(x, 0)));
  try {
    tower_iso(T, {unit(x), 2, 0});
    FAIL("expected FloorOutOfRange");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::FloorOutOfRange);
  }
}

TEST_CASE("tower isomorphism is a groupoid homomorphism") {
  Rng rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const auto P = share(build_presentation(support::random_matrix(rng, 3)));
    const auto f = CylinderFunction::from_function(P, 1, [&](const Word&) { return static_cast<Value>(1 + rng() % 3); });
    const Tower T(f);
    std::map<std::string, std::string> preimage;
    for (int s = 0; s < 20; ++s) {
      const auto a = random_element(*P, rng, 3);
      const auto [base, period] = feasible_degrees(a.y, a.x);
      const auto b = make_element(a.y, base + period * (static_cast<std::int64_t>(rng() % 3) - 1), a.x);
      const Value i = static_cast<Value>(rng() % static_cast<std::uint64_t>(f(a.x)));
      const Value j = static_cast<Value>(rng() % static_cast<std::uint64_t>(f(a.y)));
      const Value k = static_cast<Value>(rng() % static_cast<std::uint64_t>(f(b.y)));
      const auto ta = tower_iso(T, {a, i, j});
      const auto tb = tower_iso(T, {b, j, k});
      CHECK(tower_iso(T, {compose(a, b), i, k}) == compose(ta, tb));
      CHECK(tower_iso(T, {invert(a), j, i}) == invert(ta));
      CHECK(T.iota_inverse(ta.x) == std::pair<EvPerPoint, Value>{a.x, i});
      CHECK(T.iota_inverse(ta.y) == std::pair<EvPerPoint, Value>{a.y, j});
      const auto theta = format_element(a) + " " + std::to_string(i) + " " + std::to_string(j);
      const auto [it, fresh] = preimage.emplace(format_element(ta), theta);
      if (!fresh) CHECK(it->second == theta);
    }
  }
}
