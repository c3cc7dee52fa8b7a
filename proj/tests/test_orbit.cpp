#include "doctest.h"

#include "support.hpp"

#include "sftkit/flow.hpp"
#include "sftkit/orbit.hpp"
#include "sftkit/pipeline.hpp"

using namespace sftkit;
using support::full_shift;

namespace {

// A random out-split of a random vertex with at least two successors, as a
// conjugacy from P.
std::optional<OrbitEquivalence> random_out_split(std::shared_ptr<const Presentation> P, Rng& rng) {
  std::vector<Symbol> candidates;
  for (std::size_t v = 0; v < P->vertex_count(); ++v) {
    if (P->successors(static_cast<Symbol>(v)).size() >= 2) candidates.push_back(static_cast<Symbol>(v));
  }
  if (candidates.empty()) return std::nullopt;
  const auto v = candidates[rng() % candidates.size()];
  auto succ = P->successors(v);
  std::shuffle(succ.begin(), succ.end(), rng);
  const auto cut = 1 + rng() % (succ.size() - 1);
  std::vector<std::vector<Symbol>> parts{{succ.begin(), succ.begin() + static_cast<std::ptrdiff_t>(cut)},
                                         {succ.begin() + static_cast<std::ptrdiff_t>(cut), succ.end()}};
  for (auto& p : parts) std::sort(p.begin(), p.end());
  return out_split_conjugacy(P, v, parts);
}

Value value_on(const CylinderFunction& f, const Word& w) { return f(w); }

}  // namespace

TEST_CASE("conjugacies have the trivial cocycle pair") {
  Rng rng(51);
  const auto P = full_shift(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = random_out_split(P, rng);
    REQUIRE(h.has_value());
    const auto pair = derive_cocycle_pair(h->forward, 6);
    CHECK(pair.k == CylinderFunction::constant(h->forward.domain_ptr(), 0));
    CHECK(pair.l == CylinderFunction::constant(h->forward.domain_ptr(), 1));
    const auto inverse = derive_cocycle_pair(h->inverse, 6);
    CHECK(inverse.l - inverse.k == CylinderFunction::constant(h->inverse.domain_ptr(), 1));
  }
}

TEST_CASE("derived cocycles for the standard exchange") {
  const auto P = full_shift(2);
  const auto h = prefix_exchange(P, P, support::standard_exchange());
  const auto pair = derive_cocycle_pair(h, 8);
  CHECK(value_on(pair.k, {0, 0, 0, 0}) == 1);
  CHECK(value_on(pair.l, {0, 0, 0, 0}) == 2);
  CHECK(value_on(pair.k, {0, 1, 0, 0}) == 0);
  CHECK(value_on(pair.l, {0, 1, 0, 0}) == 3);
  CHECK(value_on(pair.k, {1, 1, 1, 1}) == 0);
  CHECK(value_on(pair.l, {1, 1, 1, 1}) == 1);
  for (const auto& w : language(*P, pair.depth())) {
    if (w[0] == 1 && w[1] == 0) CHECK(pair.l(w) - pair.k(w) == -1);
  }
}

TEST_CASE("derived cocycles match the finite word oracle") {
  Rng rng(52);
  for (int symbols = 2; symbols <= 3; ++symbols) {
    const auto P = full_shift(symbols);
    for (int trial = 0; trial < 8; ++trial) {
      const auto code = support::random_exchange(symbols, rng);
      const auto h = prefix_exchange(P, P, code);
      const auto pair = derive_cocycle_pair(h, 8);
      for (const auto& w : language(*P, pair.depth())) {
        const auto [k, l] = support::exchange_cocycle_oracle(code, symbols, w, rng);
        CHECK(pair.k(w) == k);
        CHECK(pair.l(w) == l);
      }
      for (int s = 0; s < 30; ++s) CHECK(cocycle_identity_holds(h, pair, random_point(*P, rng, 4, 3)));
    }
  }
}

TEST_CASE("invalid codes are rejected before derivation") {
  const auto G = support::golden_mean();
  try {
    prefix_exchange(G, G, {{{0, 0}, {1}}, {{0, 1}, {0, 1}}, {{1}, {0, 0}}});
    FAIL("expected InvalidCode");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidCode);
  }
}

TEST_CASE("verify_coe") {
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const auto P = share(build_presentation(support::random_matrix(rng, 4)));
    const auto id = identity_equivalence(P);
    const CocyclePair trivial{CylinderFunction::constant(P, 0), CylinderFunction::constant(P, 1)};
    const auto report = verify_coe(id, trivial, trivial);
    CHECK(report.verified);
    CHECK(report.failures.empty());
  }

  const auto P = full_shift(2);
  const auto h = prefix_exchange_equivalence(P, P, support::standard_exchange());
  const auto pair = derive_cocycle_pair(h.forward, 8);
  const auto inverse = derive_cocycle_pair(h.inverse, 8);
  const auto report = verify_coe(h, pair, inverse);
  CHECK(report.verified);
  CHECK(report.least_period.preserving);
  CHECK(report.inverse_least_period.preserving);

  const Word target{0, 1, 0};
  const auto depth = pair.depth();
  const auto corrupted_l = CylinderFunction::from_function(P, depth, [&](const Word& w) {
    return pair.l(w) + (is_prefix(target, w) ? 1 : 0);
  });
  const auto bad = verify_coe(h, {pair.k, corrupted_l}, inverse);
  CHECK_FALSE(bad.verified);
  REQUIRE_FALSE(bad.failures.empty());
  for (const auto& f : bad.failures) {
    CHECK(f.equation == "forward");
    CHECK(is_prefix(target, f.cylinder));
    CHECK(in_cylinder(f.point, target));
    // The reported sides are recomputed directly and differ.
    CHECK(shift_point(h.forward(shift_point(f.point, 1)), f.k) == f.lhs);
    CHECK(shift_point(h.forward(f.point), f.l) == f.rhs);
    CHECK(f.lhs != f.rhs);
  }
}

TEST_CASE("least period preservation") {
  const auto P = full_shift(2);
  const auto h = prefix_exchange(P, P, support::standard_exchange());
  const auto pair = derive_cocycle_pair(h, 8);
  const auto result = check_least_period_preserving(h, pair, 6);
  CHECK(result.preserving);
  std::map<Word, PeriodWitness> by_cycle;
  for (const auto& w : result.witnesses) by_cycle[w.cycle] = w;
  CHECK(by_cycle.at({0}).orbit_sum == 1);
  CHECK(by_cycle.at({0}).image_period == 1);
  CHECK(by_cycle.at({1}).orbit_sum == 1);
  CHECK(by_cycle.at({0, 1}).orbit_sum == 2);
  CHECK(by_cycle.at({0, 1}).image_period == 2);
  for (const auto& c : periodic_orbits(*P, 6)) {
    const auto sum = support::direct_orbit_sum(pair.l.refine(pair.depth()) - pair.k, c);
    CHECK(static_cast<Value>(least_period(h(normalize_point({}, c)))) == sum);
  }

  const auto broken_l = CylinderFunction::from_function(P, pair.depth(), [&](const Word& w) {
    return is_prefix(Word{0, 0, 0}, w) ? pair.k(w) : pair.l(w);
  });
  const auto broken = check_least_period_preserving(h, {pair.k, broken_l}, 6);
  CHECK_FALSE(broken.preserving);
  bool fixed_point_flagged = false;
  for (const auto& w : broken.witnesses) {
    if (w.cycle == Word{0}) fixed_point_flagged = !w.ok && w.orbit_sum == 0;
  }
  CHECK(fixed_point_flagged);

  Rng rng(54);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = random_out_split(P, rng);
    const auto conj = derive_cocycle_pair(g->forward, 6);
    CHECK(check_least_period_preserving(g->forward, conj, 6).preserving);
  }
}

TEST_CASE("strong transfer functions") {
  const auto P = full_shift(2);
  const auto zero = CylinderFunction::constant(P, 0);
  const auto b = find_scoe_transfer({zero, CylinderFunction::constant(P, 1)}, 3);
  REQUIRE(b.has_value());
  CHECK(b->coboundary() == zero);

  CHECK_FALSE(find_scoe_transfer({zero, CylinderFunction::constant(P, 2)}, 4).has_value());

  const auto h = prefix_exchange(P, P, support::standard_exchange());
  const auto pair = derive_cocycle_pair(h, 8);
  const auto transfer = find_scoe_transfer(pair, 4);
  REQUIRE(transfer.has_value());
  for (const auto& w : language(*P, std::max(pair.depth(), transfer->window() + 1))) {
    CHECK(pair.l(w) - pair.k(w) == 1 + (*transfer)(w) - (*transfer)(slice(w, 1, w.size())));
  }

  Rng rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const auto Q = share(build_presentation(support::random_matrix(rng, 3)));
    const auto g = CylinderFunction::from_function(Q, 2, [&](const Word&) { return static_cast<Value>(rng() % 7) - 3; });
    const auto k = CylinderFunction::from_function(Q, 1, [&](const Word&) { return static_cast<Value>(rng() % 3); });
    const auto l = k + 1 + g.coboundary();
    const auto found = find_scoe_transfer({k, l}, 2);
    REQUIRE(found.has_value());
    CHECK(l - k == CylinderFunction::constant(Q, 1) + found->coboundary());
  }
}

TEST_CASE("compositions of verified equivalences verify") {
  Rng rng(56);
  for (int symbols = 2; symbols <= 3; ++symbols) {
    const auto P = full_shift(symbols);
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = prefix_exchange_equivalence(P, P, support::random_exchange(symbols, rng));
      const auto b = prefix_exchange_equivalence(P, P, support::random_exchange(symbols, rng));
      const auto h = compose(a, b);
      CHECK(check_inverse_pair(h, 3));
      const auto pair = derive_cocycle_pair(h.forward, 10);
      const auto inverse = derive_cocycle_pair(h.inverse, 10);
      CHECK(verify_coe(h, pair, inverse).verified);
    }
  }
}

TEST_CASE("pipeline on conjugacies") {
  Rng rng(57);
  auto P = full_shift(2);
  auto h = identity_equivalence(P);
  for (int step = 0; step < 3; ++step) {
    const auto s = random_out_split(h.forward.codomain_ptr(), rng);
    h = compose(h, *s);
  }
  CHECK(bowen_franks(h.domain()) == bowen_franks(h.codomain()));
  PipelineOptions options;
  options.scoe = true;
  const auto result = coe_to_flow_pipeline(h, options);
  CHECK(result.data.strongly_coe);
  CHECK(result.data.n == CylinderFunction::constant(h.forward.domain_ptr(), 1));
  CHECK(result.data.inverse_n == CylinderFunction::constant(h.inverse.domain_ptr(), 1));
  for (int s = 0; s < 30; ++s) {
    const auto x = random_bipoint(h.domain(), rng, 4, 3);
    CHECK(bold_varphi(result.data, shift_bipoint(x, 1)) == shift_bipoint(bold_varphi(result.data, x), 1));
  }
}

TEST_CASE("pipeline on the standard exchange") {
  const auto P = full_shift(2);
  const auto h = prefix_exchange_equivalence(P, P, support::standard_exchange());
  const auto result = coe_to_flow_pipeline(h);
  const auto& D = result.data;
  CHECK(result.report.verified);
  CHECK_NOTHROW(validate_flow_data(D));
  CHECK(D.n.nonnegative());
  CHECK((D.b - D.pair.l).nonnegative());
  CHECK((D.inverse_b - D.inverse_pair.l).nonnegative());
  for (const auto& c : periodic_orbits(*P, 6)) {
    const auto sum = support::direct_orbit_sum(D.pair.l.refine(D.pair.depth()) - D.pair.k, c);
    CHECK(sum == support::direct_orbit_sum(D.n, c));
    CHECK(sum >= 1);
  }
  Rng rng(58);
  std::vector<BiPoint> sample;
  for (int s = 0; s < 10; ++s) sample.push_back(random_bipoint(*P, rng, 4, 3));
  CHECK(verify_flow_claims(D, sample).passed());
}

TEST_CASE("pipeline errors") {
  const auto P = full_shift(2);
  const auto h = prefix_exchange_equivalence(P, P, support::standard_exchange());
  PipelineOptions options;
  options.max_depth = 1;
  try {
    coe_to_flow_pipeline(h, options);
    FAIL("expected DepthExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DepthExceeded);
  }
}
