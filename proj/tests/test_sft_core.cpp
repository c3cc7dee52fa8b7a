#include "doctest.h"

#include "support.hpp"

using namespace sftkit;
using support::full_shift;
using support::golden_mean;
using support::single_loop;

namespace {

std::vector<std::pair<Symbol, Symbol>> edges(const Presentation& P) {
  std::vector<std::pair<Symbol, Symbol>> out;
  for (std::size_t u = 0; u < P.vertex_count(); ++u) {
    for (Symbol v : P.successors(static_cast<Symbol>(u))) out.emplace_back(static_cast<Symbol>(u), v);
  }
  return out;
}

// Number of admissible extensions of u by `steps` further symbols.
std::uint64_t extension_count(const Presentation& P, const Word& u, std::size_t steps) {
  std::vector<std::uint64_t> ways(P.vertex_count(), 0);
  ways[u.back()] = 1;
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<std::uint64_t> next(P.vertex_count(), 0);
    for (std::size_t v = 0; v < P.vertex_count(); ++v) {
      for (Symbol w : P.successors(static_cast<Symbol>(v))) next[w] += ways[v];
    }
    ways = next;
  }
  std::uint64_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

// The sequence prefix.cycle^inf spelled out to n symbols without the library.
Word spell(const Word& prefix, const Word& cycle, std::size_t n) {
  Word out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(i < prefix.size() ? prefix[i] : cycle[(i - prefix.size()) % cycle.size()]);
  return out;
}

}  // namespace

TEST_CASE("presentations from matrices") {
  const auto full = build_presentation({{1, 1}, {1, 1}});
  CHECK(full.vertex_count() == 2);
  CHECK(full.edge_count() == 4);
  const auto golden = build_presentation({{1, 1}, {1, 0}});
  CHECK(edges(golden) == std::vector<std::pair<Symbol, Symbol>>{{0, 0}, {0, 1}, {1, 0}});
  CHECK_NOTHROW(build_presentation({{1, 0}, {1, 1}}));
  try {
    build_presentation({{0, 0}, {1, 1}});
    FAIL("expected ZeroRowOrColumn");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroRowOrColumn);
  }
  CHECK_THROWS_AS(build_presentation({{1, 2}, {1, 1}}), Error);
  CHECK_THROWS_AS(build_presentation({{1, 1}}), Error);
}

TEST_CASE("forbidden words") {
  const auto golden = from_forbidden_words(2, {{1, 1}});
  CHECK(golden.presentation == build_presentation({{1, 1}, {1, 0}}));
  CHECK(golden.block_length == 1);

  const auto loop = from_forbidden_words(1, {});
  CHECK(loop.presentation.vertex_count() == 1);
  CHECK(loop.presentation.has_edge(0, 0));

  try {
    from_forbidden_words(2, {{0}, {1}});
    FAIL("expected EmptyShift");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyShift);
  }

  const auto three = from_forbidden_words(2, {{0, 0, 0}});
  CHECK(three.block_length == 2);
  CHECK(three.presentation.vertex_count() == 4);
  const Word w{0, 0, 1, 0, 0, 1, 1};
  CHECK(three.decode(three.encode(w)) == w);
  CHECK(three.presentation.admissible(three.encode(w)));
}

TEST_CASE("language") {
  CHECK(language(*full_shift(2), 2) == std::vector<Word>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(language(*golden_mean(), 2) == std::vector<Word>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(language(*golden_mean(), 3) ==
        std::vector<Word>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}});
}

TEST_CASE("language is factorial") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto P = build_presentation(support::random_matrix(rng, 4));
    for (std::size_t m = 2; m <= 5; ++m) {
      const auto longer = language(P, m);
      const auto shorter = language(P, m - 1);
      for (const auto& w : longer) {
        CHECK(std::binary_search(shorter.begin(), shorter.end(), slice(w, 0, m - 1)));
        CHECK(std::binary_search(shorter.begin(), shorter.end(), slice(w, 1, m)));
      }
      CHECK(longer.size() >= shorter.size());
    }
  }
}

TEST_CASE("normalize_point") {
  CHECK(normalize_point({}, {0, 1, 0, 1}) == EvPerPoint{{}, {0, 1}});
  CHECK(normalize_point({0, 1, 1}, {0, 1}) == EvPerPoint{{0, 1}, {1, 0}});
  CHECK(normalize_point({1}, {0}, *golden_mean()) == EvPerPoint{{1}, {0}});
  CHECK_THROWS_AS(normalize_point({1}, {1}, *golden_mean()), Error);
}

TEST_CASE("normalize_point is idempotent and representation independent") {
  Rng rng(5);
  const auto P = full_shift(2);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = random_point(*P, rng, 4, 4);
    CHECK(normalize_point(p.prefix, p.cycle) == p);
    // Pad: unroll some cycle symbols into the prefix and repeat the cycle.
    const auto unroll = rng() % 5;
    const auto repeat = 1 + rng() % 3;
    Word prefix = spell(p.prefix, p.cycle, p.prefix.size() + unroll);
    Word cycle;
    for (std::size_t r = 0; r < repeat; ++r) {
      for (std::size_t i = 0; i < p.cycle.size(); ++i) cycle.push_back(p.cycle[(unroll + i) % p.cycle.size()]);
    }
    const auto q = normalize_point(prefix, cycle);
    CHECK(q == p);
    CHECK(spell(prefix, cycle, 30) == spell(q.prefix, q.cycle, 30));
    CHECK(cycle.size() % least_period(q) == 0);
  }
}

TEST_CASE("shift and least period") {
  CHECK(shift_point({{0, 1}, {1, 0}}, 1) == EvPerPoint{{1}, {1, 0}});
  CHECK(shift_point({{}, {0, 1}}, 2) == EvPerPoint{{}, {0, 1}});
  CHECK(least_period(EvPerPoint{{}, {0, 1}}) == 2);
  CHECK(least_period(EvPerPoint{{1}, {0}}) == 1);
  CHECK(least_period(normalize_point({}, {0, 1, 1, 0})) == 4);
  CHECK_THROWS_AS(shift_point({{}, {0}}, -1), Error);

  const auto x = periodic_bipoint({0, 1, 1});
  CHECK(shift_bipoint(x, static_cast<std::int64_t>(least_period(x))) == x);
  CHECK(shift_bipoint(shift_bipoint(x, 2), -2) == x);
}

TEST_CASE("shift agrees with spelling") {
  Rng rng(8);
  const auto P = golden_mean();
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_point(*P, rng, 4, 4);
    const auto j = static_cast<std::size_t>(rng() % 7);
    const auto q = shift_point(p, static_cast<std::int64_t>(j));
    const auto spelled = spell(p.prefix, p.cycle, j + 20);
    CHECK(first_symbols(q, 20) == Word(spelled.begin() + static_cast<std::ptrdiff_t>(j), spelled.end()));
  }
}

TEST_CASE("bipoints") {
  const auto x = parse_bipoint("01|1|0@0");
  CHECK(format_bipoint(parse_bipoint(format_bipoint(x))) == format_bipoint(x));
  CHECK(coordinate(x, 0) == 1);
  CHECK(coordinate(x, 1) == 0);
  CHECK(coordinate(x, -1) == 1);
  CHECK(coordinate(x, -2) == 0);

  Rng rng(3);
  const auto P = full_shift(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto y = random_bipoint(*P, rng, 4, 3);
    CHECK(bipoint_admissible(*P, y));
    const auto j = static_cast<std::int64_t>(rng() % 9) - 4;
    const auto z = shift_bipoint(y, j);
    for (std::int64_t i = -10; i <= 10; ++i) CHECK(coordinate(z, i) == coordinate(y, i + j));
    const auto t = tail(y, j);
    CHECK(first_symbols(t, 10) == first_symbols(tail(z, 0), 10));
  }
}

TEST_CASE("isolated points") {
  CHECK(is_isolated(*single_loop(), {{}, {0}}));
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) CHECK_FALSE(is_isolated(*golden_mean(), random_point(*golden_mean(), rng, 3, 3)));
  const auto P = build_presentation({{1, 1}, {0, 1}});
  CHECK(is_isolated(P, {{}, {1}}));
  CHECK_FALSE(is_isolated(P, {{}, {0}}));
}

TEST_CASE("points of singleton cylinders are isolated") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto P = build_presentation(support::random_matrix(rng, 4));
    const auto n = P.vertex_count();
    for (std::size_t len = 1; len <= 3; ++len) {
      for (const auto& u : language(P, len)) {
        // A cylinder holds one point iff no continuation ever branches, which
        // shows up within n further symbols.
        const bool singleton = extension_count(P, u, n + 1) == 1;
        // Walk the unique continuation until a vertex repeats.
        Word walk = u;
        std::map<Symbol, std::size_t> seen;
        bool unique_walk = true;
        while (!seen.count(walk.back())) {
          seen[walk.back()] = walk.size() - 1;
          if (P.successors(walk.back()).size() != 1) {
            unique_walk = false;
            break;
          }
          walk.push_back(P.successors(walk.back())[0]);
        }
        CHECK(unique_walk == singleton);
        if (!singleton) continue;
        const auto start = seen[walk.back()];
        const Word prefix(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(start));
        const Word cycle(walk.begin() + static_cast<std::ptrdiff_t>(start), walk.end() - 1);
        CHECK(is_isolated(P, normalize_point(prefix, cycle)));
      }
    }
  }
}

TEST_CASE("cylinder functions") {
  const auto P = full_shift(2);
  const auto f = CylinderFunction::from_table(P, 1, {{{0}, 3}, {{1}, -1}});
  CHECK(f(EvPerPoint{{}, {0, 1}}) == 3);
  CHECK(CylinderFunction::constant(P, 5)(EvPerPoint{{1}, {0}}) == 5);
  const auto g = CylinderFunction::from_table(P, 2, {{{0, 0}, 0}, {{0, 1}, 7}, {{1, 0}, 0}, {{1, 1}, 0}});
  CHECK(g(EvPerPoint{{0}, {1}}) == 7);

  const auto d = f.coboundary();
  CHECK(d.depth() == 2);
  CHECK(d.table() == std::map<Word, Value>{{{0, 0}, 0}, {{0, 1}, 4}, {{1, 0}, -4}, {{1, 1}, 0}});
  CHECK(CylinderFunction::constant(P, 4).coboundary() == CylinderFunction::constant(P, 0));
  CHECK(orbit_sum(d, {0, 1}) == 0);
  try {
    orbit_sum(CylinderFunction::constant(golden_mean(), 1), {1, 1});
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClosed);
  }
}

TEST_CASE("pullback evaluates at the shifted point") {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto P = share(build_presentation(support::random_matrix(rng, 4)));
    const std::size_t depth = 1 + rng() % 3;
    const auto f = CylinderFunction::from_function(P, depth, [&](const Word&) {
      return static_cast<Value>(rng() % 7) - 3;
    });
    const auto pulled = f.pullback();
    for (int s = 0; s < 20; ++s) {
      const auto x = random_point(*P, rng, 3, 3);
      CHECK(pulled(x) == f(shift_point(x, 1)));
      CHECK(f.coboundary()(x) == f(x) - f(shift_point(x, 1)));
    }
    for (const auto& c : support::closed_words(*P, 4)) {
      CHECK(orbit_sum(f, c) == support::direct_orbit_sum(f, c));
      CHECK(orbit_sum(f.coboundary(), c) == 0);
    }
  }
}

TEST_CASE("prefix exchange images") {
  const auto P = full_shift(2);
  const auto h = prefix_exchange(P, P, support::standard_exchange());
  CHECK(h({{}, {0}}) == EvPerPoint{{1}, {0}});
  CHECK(h({{}, {1, 0}}) == EvPerPoint{{}, {0, 1}});
  CHECK(h({{}, {1}}) == EvPerPoint{{}, {1}});

  try {
    prefix_exchange(P, P, {{{0}, {1}}, {{1}, {1}}});
    FAIL("expected InvalidCode");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidCode);
  }
  const auto G = golden_mean();
  CHECK_THROWS_AS(prefix_exchange(G, G, {{{0}, {1}}, {{1}, {0}}}), Error);
}

TEST_CASE("prefix exchanges are bijective on bounded points") {
  Rng rng(17);
  for (int symbols = 2; symbols <= 3; ++symbols) {
    const auto P = full_shift(symbols);
    for (int trial = 0; trial < 10; ++trial) {
      const auto code = support::random_exchange(symbols, rng);
      const auto h = prefix_exchange_equivalence(P, P, code);
      CHECK(check_inverse_pair(h, 3));
      std::set<EvPerPoint> domain;
      for (std::size_t lp = 0; lp <= 3; ++lp) {
        for (std::size_t lc = 1; lc <= 2; ++lc) {
          for (const auto& prefix : lp == 0 ? std::vector<Word>{Word{}} : language(*P, lp)) {
            for (const auto& cycle : language(*P, lc)) domain.insert(normalize_point(prefix, cycle));
          }
        }
      }
      std::set<EvPerPoint> images;
      for (const auto& x : domain) {
        const auto y = h.forward(x);
        const auto word = support::exchange_word(code, spell(x.prefix, x.cycle, 30));
        CHECK(first_symbols(y, 20) == slice(word, 0, 20));
        CHECK(h.inverse(y) == x);
        images.insert(y);
      }
      CHECK(images.size() == domain.size());
    }
  }
}

TEST_CASE("words") {
  CHECK(format_word({}) == "-");
  CHECK(format_word({0, 1, 1}) == "011");
  CHECK(format_word({3, 12, 0}) == "3.12.0");
  CHECK(parse_word("3.12.0") == Word{3, 12, 0});
  CHECK(parse_word("-").empty());
  CHECK(primitive_root({0, 1, 0, 1}) == Word{0, 1});
  CHECK(format_point(parse_point("10/1")) == "10/1");
}
