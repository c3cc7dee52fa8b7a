#include "sftkit/orbit.hpp"

#include <algorithm>
#include <map>

#include "sftkit/cohomology.hpp"

namespace sftkit {

namespace {

// The unique point of Z(w) when every vertex reachable from the end of w has
// a single successor.
std::optional<EvPerPoint> singleton_point(const Presentation& P, const Word& w) {
  if (w.empty()) return std::nullopt;
  for (Symbol v : P.reachable(w.back())) {
    if (P.successors(v).size() != 1) return std::nullopt;
  }
  Word path{w.back()};
  std::map<Symbol, std::size_t> seen{{w.back(), 0}};
  while (true) {
    const Symbol next = P.successors(path.back()).front();
    if (const auto it = seen.find(next); it != seen.end()) {
      Word prefix = slice(w, 0, w.size() - 1);
      const auto tail_start = it->second;
      prefix.insert(prefix.end(), path.begin(), path.begin() + static_cast<std::ptrdiff_t>(tail_start));
      return normalize_point(std::move(prefix), slice(path, tail_start, path.size()));
    }
    seen[next] = path.size();
    path.push_back(next);
  }
}

// Least k, then least l, with sigma^k(a) = sigma^l(b).
std::optional<std::pair<Value, Value>> least_alignment(const EvPerPoint& a, const EvPerPoint& b) {
  const auto ka = static_cast<Value>(a.prefix.size() + a.cycle.size());
  const auto lb = static_cast<Value>(b.prefix.size() + b.cycle.size());
  for (Value k = 0; k <= ka; ++k) {
    const auto sa = shift_point(a, k);
    for (Value l = 0; l <= lb; ++l) {
      if (sa == shift_point(b, l)) return std::make_pair(k, l);
    }
  }
  return std::nullopt;
}

// sigma^k(o2 T) = sigma^l(o1 T) for every tail T.
bool formally_equal(const Word& o1, const Word& o2, Value k, Value l) {
  const auto n1 = static_cast<Value>(o1.size());
  const auto n2 = static_cast<Value>(o2.size());
  if (k <= n2 && l <= n1) {
    return n2 - k == n1 - l && std::equal(o2.begin() + k, o2.end(), o1.begin() + l);
  }
  if (k >= n2 && l >= n1) return k - n2 == l - n1;
  return false;
}

bool identity_at(const PointMap& h, Value k, Value l, const EvPerPoint& x) {
  return shift_point(h(shift_point(x, 1)), k) == shift_point(h(x), l);
}

std::vector<EvPerPoint> sample_cylinder(const Presentation& P, const Word& u) {
  std::vector<EvPerPoint> out;
  std::vector<Word> heads{u};
  for (std::size_t len = 0; len < 2; ++len) {
    const auto current = heads;
    for (const auto& h : current) {
      if (h.size() != u.size() + len) continue;
      for (Symbol s : P.successors(h.back())) heads.push_back(concat(h, Word{s}));
    }
  }
  std::vector<Word> cycles;
  for (std::size_t c = 1; c <= 3; ++c) {
    for (const auto& w : language(P, c)) {
      if (P.has_edge(w.back(), w.front())) cycles.push_back(w);
    }
  }
  for (const auto& h : heads) {
    for (const auto& c : cycles) {
      if (P.has_edge(h.back(), c.front())) out.push_back(normalize_point(h, c));
    }
  }
  return out;
}

void check_side(const PointMap& h, const CocyclePair& pair, const std::string& name, const VerifyOptions& options,
                COEReport& report) {
  const auto& X = h.domain();
  const auto D = std::max<std::size_t>(pair.depth(), 1);
  const auto record = [&](const Word& cyl, const EvPerPoint& x, Value K, Value L) {
    report.failures.push_back(
        {name, cyl, x, K, L, shift_point(h(shift_point(x, 1)), K), shift_point(h(x), L)});
  };
  for (const auto& w : language(X, D)) {
    const Value K = pair.k(w);
    const Value L = pair.l(w);
    std::vector<Word> stack{w};
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      const auto [o1, q1] = h.run(u);
      const auto [o2, q2] = h.run(slice(u, 1, u.size()));
      if (q1 == q2) {
        if (formally_equal(o1, o2, K, L)) continue;
        bool found = false;
        for (const auto& x : sample_cylinder(X, u)) {
          if (!identity_at(h, K, L, x)) {
            record(u, x, K, L);
            found = true;
            break;
          }
        }
        if (!found) report.unresolved.push_back(u);
        continue;
      }
      if (const auto x = singleton_point(X, u)) {
        if (!identity_at(h, K, L, *x)) record(u, *x, K, L);
        continue;
      }
      if (u.size() < D + options.extra_depth) {
        for (Symbol s : X.successors(u.back())) stack.push_back(concat(u, Word{s}));
      } else {
        report.unresolved.push_back(u);
      }
    }
  }
}

}  // namespace

CocyclePair derive_cocycle_pair(const PointMap& h, std::size_t max_depth) {
  const auto& X = h.domain();
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::map<Word, Value> k_table, l_table;
    bool resolved = true;
    for (const auto& w : language(X, d)) {
      const auto [o1, q1] = h.run(w);
      const auto [o2, q2] = h.run(slice(w, 1, w.size()));
      if (q1 == q2) {
        const auto n1 = static_cast<Value>(o1.size());
        const auto n2 = static_cast<Value>(o2.size());
        for (Value k = std::max<Value>(0, n2 - n1); k <= n2; ++k) {
          const Value l = k + n1 - n2;
          if (std::equal(o2.begin() + k, o2.end(), o1.begin() + l)) {
            k_table[w] = k;
            l_table[w] = l;
            break;
          }
        }
        continue;
      }
      if (const auto x = singleton_point(X, w)) {
        if (const auto kl = least_alignment(h(shift_point(*x, 1)), h(*x))) {
          k_table[w] = kl->first;
          l_table[w] = kl->second;
          continue;
        }
      }
      resolved = false;
      break;
    }
    if (resolved) {
      return {CylinderFunction::from_table(h.domain_ptr(), d, k_table),
              CylinderFunction::from_table(h.domain_ptr(), d, l_table)};
    }
  }
  throw Error(ErrorKind::DepthExceeded,
              "cocycles of " + h.description() + " not determined at depth " + std::to_string(max_depth));
}

bool cocycle_identity_holds(const PointMap& h, const CocyclePair& pair, const EvPerPoint& x) {
  return identity_at(h, pair.k(x), pair.l(x), x);
}

LeastPeriodResult check_least_period_preserving(const PointMap& h, const CocyclePair& pair, std::size_t max_cycle) {
  LeastPeriodResult result;
  const auto lk = pair.l - pair.k;
  for (const auto& c : periodic_orbits(h.domain(), max_cycle)) {
    PeriodWitness w;
    w.cycle = c;
    w.image_period = least_period(h(EvPerPoint{{}, c}));
    w.orbit_sum = orbit_sum(lk, c);
    w.ok = static_cast<Value>(w.image_period) == w.orbit_sum;
    result.preserving = result.preserving && w.ok;
    result.witnesses.push_back(std::move(w));
  }
  return result;
}

CocyclePair repair_least_period(const PointMap& h, const CocyclePair& pair, std::size_t max_cycle) {
  const auto& X = h.domain();
  const auto D = std::max<std::size_t>(pair.depth(), 1);
  auto k = pair.k.refine(D);
  auto l_table = pair.l.refine(D).table();
  bool changed = false;
  for (const auto& w : check_least_period_preserving(h, pair, max_cycle).witnesses) {
    if (w.ok) continue;
    const EvPerPoint x{{}, w.cycle};
    bool isolated = true;
    for (std::size_t i = 0; i < w.cycle.size() && isolated; ++i) {
      isolated = singleton_point(X, first_symbols(shift_point(x, static_cast<std::int64_t>(i)), D)).has_value();
    }
    const auto p = static_cast<Value>(w.image_period);
    const Value delta = p - w.orbit_sum;
    if (!isolated || delta % p != 0) continue;
    const auto cyl = first_symbols(x, D);
    const Value candidate = l_table.at(cyl) + delta;
    if (candidate < 0 || !identity_at(h, k(cyl), candidate, x)) continue;
    l_table[cyl] = candidate;
    changed = true;
  }
  if (!changed) return pair;
  return {k, CylinderFunction::from_table(pair.l.presentation_ptr(), D, l_table)};
}

std::optional<CylinderFunction> find_scoe_transfer(const CocyclePair& pair, std::size_t max_depth,
                                                   std::size_t max_cycle) {
  const auto g = pair.l - pair.k + Value{-1};
  for (const auto& c : periodic_orbits(g.presentation(), max_cycle)) {
    if (orbit_sum(g, c) != 0) return std::nullopt;
  }
  return solve_coboundary(g, max_depth);
}

COEReport verify_coe(const OrbitEquivalence& h, const CocyclePair& pair, const CocyclePair& inverse_pair,
                     const VerifyOptions& options) {
  COEReport report;
  report.depth = pair.depth();
  report.inverse_depth = inverse_pair.depth();
  check_side(h.forward, pair, "forward", options, report);
  check_side(h.inverse, inverse_pair, "inverse", options, report);
  report.verified = report.failures.empty() && report.unresolved.empty();
  report.inconclusive = report.failures.empty() && !report.unresolved.empty();
  report.least_period = check_least_period_preserving(h.forward, pair, options.max_cycle);
  report.inverse_least_period = check_least_period_preserving(h.inverse, inverse_pair, options.max_cycle);
  report.scoe_b = find_scoe_transfer(pair, options.scoe_depth, options.max_cycle);
  return report;
}

}  // namespace sftkit
