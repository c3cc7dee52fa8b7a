#include "sftkit/flow.hpp"

#include <algorithm>
#include <map>

#include "sftkit/error.hpp"

namespace sftkit {

namespace {

std::int64_t floor_of(const Rational& q) {
  const auto num = q.numerator();
  const auto den = q.denominator();
  auto f = num / den;
  if (num % den != 0 && num < 0) --f;
  return f;
}

Word window_at(const BiPoint& x, std::int64_t i, std::size_t width) {
  Word w(width);
  for (std::size_t t = 0; t < width; ++t) w[t] = coordinate(x, i + static_cast<std::int64_t>(t));
  return w;
}

Value n_at(const CylinderFunction& n, const BiPoint& x, std::int64_t i) { return n(window_at(x, i, n.window())); }

// The data needed to run the construction in one direction.
struct Side {
  const PointMap* h;
  const CylinderFunction* n;
  const CylinderFunction* b;
  const PointMap* back_h;
  const CylinderFunction* back_n;
  const CylinderFunction* back_b;
  const char* suffix;
};

void check_side_identity(const CylinderFunction& k, const CylinderFunction& l, const CylinderFunction& n,
                         const CylinderFunction& b, const std::string& side) {
  const auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::InvalidFlowData, side + ": " + what);
  };
  if (!k.nonnegative() || !l.nonnegative()) fail("cocycles must be non-negative");
  if (!n.nonnegative()) fail("n must be non-negative");
  if (!b.nonnegative()) fail("b must be non-negative");
  if (!(l - k == n + b.coboundary())) fail("l - k differs from n + b - b o sigma");
  if (!(n - l + b).nonnegative()) fail("n - l + b takes a negative value");
}

Value max_of(const CylinderFunction& f) { return std::max<Value>(0, f.max_value()); }

}  // namespace

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    const auto num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument(text);
    if (slash == std::string::npos) return Rational(num);
    const auto rest = text.substr(slash + 1);
    const auto den = std::stoll(rest, &used);
    if (used != rest.size() || den == 0) throw std::invalid_argument(text);
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "'" + text + "' is not a rational number");
  }
}

void validate_flow_data(const FlowMapData& D) {
  check_side_identity(D.pair.k, D.pair.l, D.n, D.b, "forward");
  check_side_identity(D.inverse_pair.k, D.inverse_pair.l, D.inverse_n, D.inverse_b, "inverse");
}

FlowMapData identity_flow_data(std::shared_ptr<const Presentation> P) {
  FlowMapData D;
  D.h = identity_equivalence(P);
  D.pair = {CylinderFunction::constant(P, 0), CylinderFunction::constant(P, 1)};
  D.inverse_pair = D.pair;
  D.n = CylinderFunction::constant(P, 1);
  D.b = CylinderFunction::constant(P, 0);
  D.inverse_n = D.n;
  D.inverse_b = D.b;
  D.strongly_coe = true;
  return D;
}

Value m_eval(const CylinderFunction& n, const BiPoint& x, std::int64_t j) {
  Value total = 0;
  if (j > 0) {
    for (std::int64_t i = 0; i < j; ++i) total += n_at(n, x, i);
  } else {
    for (std::int64_t i = 1; i <= -j; ++i) total -= n_at(n, x, -i);
  }
  return total;
}

EvPerPoint phi_eval(const PointMap& h, const CylinderFunction& b, const EvPerPoint& x) {
  return shift_point(h(x), b(x));
}

BiPoint bold_varphi(const PointMap& h, const CylinderFunction& n, const CylinderFunction& b, const BiPoint& x0) {
  const auto x = normalize_bipoint(x0.left, x0.middle, x0.right, x0.phase);
  const auto d = static_cast<std::int64_t>(std::max(n.window(), b.window()));
  const auto period = static_cast<std::int64_t>(x.left.size());
  // Coordinate c0 sits at frame f0, far enough left that every tail from c0
  // leftwards starts with d symbols of the left cycle.
  const std::int64_t f0 = std::min(-d, x.phase);
  const std::int64_t c0 = f0 - x.phase;
  Word block;
  for (std::int64_t k = f0 - period; k < f0; ++k) block.push_back(frame_symbol(x, k));
  const auto z = tail(x, c0);

  Value block_sum = 0;
  for (std::int64_t u = 1; u <= period; ++u) block_sum += n_at(n, x, c0 - u);
  if (block_sum == 0) {
    throw Error(ErrorKind::DegenerateN, "n sums to zero over the left cycle of " + format_bipoint(x));
  }
  const Value b_star = b(z);

  std::vector<std::size_t> states{h.initial_state()};
  std::vector<Word> outputs;
  std::map<std::size_t, std::size_t> seen{{h.initial_state(), 0}};
  std::size_t mu = 0;
  while (true) {
    auto [out, next] = h.run_from(states.back(), block);
    outputs.push_back(std::move(out));
    if (const auto it = seen.find(next); it != seen.end()) {
      mu = it->second;
      break;
    }
    seen[next] = states.size();
    states.push_back(next);
  }
  const auto pi = static_cast<Value>(outputs.size() - mu);
  Word head = h.initial_output();
  for (std::size_t q = 0; q < mu; ++q) head.insert(head.end(), outputs[q].begin(), outputs[q].end());
  Word cycle;
  for (std::size_t q = mu; q < outputs.size(); ++q) cycle.insert(cycle.end(), outputs[q].begin(), outputs[q].end());
  if (static_cast<Value>(cycle.size()) != pi * block_sum) {
    throw Error(ErrorKind::InvalidFlowData, "the image of the left cycle of " + format_bipoint(x) + " has length " +
                                                std::to_string(cycle.size()) + " where " +
                                                std::to_string(pi * block_sum) + " is required");
  }
  const auto z_out = h.apply_from(states[mu], z);
  const Value z_pos = m_eval(n, x, c0) - static_cast<Value>(mu) * block_sum - b_star + static_cast<Value>(head.size());
  return normalize_bipoint(cycle, z_out.prefix, z_out.cycle, -z_pos);
}

BiPoint bold_varphi(const FlowMapData& D, const BiPoint& x) { return bold_varphi(D.h.forward, D.n, D.b, x); }

BiPoint bold_varphi_inverse(const FlowMapData& D, const BiPoint& y) {
  return bold_varphi(D.h.inverse, D.inverse_n, D.inverse_b, y);
}

Rational r_eval(const CylinderFunction& n, const BiPoint& x0, const Rational& t) {
  const auto x = normalize_bipoint(x0.left, x0.middle, x0.right, x0.phase);
  const std::int64_t fl = floor_of(t);
  const auto limit = std::abs(fl) + std::abs(x.phase) + static_cast<std::int64_t>(n.window() + x.left.size() +
                                                                                 x.middle.size() + x.right.size()) +
                     2;
  const auto degenerate = [&] {
    return Error(ErrorKind::DegenerateN, "n vanishes on a whole side of " + format_bipoint(x));
  };
  std::int64_t i = fl;
  while (n_at(n, x, i) == 0) {
    if (fl - i > limit) throw degenerate();
    --i;
  }
  std::int64_t j = fl + 1;
  while (n_at(n, x, j) == 0) {
    if (j - fl > limit) throw degenerate();
    ++j;
  }
  return Rational(m_eval(n, x, i)) + (t - Rational(i)) / Rational(j - i) * Rational(n_at(n, x, i));
}

SuspensionPoint normalize_suspension(const SuspensionPoint& s) {
  const auto fl = floor_of(s.t);
  return {shift_bipoint(s.base, fl), s.t - Rational(fl)};
}

std::string format_suspension(const SuspensionPoint& s) {
  return "[" + format_bipoint(s.base) + ", " + format_rational(s.t) + "]";
}

SuspensionPoint psi_eval(const FlowMapData& D, const SuspensionPoint& s) {
  return normalize_suspension({bold_varphi(D, s.base), r_eval(D.n, s.base, s.t)});
}

std::optional<std::int64_t> shift_distance(const BiPoint& x0, const BiPoint& z0) {
  const auto x = normalize_bipoint(x0.left, x0.middle, x0.right, x0.phase);
  const auto z = normalize_bipoint(z0.left, z0.middle, z0.right, z0.phase);
  if (is_periodic(x)) {
    if (!is_periodic(z) || z.left.size() != x.left.size()) return std::nullopt;
    const auto p = static_cast<std::int64_t>(x.left.size());
    std::optional<std::int64_t> best;
    for (std::int64_t d = 0; d < p; ++d) {
      if (shift_bipoint(x, d) != z) continue;
      best = d;
      if (p - d < d) best = d - p;
      break;
    }
    return best;
  }
  if (x.left != z.left || x.middle != z.middle || x.right != z.right) return std::nullopt;
  return z.phase - x.phase;
}

bool ClaimReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.pass; });
}

bool ClaimReport::inconclusive() const {
  return failure_count() == 0 &&
         std::any_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.inconclusive; });
}

std::size_t ClaimReport::failure_count() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const ClaimResult& r) { return !r.pass && !r.inconclusive; }));
}

std::vector<Rational> quarter_grid(std::int64_t from, std::int64_t to) {
  std::vector<Rational> grid;
  for (std::int64_t q = 4 * from; q <= 4 * to; ++q) grid.emplace_back(q, 4);
  return grid;
}

namespace {

void check_point(const Side& s, const BiPoint& x, const ClaimOptions& options, ClaimReport& report) {
  const auto point = format_bipoint(x);
  const auto add = [&](const std::string& claim, const std::string& params, bool pass, const std::string& lhs,
                       const std::string& rhs) {
    report.results.push_back({claim + s.suffix, point, params, pass, false, lhs, rhs});
  };
  const auto varphi = [&](const BiPoint& p) { return bold_varphi(*s.h, *s.n, *s.b, p); };
  const auto image = varphi(x);

  for (std::int64_t j = options.j_min; j <= options.j_max; ++j) {
    const auto lhs = shift_bipoint(image, m_eval(*s.n, x, j));
    const auto rhs = varphi(shift_bipoint(x, j));
    add("lemma2", "j=" + std::to_string(j), lhs == rhs, format_bipoint(lhs), format_bipoint(rhs));

    const auto one_sided = tail(x, j);
    const auto yl = phi_eval(*s.h, *s.b, shift_point(one_sided, 1));
    const auto yr = shift_point(phi_eval(*s.h, *s.b, one_sided), (*s.n)(one_sided));
    add("yap", "i=" + std::to_string(j), yl == yr, format_point(yl), format_point(yr));
  }

  const auto grid = options.t_grid.empty() ? quarter_grid(-2, 2) : options.t_grid;
  for (std::int64_t p = options.p_min; p <= options.p_max; ++p) {
    const auto shifted = shift_bipoint(x, p);
    const auto m_p = m_eval(*s.n, x, p);
    for (const auto& t : grid) {
      const auto params = "p=" + std::to_string(p) + " t=" + format_rational(t);
      const auto lhs = r_eval(*s.n, x, t + Rational(p));
      const auto rhs = r_eval(*s.n, shifted, t) + Rational(m_p);
      add("harrison", params, lhs == rhs, format_rational(lhs), format_rational(rhs));

      const auto psi = [&](const BiPoint& b, const Rational& time) {
        return normalize_suspension({varphi(b), r_eval(*s.n, b, time)});
      };
      const auto sl = psi(shifted, t);
      const auto sr = psi(x, t + Rational(p));
      add("super", params, sl == sr, format_suspension(sl), format_suspension(sr));
    }
  }

  const auto back = bold_varphi(*s.back_h, *s.back_n, *s.back_b, image);
  const auto bound = options.robert_bound.value_or(
      static_cast<std::int64_t>(x.middle.size() + 2 * (x.left.size() + x.right.size())) *
      (1 + max_of(*s.b) + max_of(*s.back_b) + max_of(*s.n) + max_of(*s.back_n)));
  const auto d = shift_distance(x, back);
  ClaimResult r{std::string("robert") + s.suffix, point, "bound=" + std::to_string(bound), false, false,
                format_bipoint(back), ""};
  if (d) {
    r.parameters += " d=" + std::to_string(*d);
    r.rhs = format_bipoint(shift_bipoint(x, *d));
    r.pass = std::abs(*d) <= bound;
    r.inconclusive = !r.pass;
  } else {
    r.rhs = "no shift of " + point;
  }
  report.results.push_back(std::move(r));
}

void check_periodic(const Side& s, const Presentation& P, const ClaimOptions& options, ClaimReport& report) {
  for (const auto& c : periodic_orbits(P, options.max_cycle)) {
    const auto x = periodic_bipoint(c);
    const auto lp = static_cast<std::int64_t>(least_period(x));
    const auto rhs = m_eval(*s.n, x, lp);
    ClaimResult r{std::string("periodic") + s.suffix, format_bipoint(x), "lp=" + std::to_string(lp), false, false,
                  "", std::to_string(rhs)};
    BiPoint image;
    try {
      image = bold_varphi(*s.h, *s.n, *s.b, x);
    } catch (const Error& e) {
      r.lhs = e.what();
      report.results.push_back(std::move(r));
      continue;
    }
    if (is_periodic(image)) {
      const auto lhs = static_cast<Value>(least_period(image));
      r.lhs = std::to_string(lhs);
      r.pass = lhs == rhs;
    } else {
      r.lhs = "aperiodic " + format_bipoint(image);
    }
    report.results.push_back(std::move(r));
  }
}

}  // namespace

ClaimReport verify_flow_claims(const FlowMapData& D, const std::vector<BiPoint>& sample, const ClaimOptions& options,
                               const std::vector<BiPoint>& sample_y) {
  const Side forward{&D.h.forward, &D.n, &D.b, &D.h.inverse, &D.inverse_n, &D.inverse_b, ""};
  const Side inverse{&D.h.inverse, &D.inverse_n, &D.inverse_b, &D.h.forward, &D.n, &D.b, "'"};
  ClaimReport report;
  const auto guarded = [&](const std::string& claim, const std::string& point, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      report.results.push_back({claim, point, "", false, false, e.what(), ""});
    }
  };
  for (const auto& x : sample) {
    guarded("evaluation", format_bipoint(x), [&] { check_point(forward, x, options, report); });
  }
  for (const auto& y : sample_y) {
    guarded("evaluation'", format_bipoint(y), [&] { check_point(inverse, y, options, report); });
  }
  guarded("periodic", "", [&] { check_periodic(forward, D.h.domain(), options, report); });
  guarded("periodic'", "", [&] { check_periodic(inverse, D.h.codomain(), options, report); });
  return report;
}

}  // namespace sftkit
