#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sftkit/cylinder_function.hpp"
#include "sftkit/orbit.hpp"
#include "sftkit/point.hpp"
#include "sftkit/point_map.hpp"

namespace sftkit {

using Rational = boost::rational<std::int64_t>;

std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& text);

// The data (h, k, l, k', l', b, b', n, n') with
// l - k = n + b - b o sigma, l' - k' = n' + b' - b' o sigma, n, n' >= 0,
// and n - l + b >= 0, n' - l' + b' >= 0 (which b >= l, b' >= l' imply).
struct FlowMapData {
  OrbitEquivalence h;
  CocyclePair pair;
  CocyclePair inverse_pair;
  CylinderFunction n;
  CylinderFunction b;
  CylinderFunction inverse_n;
  CylinderFunction inverse_b;
  Value b_shift = 0;
  Value inverse_b_shift = 0;
  bool strongly_coe = false;
};

// Throws InvalidFlowData unless the identities and bounds above hold on
// every admissible word.
void validate_flow_data(const FlowMapData& D);

// The data for the identity: k = 0, l = 1, b = 0, n = 1 on both sides.
FlowMapData identity_flow_data(std::shared_ptr<const Presentation> P);

// m_x(j): sum_{0<=i<j} n(x_[i,inf)) for j > 0 and
// -sum_{1<=i<=-j} n(x_[-i,inf)) for j < 0.
Value m_eval(const CylinderFunction& n, const BiPoint& x, std::int64_t j);

// phi(x) = sigma^{b(x)}(h(x)) on one-sided points.
EvPerPoint phi_eval(const PointMap& h, const CylinderFunction& b, const EvPerPoint& x);

// The unique y with y_[m_x(-i),inf) = phi(x_[-i,inf)) for all i >= 0.
// Throws DegenerateN when n sums to zero over the left cycle of x, and
// InvalidFlowData when the data do not splice to a point.
BiPoint bold_varphi(const PointMap& h, const CylinderFunction& n, const CylinderFunction& b, const BiPoint& x);
BiPoint bold_varphi(const FlowMapData& D, const BiPoint& x);
// The same construction for (h^-1, n', b').
BiPoint bold_varphi_inverse(const FlowMapData& D, const BiPoint& y);

// r_x(t) = m_x(i) + (t - i) / (j - i) * n(x_[i,inf)) with i <= t < j the
// nearest indices carrying non-zero n. Throws DegenerateN.
Rational r_eval(const CylinderFunction& n, const BiPoint& x, const Rational& t);

// A representative (x, t) of a point of the suspension.
struct SuspensionPoint {
  BiPoint base;
  Rational t;

  friend bool operator==(const SuspensionPoint&, const SuspensionPoint&) = default;
};

// The representative with 0 <= t < 1.
SuspensionPoint normalize_suspension(const SuspensionPoint& s);
std::string format_suspension(const SuspensionPoint& s);

// [(bold_varphi(x), r_x(t))], normalized.
SuspensionPoint psi_eval(const FlowMapData& D, const SuspensionPoint& s);

struct ClaimResult {
  std::string claim;
  std::string point;
  std::string parameters;
  bool pass = false;
  bool inconclusive = false;
  std::string lhs;
  std::string rhs;
};

struct ClaimOptions {
  std::int64_t j_min = -4;
  std::int64_t j_max = 4;
  std::int64_t p_min = -3;
  std::int64_t p_max = 3;
  std::vector<Rational> t_grid;  // empty means quarters in [-2, 2]
  std::size_t max_cycle = 6;
  std::optional<std::int64_t> robert_bound;  // default depends on the point
};

struct ClaimReport {
  std::vector<ClaimResult> results;

  bool passed() const;
  bool inconclusive() const;
  std::size_t failure_count() const;
};

std::vector<Rational> quarter_grid(std::int64_t from, std::int64_t to);

// Checks, for every sample point, the shift equivariance of bold_varphi, the
// time change identity for r, representative independence of psi, the
// one-sided identity phi(sigma x) = sigma^{n(x)} phi(x), and that
// bold_varphi' o bold_varphi is a power of the shift; then least periods on
// all periodic orbits up to max_cycle. Points of Y in sample_y are checked
// with the roles exchanged.
ClaimReport verify_flow_claims(const FlowMapData& D, const std::vector<BiPoint>& sample,
                               const ClaimOptions& options = {}, const std::vector<BiPoint>& sample_y = {});

// The d with sigma^d(x) = z, of least |d| (preferring d >= 0) when x is
// periodic; nullopt when z is not on the orbit of x.
std::optional<std::int64_t> shift_distance(const BiPoint& x, const BiPoint& z);

}  // namespace sftkit
