#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sftkit/cylinder_function.hpp"
#include "sftkit/error.hpp"
#include "sftkit/point_map.hpp"

namespace sftkit {

// sigma^k(h(sigma x)) = sigma^l(h(x)) for every x.
struct CocyclePair {
  CylinderFunction k;
  CylinderFunction l;

  std::size_t depth() const { return std::max(k.depth(), l.depth()); }
};

// Grows the depth from 1 until every cylinder determines the cocycle
// values, choosing the least k and then the least l on each cylinder.
// Throws DepthExceeded past max_depth.
CocyclePair derive_cocycle_pair(const PointMap& h, std::size_t max_depth);

// Exact check of the cocycle identity at one point.
bool cocycle_identity_holds(const PointMap& h, const CocyclePair& pair, const EvPerPoint& x);

struct EquationFailure {
  std::string equation;  // "forward" or "inverse"
  Word cylinder;
  EvPerPoint point;
  Value k = 0;
  Value l = 0;
  EvPerPoint lhs;  // sigma^k(h(sigma x))
  EvPerPoint rhs;  // sigma^l(h(x))
};

struct PeriodWitness {
  Word cycle;
  std::size_t image_period = 0;
  Value orbit_sum = 0;
  bool ok = false;
};

struct LeastPeriodResult {
  bool preserving = true;
  std::vector<PeriodWitness> witnesses;
};

// For each periodic orbit with cycle length <= max_cycle, compares
// lp(h(x)) with the (l - k) orbit sum.
LeastPeriodResult check_least_period_preserving(const PointMap& h, const CocyclePair& pair, std::size_t max_cycle);

class LeastPeriodViolationError : public Error {
 public:
  explicit LeastPeriodViolationError(PeriodWitness w)
      : Error(ErrorKind::LeastPeriodViolation, "orbit " + format_word(w.cycle) + " has image period " +
                                                   std::to_string(w.image_period) + " but (l-k) sum " +
                                                   std::to_string(w.orbit_sum)),
        witness_(std::move(w)) {}
  const PeriodWitness& witness() const { return witness_; }

 private:
  PeriodWitness witness_;
};

// Best-effort repair: on violating orbits made of isolated points, add a
// multiple of lp(h(x)) to l on the orbit's cylinders when that fixes the sum
// and keeps the identity exact. Returns the pair unchanged otherwise.
CocyclePair repair_least_period(const PointMap& h, const CocyclePair& pair, std::size_t max_cycle);

// b with l - k = 1 + b - b o sigma and depth(b) <= max_depth, if any. Orbit
// sums of l - k - 1 over cycles up to max_cycle are checked first.
std::optional<CylinderFunction> find_scoe_transfer(const CocyclePair& pair, std::size_t max_depth,
                                                   std::size_t max_cycle = 6);

struct COEReport {
  bool verified = false;
  bool inconclusive = false;
  std::size_t depth = 0;
  std::size_t inverse_depth = 0;
  LeastPeriodResult least_period;
  LeastPeriodResult inverse_least_period;
  std::optional<CylinderFunction> scoe_b;
  std::vector<EquationFailure> failures;
  std::vector<Word> unresolved;
};

struct VerifyOptions {
  std::size_t max_cycle = 6;
  std::size_t extra_depth = 6;  // refinement allowed beyond the pair's depth
  std::size_t scoe_depth = 4;
};

// Checks the cocycle identity for (h, pair) and (h^-1, inverse_pair) on
// every cylinder of the pairs' depth, plus least-period preservation and a
// bounded search for a strong transfer function.
COEReport verify_coe(const OrbitEquivalence& h, const CocyclePair& pair, const CocyclePair& inverse_pair,
                     const VerifyOptions& options = {});

}  // namespace sftkit
