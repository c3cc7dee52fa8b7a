#include "sftkit/pipeline.hpp"

#include "sftkit/cohomology.hpp"

namespace sftkit {

namespace {

void require_least_periods(const PointMap& h, CocyclePair& pair, const PipelineOptions& options) {
  auto result = check_least_period_preserving(h, pair, options.max_cycle);
  if (result.preserving) return;
  if (options.repair) {
    pair = repair_least_period(h, pair, options.max_cycle);
    result = check_least_period_preserving(h, pair, options.max_cycle);
    if (result.preserving) return;
  }
  for (const auto& w : result.witnesses) {
    if (!w.ok) throw LeastPeriodViolationError(w);
  }
}

}  // namespace

PipelineResult coe_to_flow_pipeline(const OrbitEquivalence& h, const PipelineOptions& options) {
  FlowMapData D;
  D.h = h;
  D.pair = derive_cocycle_pair(h.forward, options.max_depth);
  D.inverse_pair = derive_cocycle_pair(h.inverse, options.max_depth);

  const VerifyOptions verify{options.max_cycle, options.extra_depth, options.scoe_depth};
  auto report = verify_coe(h, D.pair, D.inverse_pair, verify);
  if (!report.failures.empty()) {
    const auto& f = report.failures.front();
    throw Error(ErrorKind::CocycleInconsistent, "derived " + f.equation + " cocycles fail on " +
                                                    format_word(f.cylinder) + " at " + format_point(f.point));
  }
  if (report.inconclusive) {
    throw Error(ErrorKind::DepthExceeded,
                "cocycle identity unresolved on " + format_word(report.unresolved.front()) + " within the depth bound");
  }

  require_least_periods(h.forward, D.pair, options);
  require_least_periods(h.inverse, D.inverse_pair, options);
  report.least_period = check_least_period_preserving(h.forward, D.pair, options.max_cycle);
  report.inverse_least_period = check_least_period_preserving(h.inverse, D.inverse_pair, options.max_cycle);

  if (options.scoe) {
    const auto b = find_scoe_transfer(D.pair, options.scoe_depth, options.max_cycle);
    const auto b_inv = find_scoe_transfer(D.inverse_pair, options.scoe_depth, options.max_cycle);
    report.scoe_b = b;
    if (b && b_inv) {
      D.n = CylinderFunction::constant(h.forward.domain_ptr(), 1);
      D.inverse_n = CylinderFunction::constant(h.inverse.domain_ptr(), 1);
      D.b_shift = (D.pair.l - *b).max_value();
      D.inverse_b_shift = (D.inverse_pair.l - *b_inv).max_value();
      D.b = *b + D.b_shift;
      D.inverse_b = *b_inv + D.inverse_b_shift;
      D.strongly_coe = true;
      validate_flow_data(D);
      return {std::move(D), std::move(report)};
    }
  }

  auto forward = decompose_positive(D.pair.l - D.pair.k, D.pair.l);
  auto inverse = decompose_positive(D.inverse_pair.l - D.inverse_pair.k, D.inverse_pair.l);
  D.n = std::move(forward.n);
  D.b = std::move(forward.b);
  D.b_shift = forward.shift;
  D.inverse_n = std::move(inverse.n);
  D.inverse_b = std::move(inverse.b);
  D.inverse_b_shift = inverse.shift;
  validate_flow_data(D);
  return {std::move(D), std::move(report)};
}

}  // namespace sftkit
