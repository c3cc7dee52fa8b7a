#pragma once

#include <cstddef>

#include "sftkit/flow.hpp"
#include "sftkit/orbit.hpp"

namespace sftkit {

struct PipelineOptions {
  std::size_t max_depth = 8;
  std::size_t max_cycle = 6;
  std::size_t extra_depth = 6;
  std::size_t scoe_depth = 4;
  bool scoe = false;    // prefer n = 1 when a strong transfer function exists
  bool repair = false;  // attempt the least-period repair before failing
};

struct PipelineResult {
  FlowMapData data;
  COEReport report;
};

// Derives and verifies cocycle pairs for h and h^-1, checks least periods,
// and decomposes l - k = n + b - b o sigma (and the inverse analogue) with b
// shifted so that b >= l. Throws DepthExceeded, CocycleInconsistent,
// LeastPeriodViolationError or NotPositiveClassError.
PipelineResult coe_to_flow_pipeline(const OrbitEquivalence& h, const PipelineOptions& options = {});

}  // namespace sftkit
