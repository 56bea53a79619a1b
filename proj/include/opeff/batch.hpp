#pragma once

#include <span>
#include <string>
#include <vector>

#include "opeff/flow.hpp"
#include "opeff/lumped.hpp"

namespace opeff {

// How a batch of independent rows is evaluated.  Serial is the reference
// implementation; Parallel uses OpenMP when available and is verified to be
// bit-identical to Serial; Automatic switches on batch size.
enum class ExecPolicy { Serial, Parallel, Automatic };

// Row count at which Automatic switches to the parallel kernel.
inline constexpr std::size_t kParallelThreshold = 4096;

// Threads the parallel kernel would use (1 when OpenMP is absent).
int batch_threads();

// Per-row result for inputs that can fail row-locally.
struct EvalOutcome {
  MetricsReport report;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

std::vector<MetricsReport> evaluate_all(std::span<const LumpedOperation> ops,
                                        const AssessmentConfig& cfg,
                                        const DaughterSpec& dspec,
                                        ExecPolicy policy = ExecPolicy::Automatic);

std::vector<EvalOutcome> evaluate_all(std::span<const FlowOperation> flows,
                                      const AssessmentConfig& cfg,
                                      const DaughterSpec& dspec,
                                      ExecPolicy policy = ExecPolicy::Automatic);

}  // namespace opeff
