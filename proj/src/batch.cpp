#include "opeff/batch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace opeff {

int batch_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

bool use_parallel(ExecPolicy policy, std::size_t n) {
  switch (policy) {
    case ExecPolicy::Serial:
      return false;
    case ExecPolicy::Parallel:
      return true;
    case ExecPolicy::Automatic:
      return n >= kParallelThreshold;
  }
  return false;
}

}  // namespace

std::vector<MetricsReport> evaluate_all(std::span<const LumpedOperation> ops,
                                        const AssessmentConfig& cfg,
                                        const DaughterSpec& dspec,
                                        ExecPolicy policy) {
  validate(cfg);
  validate(dspec);
  std::vector<MetricsReport> out(ops.size());
  const auto n = static_cast<std::ptrdiff_t>(ops.size());
  if (use_parallel(policy, ops.size())) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i)
      out[static_cast<std::size_t>(i)] =
          evaluate_lumped(ops[static_cast<std::size_t>(i)], cfg, dspec);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i)
      out[static_cast<std::size_t>(i)] =
          evaluate_lumped(ops[static_cast<std::size_t>(i)], cfg, dspec);
  }
  return out;
}

std::vector<EvalOutcome> evaluate_all(std::span<const FlowOperation> flows,
                                      const AssessmentConfig& cfg,
                                      const DaughterSpec& dspec,
                                      ExecPolicy policy) {
  validate(cfg);
  validate(dspec);
  std::vector<EvalOutcome> out(flows.size());
  const auto n = static_cast<std::ptrdiff_t>(flows.size());
  auto eval_row = [&](std::ptrdiff_t i) {
    EvalOutcome& slot = out[static_cast<std::size_t>(i)];
    try {
      slot.report = evaluate_flow(flows[static_cast<std::size_t>(i)], cfg, dspec);
    } catch (const Error& e) {
      slot.error = e.what();
    }
  };
  if (use_parallel(policy, flows.size())) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) eval_row(i);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) eval_row(i);
  }
  return out;
}

}  // namespace opeff
