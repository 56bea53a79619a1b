#include "opeff/core.hpp"

#include <algorithm>
#include <cmath>

namespace opeff {

LumpedOperation make_lumped(double re, double pe, double t_r, double t_p) {
  if (!std::isfinite(re) || !(re > 0))
    throw NonPositiveValue("re must be finite and > 0");
  if (!std::isfinite(pe) || !(pe > 0))
    throw NonPositiveValue("pe must be finite and > 0");
  if (!std::isfinite(t_r) || !std::isfinite(t_p))
    throw InvertedTimes("registration times must be finite");
  if (t_p < t_r) throw InvertedTimes("t_p < t_r");
  return LumpedOperation{re, pe, t_r, t_p};
}

FlowOperation make_flow(std::vector<FlowEvent> events) {
  for (const FlowEvent& e : events)
    if (!std::isfinite(e.t) || !std::isfinite(e.amount))
      throw InvalidSpec("flow events must have finite time and amount");

  std::stable_sort(events.begin(), events.end(),
                   [](const FlowEvent& a, const FlowEvent& b) { return a.t < b.t; });

  // Merge equal-time registrations; a merged net of zero disappears.
  std::vector<FlowEvent> merged;
  merged.reserve(events.size());
  for (const FlowEvent& e : events) {
    if (!merged.empty() && merged.back().t == e.t)
      merged.back().amount += e.amount;
    else
      merged.push_back(e);
  }
  std::erase_if(merged, [](const FlowEvent& e) { return e.amount == 0; });

  bool has_investment = false;
  bool has_release = false;
  for (const FlowEvent& e : merged) {
    has_investment |= e.amount < 0;
    has_release |= e.amount > 0;
  }
  if (!has_investment || !has_release)
    throw OneSidedFlow("one-sided flow: needs at least one investment and one release");

  return FlowOperation{std::move(merged)};
}

void validate(const AssessmentConfig& cfg) {
  if (!std::isfinite(cfg.t1) || !(cfg.t1 > 0))
    throw InvalidSpec("t1 must be finite and > 0");
  if (!std::isfinite(cfg.rel_tol) || !(cfg.rel_tol > 0))
    throw InvalidSpec("rel_tol must be finite and > 0");
  if (cfg.precision < 0 || cfg.precision > 17)
    throw InvalidSpec("precision must be between 0 and 17");
}

}  // namespace opeff
