#pragma once

#include "opeff/core.hpp"
#include "opeff/lumped.hpp"
#include "opeff/piecewise.hpp"

namespace opeff {

/// Value totals and value-weighted mean registration times of a flow.
struct FlowTotals {
  double re_total = 0;  ///< sum of investment magnitudes
  double pe_total = 0;  ///< sum of release amounts
  double t_r_mean = 0;  ///< value-weighted mean investment time
  double t_p_mean = 0;  ///< value-weighted mean release time
};

FlowTotals flow_totals(const FlowOperation& flow);

/// Net cumulative registered value: a step function jumping at event times,
/// zero before the first event, final level pe_total - re_total.
PiecewisePolynomial cumulative_net(const FlowOperation& flow);

/// D(t): running integral of cumulative_net from the first event. Piecewise
/// linear and continuous, final slope pe_total - re_total. The effect
/// function on [t_a, t_d] is vde(tau) = D(tau) - D(t_a), and D(t_a) = 0.
PiecewisePolynomial effect_primitive(const FlowOperation& flow);

/// Time of actual completion of the flow,
///     t_a = (PE*t_p_mean - RE*t_r_mean) / (PE - RE),
/// the zero of D on the final segment. Throws NoValueAdded when PE <= RE and
/// NonCausalFlow when the closed form lands before the last event (the zero
/// is then not on the final segment).
double taco_flow(const FlowOperation& flow, const AssessmentConfig& cfg = {});

/// Double integral of cumulative bound-minus-released value over
/// [t_start, t_a]; equals -integral of D over that interval and, impulse by
/// impulse, sum(|a_i|*(t_a - t_i)^2/2) signed. For a two-impulse flow this
/// is the lumped pe*re*t_op^2/(2*(pe - re)).
double resource_intensity_flow(const FlowOperation& flow,
                               const AssessmentConfig& cfg = {});

/// wde(t_a + t1): second primitive of the net step taken from t_a. On the
/// final segment the net is the constant PE - RE, so this equals
/// (PE - RE)*t1^2/2.
double potential_effect_flow(const FlowOperation& flow,
                             const AssessmentConfig& cfg = {});

/// potential_effect_flow / resource_intensity_flow.
double efficiency_flow(const FlowOperation& flow,
                       const AssessmentConfig& cfg = {});

/// All indicators of one flow. re/pe/t_r/t_p in the report carry the totals
/// and weighted mean times; the pair efficiency uses
/// t_op = t_p_mean - t_r_mean and is absent when that is not positive.
MetricsReport evaluate_flow(const FlowOperation& flow,
                            const AssessmentConfig& cfg = {},
                            const DaughterSpec& dspec = {});

}  // namespace opeff
