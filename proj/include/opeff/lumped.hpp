#pragma once

#include "opeff/core.hpp"

namespace opeff {

/// Duration of the daughter operation funded by a parent's value added.
struct DaughterSpec {
  double t_d_interval = 1.0;  ///< time units, > 0
};

void validate(const DaughterSpec& spec);

/// pe/re.
double rvic(const LumpedOperation& op);

/// (pe - re)/re. Defined for any valid operation; may be <= 0.
double profitability(const LumpedOperation& op);

/// Time of actual completion: the instant where the cumulative release
/// compensates the cumulative bound investment,
///     t_a = (pe*t_p - re*t_r) / (pe - re).
/// Requires pe > re; the result is never earlier than t_p.
double taco_lumped(const LumpedOperation& op);

/// R = pe*re*t_op^2 / (2*(pe - re)), money * time^2.
double resource_intensity_lumped(const LumpedOperation& op);

/// Resource intensity of the daughter operation that reinvests this
/// operation's value added at the same rvic:
///     R_d = k*T_d^2*(pe - re) / (2*(k - 1)),   k > 1.
double daughter_resource_intensity(const LumpedOperation& parent,
                                   const DaughterSpec& spec = {});

/// Absolute potential effect accumulable over the estimated interval after
/// completion: A = (pe - re)*t1^2 / 2.
double potential_effect_lumped(const LumpedOperation& op,
                               const AssessmentConfig& cfg = {});

/// Global efficiency criterion E = (pe - re)^2 * t1^2 / (pe*re*t_op^2).
/// Identical to potential_effect_lumped / resource_intensity_lumped.
double efficiency_potential(const LumpedOperation& op,
                            const AssessmentConfig& cfg = {});

/// Daughter-to-parent resource intensity ratio. Under equal rvic it reduces
/// to (pe - re)*T_d^2 / (re*t_op^2); with T_d = t_op = 1 this is exactly the
/// profitability.
double efficiency_pair(const LumpedOperation& parent,
                       const DaughterSpec& spec = {});

/// All indicators of one operation. Indicators undefined for k <= 1 or for a
/// zero operation time are left absent rather than reported as zero.
MetricsReport evaluate_lumped(const LumpedOperation& op,
                              const AssessmentConfig& cfg = {},
                              const DaughterSpec& dspec = {});

}  // namespace opeff
