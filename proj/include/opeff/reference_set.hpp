#pragma once

#include <utility>
#include <vector>

#include "opeff/core.hpp"
#include "opeff/lumped.hpp"

namespace opeff {

/// Parameters of the chained test-set generator. Group j runs operations of
/// duration j*base_duration whose rvic is base_growth^j, so chains of
/// different groups that complete at the same time hold the same capital.
struct ReferenceSetSpec {
  double base_re = 3.0;        ///< invested value of every chain's first operation
  double base_duration = 2.0;  ///< operation time of group 1
  double base_growth = 1.1;    ///< value growth per base_duration, must exceed 1
  int group_count = 4;
  double horizon = 16.0;       ///< chains are truncated to completed operations
};

struct ReferenceGroup {
  int index = 0;       ///< 1-based group number
  double duration = 0; ///< operation time of every member
  double growth = 0;   ///< rvic of every member
  std::vector<LumpedOperation> chain;  ///< re of op i+1 is exactly pe of op i
};

struct ReferenceSet {
  ReferenceSetSpec spec;
  std::vector<ReferenceGroup> groups;
};

/// Capitals of the groups whose chains complete an operation at a common
/// time (two or more groups completing together).
struct CapitalMatch {
  double time = 0;
  std::vector<std::pair<int, double>> capitals;  ///< (group index, released value)
  double max_rel_deviation = 0;
};

ReferenceSet generate_reference_set(const ReferenceSetSpec& spec);

std::vector<CapitalMatch> verify_reference_set(const ReferenceSet& set);

/// The released value pe > re for which efficiency_potential(re, pe, t_op)
/// hits target_e: the larger root of pe^2 - (2*re + c)*pe + re^2 = 0 with
/// c = target_e*re*t_op^2/t1^2. The discriminant c^2 + 4*re*c is positive
/// for every valid input, so the closed form never fails.
double calibrate_output_value(double re, double t_op, double target_e,
                              const AssessmentConfig& cfg = {});

/// The next operation of a capitalization chain: the released value funds an
/// operation with the same rvic and duration.
LumpedOperation extend_chain(const LumpedOperation& op);

/// Same chains, but every group's growth is recalibrated so its
/// efficiency_potential matches group 1's.
ReferenceSet calibrate_reference_set(const ReferenceSet& set,
                                     const AssessmentConfig& cfg = {});

}  // namespace opeff
