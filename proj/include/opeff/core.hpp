#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace opeff {

// Monetary and time quantities are abstract units carried as binary64; there
// is no currency or calendar handling anywhere in the library.

/// Base class of all validation errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPositiveValue : Error { using Error::Error; };
struct InvertedTimes : Error { using Error::Error; };
struct OneSidedFlow : Error { using Error::Error; };
struct NoValueAdded : Error { using Error::Error; };
struct ZeroDuration : Error { using Error::Error; };
struct NonCausalFlow : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };
struct InvalidTarget : Error { using Error::Error; };
struct UnknownTable : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

/// Registration model of one target operation: a single invested value `re`
/// registered at time `t_r` and a single released value `pe` registered at
/// `t_p`. Construct through make_lumped, which enforces re > 0, pe > 0 and
/// t_p >= t_r. Values are immutable by convention after construction.
struct LumpedOperation {
  double re = 0;   ///< cost estimate of input products
  double pe = 0;   ///< cost estimate of output products
  double t_r = 0;  ///< registration time of the investment
  double t_p = 0;  ///< registration time of the release

  /// Operation time.
  double t_op() const { return t_p - t_r; }
  /// Resource value increase coefficient, pe/re.
  double rvic() const { return pe / re; }

  bool operator==(const LumpedOperation&) const = default;
};

LumpedOperation make_lumped(double re, double pe, double t_r, double t_p);

/// One registered value impulse: amount < 0 is an investment, amount > 0 a
/// release.
struct FlowEvent {
  double t = 0;
  double amount = 0;

  bool operator==(const FlowEvent&) const = default;
};

/// Distributed model of an operation: value events sorted ascending by time,
/// events at equal times merged by summation, zero amounts dropped. Build
/// through make_flow; a valid flow has at least one investment and one
/// release.
struct FlowOperation {
  std::vector<FlowEvent> events;

  double t_start() const { return events.front().t; }
  double t_end() const { return events.back().t; }

  bool operator==(const FlowOperation&) const = default;
};

FlowOperation make_flow(std::vector<FlowEvent> events);

/// Assessment parameters shared by the indicator computations.
struct AssessmentConfig {
  double t1 = 1.0;        ///< estimated interval after completion, time units
  double rel_tol = 1e-9;  ///< relative tolerance for internal cross-checks
  int precision = 6;      ///< decimals used when rendering derived tables
};

/// Throws InvalidSpec unless t1 > 0, rel_tol > 0 and precision is sane.
void validate(const AssessmentConfig& cfg);

/// Indicator set of one operation. Fields that require value added (k > 1)
/// or a positive operation time are left absent instead of carrying NaN or a
/// fabricated zero. For flows, re/pe are the value totals and t_r/t_p the
/// value-weighted mean registration times.
struct MetricsReport {
  double re = 0;
  double pe = 0;
  double t_r = 0;
  double t_p = 0;
  double t_op = 0;
  double k = 0;              ///< resource value increase coefficient
  double profitability = 0;  ///< (pe - re)/re, defined for any valid operation

  std::optional<double> t_a;                   ///< time of actual completion
  std::optional<double> t_d;                   ///< t_a + t1
  std::optional<double> resource_intensity;    ///< money * time^2
  std::optional<double> potential_effect;      ///< money * time^2
  std::optional<double> efficiency_potential;  ///< potential_effect / resource_intensity
  std::optional<double> efficiency_pair;       ///< daughter-to-parent intensity ratio

  bool operator==(const MetricsReport&) const = default;
};

}  // namespace opeff
