#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace opeff {

/// Piecewise polynomial of degree <= 2 with coefficients local to each
/// segment: on [breakpoints[i], breakpoints[i+1]) the value is
/// c0 + c1*x + c2*x^2 with x = t - breakpoints[i]. The last segment extends
/// to +infinity and the function is 0 before the first breakpoint. All
/// integrals are exact per-segment closed forms; there is no quadrature.
class PiecewisePolynomial {
 public:
  struct Segment {
    double c0 = 0;
    double c1 = 0;
    double c2 = 0;
  };

  /// Breakpoints strictly ascending, one segment per breakpoint.
  PiecewisePolynomial(std::vector<double> breakpoints,
                      std::vector<Segment> segments);

  double operator()(double t) const;

  /// Running integral from the first breakpoint; continuous, one degree
  /// higher. Only defined for degree <= 1 inputs.
  PiecewisePolynomial antiderivative() const;

  /// Exact definite integral over [a, b], a <= b.
  double integral(double a, double b) const;

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const Segment> segments() const { return segments_; }
  double domain_start() const { return breakpoints_.front(); }
  int degree() const;

 private:
  std::size_t segment_index(double t) const;

  std::vector<double> breakpoints_;
  std::vector<Segment> segments_;
};

}  // namespace opeff
