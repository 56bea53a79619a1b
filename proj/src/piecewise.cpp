#include "opeff/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace opeff {

namespace {

// Integral of c0 + c1*x + c2*x^2 over local [x0, x1].
double segment_integral(const PiecewisePolynomial::Segment& s, double x0, double x1) {
  const double p0 = s.c0 * x0 + s.c1 * x0 * x0 / 2.0 + s.c2 * x0 * x0 * x0 / 3.0;
  const double p1 = s.c0 * x1 + s.c1 * x1 * x1 / 2.0 + s.c2 * x1 * x1 * x1 / 3.0;
  return p1 - p0;
}

}  // namespace

PiecewisePolynomial::PiecewisePolynomial(std::vector<double> breakpoints,
                                         std::vector<Segment> segments)
    : breakpoints_(std::move(breakpoints)), segments_(std::move(segments)) {
  if (breakpoints_.empty() || breakpoints_.size() != segments_.size())
    throw std::invalid_argument("piecewise: need one segment per breakpoint");
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i]))
      throw std::invalid_argument("piecewise: breakpoints must be finite");
    if (i > 0 && !(breakpoints_[i - 1] < breakpoints_[i]))
      throw std::invalid_argument("piecewise: breakpoints must be strictly ascending");
  }
}

std::size_t PiecewisePolynomial::segment_index(double t) const {
  // Right-continuous: t equal to a breakpoint selects the segment it opens.
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

double PiecewisePolynomial::operator()(double t) const {
  if (t < breakpoints_.front()) return 0.0;
  const std::size_t i = segment_index(t);
  const double x = t - breakpoints_[i];
  const Segment& s = segments_[i];
  return s.c0 + s.c1 * x + s.c2 * x * x;
}

int PiecewisePolynomial::degree() const {
  int d = 0;
  for (const Segment& s : segments_) {
    if (s.c2 != 0) return 2;
    if (s.c1 != 0) d = 1;
  }
  return d;
}

PiecewisePolynomial PiecewisePolynomial::antiderivative() const {
  std::vector<Segment> out(segments_.size());
  double accumulated = 0.0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    if (s.c2 != 0)
      throw std::logic_error("piecewise: antiderivative would exceed degree 2");
    out[i] = Segment{accumulated, s.c0, s.c1 / 2.0};
    if (i + 1 < segments_.size()) {
      const double h = breakpoints_[i + 1] - breakpoints_[i];
      accumulated += segment_integral(s, 0.0, h);
    }
  }
  return PiecewisePolynomial(breakpoints_, std::move(out));
}

double PiecewisePolynomial::integral(double a, double b) const {
  if (!(a <= b)) throw std::invalid_argument("piecewise: integral needs a <= b");
  // The function vanishes before the domain.
  a = std::max(a, breakpoints_.front());
  b = std::max(b, breakpoints_.front());
  if (a == b) return 0.0;

  double total = 0.0;
  for (std::size_t i = segment_index(a); i < segments_.size(); ++i) {
    const double start = breakpoints_[i];
    const double end = (i + 1 < breakpoints_.size())
                           ? breakpoints_[i + 1]
                           : std::numeric_limits<double>::infinity();
    const double lo = std::max(a, start);
    const double hi = std::min(b, end);
    if (hi > lo) total += segment_integral(segments_[i], lo - start, hi - start);
    if (end >= b) break;
  }
  return total;
}

}  // namespace opeff
