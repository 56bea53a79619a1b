#include "opeff/flow.hpp"

#include <algorithm>
#include <cmath>

namespace opeff {

namespace {

// t_a with its validity checks, given the already-built primitive D.
double completion_time(const FlowOperation& flow, const FlowTotals& tot,
                       const PiecewisePolynomial& d, const AssessmentConfig& cfg) {
  if (!(tot.pe_total > tot.re_total))
    throw NoValueAdded("taco requires total releases to exceed total investments");
  const double va = tot.pe_total - tot.re_total;
  const double t_a =
      (tot.pe_total * tot.t_p_mean - tot.re_total * tot.t_r_mean) / va;

  const double t_last = flow.t_end();
  const double slack = cfg.rel_tol * std::max(1.0, std::abs(t_last));
  if (t_a < t_last - slack)
    throw NonCausalFlow("completion time precedes the last event");

  // D must vanish at t_a up to roundoff.
  const double span = std::max(t_a - flow.t_start(), 1.0);
  const double scale = std::max(tot.re_total, tot.pe_total) * span;
  if (std::abs(d(std::max(t_a, t_last))) > cfg.rel_tol * scale)
    throw std::logic_error("flow completion cross-check failed");
  return t_a;
}

double bound_value_integral(const FlowOperation& flow,
                            const PiecewisePolynomial& d, double t_a) {
  // R = -∫ D over [t_start, t_a]; positive whenever investments are bound
  // before the releases that compensate them.
  const double r = -d.integral(flow.t_start(), t_a);
  if (!(r > 0))
    throw NonCausalFlow("released value precedes the investment it compensates");
  return r;
}

double effect_after(const PiecewisePolynomial& d, double t_a, double t1) {
  // wde(t_a + t1) = ∫ (D - D(t_a)) over [t_a, t_a + t1]; exact on the final
  // constant-slope segment.
  return d.integral(t_a, t_a + t1) - d(t_a) * t1;
}

}  // namespace

FlowTotals flow_totals(const FlowOperation& flow) {
  FlowTotals t;
  double inv_weighted = 0.0;
  double rel_weighted = 0.0;
  for (const FlowEvent& e : flow.events) {
    if (e.amount < 0) {
      t.re_total += -e.amount;
      inv_weighted += -e.amount * e.t;
    } else {
      t.pe_total += e.amount;
      rel_weighted += e.amount * e.t;
    }
  }
  t.t_r_mean = inv_weighted / t.re_total;
  t.t_p_mean = rel_weighted / t.pe_total;
  return t;
}

PiecewisePolynomial cumulative_net(const FlowOperation& flow) {
  std::vector<double> breaks;
  std::vector<PiecewisePolynomial::Segment> segments;
  breaks.reserve(flow.events.size());
  segments.reserve(flow.events.size());
  double level = 0.0;
  for (const FlowEvent& e : flow.events) {
    level += e.amount;
    breaks.push_back(e.t);
    segments.push_back({level, 0.0, 0.0});
  }
  return PiecewisePolynomial(std::move(breaks), std::move(segments));
}

PiecewisePolynomial effect_primitive(const FlowOperation& flow) {
  return cumulative_net(flow).antiderivative();
}

double taco_flow(const FlowOperation& flow, const AssessmentConfig& cfg) {
  validate(cfg);
  return completion_time(flow, flow_totals(flow), effect_primitive(flow), cfg);
}

double resource_intensity_flow(const FlowOperation& flow,
                               const AssessmentConfig& cfg) {
  validate(cfg);
  const PiecewisePolynomial d = effect_primitive(flow);
  const double t_a = completion_time(flow, flow_totals(flow), d, cfg);
  return bound_value_integral(flow, d, t_a);
}

double potential_effect_flow(const FlowOperation& flow,
                             const AssessmentConfig& cfg) {
  validate(cfg);
  const PiecewisePolynomial d = effect_primitive(flow);
  const double t_a = completion_time(flow, flow_totals(flow), d, cfg);
  return effect_after(d, t_a, cfg.t1);
}

double efficiency_flow(const FlowOperation& flow, const AssessmentConfig& cfg) {
  validate(cfg);
  const PiecewisePolynomial d = effect_primitive(flow);
  const double t_a = completion_time(flow, flow_totals(flow), d, cfg);
  return effect_after(d, t_a, cfg.t1) / bound_value_integral(flow, d, t_a);
}

MetricsReport evaluate_flow(const FlowOperation& flow,
                            const AssessmentConfig& cfg,
                            const DaughterSpec& dspec) {
  validate(cfg);
  validate(dspec);

  const FlowTotals tot = flow_totals(flow);
  MetricsReport r;
  r.re = tot.re_total;
  r.pe = tot.pe_total;
  r.t_r = tot.t_r_mean;
  r.t_p = tot.t_p_mean;
  r.t_op = tot.t_p_mean - tot.t_r_mean;
  r.k = tot.pe_total / tot.re_total;
  r.profitability = (tot.pe_total - tot.re_total) / tot.re_total;

  if (tot.pe_total > tot.re_total) {
    const PiecewisePolynomial d = effect_primitive(flow);
    const double t_a = completion_time(flow, tot, d, cfg);
    r.t_a = t_a;
    r.t_d = t_a + cfg.t1;
    r.resource_intensity = bound_value_integral(flow, d, t_a);
    r.potential_effect = effect_after(d, t_a, cfg.t1);
    r.efficiency_potential = *r.potential_effect / *r.resource_intensity;
    if (r.k > 1 && r.t_op > 0) {
      const double td = dspec.t_d_interval;
      r.efficiency_pair = (r.pe - r.re) * td * td / (r.re * r.t_op * r.t_op);
    }
  }
  return r;
}

}  // namespace opeff
