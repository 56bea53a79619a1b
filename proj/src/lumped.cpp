#include "opeff/lumped.hpp"

#include <cmath>

namespace opeff {

void validate(const DaughterSpec& spec) {
  if (!std::isfinite(spec.t_d_interval) || !(spec.t_d_interval > 0))
    throw InvalidSpec("daughter duration must be finite and > 0");
}

double rvic(const LumpedOperation& op) { return op.pe / op.re; }

double profitability(const LumpedOperation& op) {
  return (op.pe - op.re) / op.re;
}

double taco_lumped(const LumpedOperation& op) {
  if (!(op.pe > op.re)) throw NoValueAdded("taco requires pe > re");
  return (op.pe * op.t_p - op.re * op.t_r) / (op.pe - op.re);
}

double resource_intensity_lumped(const LumpedOperation& op) {
  if (!(op.pe > op.re)) throw NoValueAdded("resource intensity requires pe > re");
  const double t_op = op.t_op();
  if (t_op == 0) throw ZeroDuration("resource intensity requires t_op > 0");
  return op.pe * op.re * t_op * t_op / (2.0 * (op.pe - op.re));
}

double daughter_resource_intensity(const LumpedOperation& parent,
                                   const DaughterSpec& spec) {
  validate(spec);
  const double k = parent.rvic();
  if (!(k > 1)) throw NoValueAdded("daughter resource intensity requires k > 1");
  const double td = spec.t_d_interval;
  return k * td * td * (parent.pe - parent.re) / (2.0 * (k - 1.0));
}

double potential_effect_lumped(const LumpedOperation& op,
                               const AssessmentConfig& cfg) {
  validate(cfg);
  if (!(op.pe > op.re)) throw NoValueAdded("potential effect requires pe > re");
  return (op.pe - op.re) * cfg.t1 * cfg.t1 / 2.0;
}

double efficiency_potential(const LumpedOperation& op,
                            const AssessmentConfig& cfg) {
  validate(cfg);
  if (!(op.pe > op.re)) throw NoValueAdded("efficiency requires pe > re");
  const double t_op = op.t_op();
  if (t_op == 0) throw ZeroDuration("efficiency requires t_op > 0");
  const double va = op.pe - op.re;
  return va * va * cfg.t1 * cfg.t1 / (op.pe * op.re * t_op * t_op);
}

double efficiency_pair(const LumpedOperation& parent, const DaughterSpec& spec) {
  validate(spec);
  if (!(parent.rvic() > 1)) throw NoValueAdded("pair efficiency requires k > 1");
  const double t_op = parent.t_op();
  if (t_op == 0) throw ZeroDuration("pair efficiency requires t_op > 0");
  const double td = spec.t_d_interval;
  // Reduced form of the intensity ratio; with td = t_op = 1 the arithmetic
  // path is the same as profitability's, so the two agree bit for bit.
  return (parent.pe - parent.re) * td * td / (parent.re * t_op * t_op);
}

MetricsReport evaluate_lumped(const LumpedOperation& op,
                              const AssessmentConfig& cfg,
                              const DaughterSpec& dspec) {
  validate(cfg);
  validate(dspec);

  MetricsReport r;
  r.re = op.re;
  r.pe = op.pe;
  r.t_r = op.t_r;
  r.t_p = op.t_p;
  r.t_op = op.t_op();
  r.k = rvic(op);
  r.profitability = profitability(op);

  if (op.pe > op.re) {
    r.t_a = taco_lumped(op);
    r.t_d = *r.t_a + cfg.t1;
    r.potential_effect = potential_effect_lumped(op, cfg);
    if (r.t_op > 0) {
      r.resource_intensity = resource_intensity_lumped(op);
      r.efficiency_potential = efficiency_potential(op, cfg);
      r.efficiency_pair = efficiency_pair(op, dspec);
    }
  }
  return r;
}

}  // namespace opeff
