#include "opeff/reference_set.hpp"

#include <algorithm>
#include <cmath>

namespace opeff {

namespace {

void check_spec(const ReferenceSetSpec& spec) {
  if (!std::isfinite(spec.base_re) || !(spec.base_re > 0))
    throw InvalidSpec("base re must be finite and > 0");
  if (!std::isfinite(spec.base_duration) || !(spec.base_duration > 0))
    throw InvalidSpec("base duration must be finite and > 0");
  if (!std::isfinite(spec.base_growth) || !(spec.base_growth > 1))
    throw InvalidSpec("growth must exceed 1");
  if (spec.group_count < 1) throw InvalidSpec("need at least one group");
  if (!std::isfinite(spec.horizon) ||
      spec.horizon < spec.base_duration * spec.group_count)
    throw InvalidSpec("horizon must cover one operation of the slowest group");
}

ReferenceGroup build_group(int index, double base_re, double duration,
                           double growth, double horizon) {
  ReferenceGroup g;
  g.index = index;
  g.duration = duration;
  g.growth = growth;
  // Completed operations only; the epsilon absorbs duration roundoff.
  const int count =
      static_cast<int>(std::floor(horizon / duration * (1.0 + 1e-12)));
  g.chain.reserve(static_cast<std::size_t>(count));
  double capital = base_re;
  for (int i = 0; i < count; ++i) {
    const double released = capital * growth;
    g.chain.push_back(make_lumped(capital, released, i * duration,
                                  (i + 1) * duration));
    capital = released;  // the value added is capitalized
  }
  return g;
}

}  // namespace

ReferenceSet generate_reference_set(const ReferenceSetSpec& spec) {
  check_spec(spec);
  ReferenceSet set;
  set.spec = spec;
  set.groups.reserve(static_cast<std::size_t>(spec.group_count));
  for (int j = 1; j <= spec.group_count; ++j)
    set.groups.push_back(build_group(j, spec.base_re, j * spec.base_duration,
                                     std::pow(spec.base_growth, j),
                                     spec.horizon));
  return set;
}

std::vector<CapitalMatch> verify_reference_set(const ReferenceSet& set) {
  struct Completion {
    double time;
    int group;
    double capital;
  };
  std::vector<Completion> completions;
  for (const ReferenceGroup& g : set.groups)
    for (const LumpedOperation& op : g.chain)
      completions.push_back({op.t_p, g.index, op.pe});
  std::sort(completions.begin(), completions.end(),
            [](const Completion& a, const Completion& b) {
              return a.time != b.time ? a.time < b.time : a.group < b.group;
            });

  std::vector<CapitalMatch> matches;
  const double tol = 1e-9;
  std::size_t i = 0;
  while (i < completions.size()) {
    std::size_t j = i + 1;
    while (j < completions.size() &&
           completions[j].time - completions[i].time <=
               tol * std::max(1.0, std::abs(completions[i].time)))
      ++j;
    if (j - i >= 2) {
      CapitalMatch m;
      m.time = completions[i].time;
      double lo = completions[i].capital;
      double hi = completions[i].capital;
      for (std::size_t s = i; s < j; ++s) {
        m.capitals.emplace_back(completions[s].group, completions[s].capital);
        lo = std::min(lo, completions[s].capital);
        hi = std::max(hi, completions[s].capital);
      }
      m.max_rel_deviation = (hi - lo) / hi;
      matches.push_back(std::move(m));
    }
    i = j;
  }
  return matches;
}

double calibrate_output_value(double re, double t_op, double target_e,
                              const AssessmentConfig& cfg) {
  validate(cfg);
  if (!std::isfinite(re) || !(re > 0))
    throw NonPositiveValue("re must be finite and > 0");
  if (!std::isfinite(t_op) || !(t_op > 0))
    throw ZeroDuration("t_op must be finite and > 0");
  if (!std::isfinite(target_e) || !(target_e > 0))
    throw InvalidTarget("target efficiency must be > 0");

  const double c = target_e * re * t_op * t_op / (cfg.t1 * cfg.t1);
  const double b = 2.0 * re + c;
  // the discriminant b^2 - 4 re^2 factors as c (c + 4 re), which avoids the
  // cancellation that otherwise ruins small targets
  return 0.5 * (b + std::sqrt(c * (c + 4.0 * re)));
}

LumpedOperation extend_chain(const LumpedOperation& op) {
  const double k = op.rvic();
  if (!(k > 1)) throw NoValueAdded("chain extension requires k > 1");
  return make_lumped(op.pe, op.pe * k, op.t_p, op.t_p + op.t_op());
}

ReferenceSet calibrate_reference_set(const ReferenceSet& set,
                                     const AssessmentConfig& cfg) {
  validate(cfg);
  if (set.groups.empty()) throw InvalidSpec("empty reference set");
  const LumpedOperation& lead = set.groups.front().chain.front();
  const double target = efficiency_potential(lead, cfg);

  ReferenceSet out;
  out.spec = set.spec;
  out.groups.reserve(set.groups.size());
  out.groups.push_back(set.groups.front());
  for (std::size_t gi = 1; gi < set.groups.size(); ++gi) {
    const ReferenceGroup& g = set.groups[gi];
    const double base_re = g.chain.front().re;
    const double pe = calibrate_output_value(base_re, g.duration, target, cfg);
    ReferenceGroup calibrated;
    calibrated.index = g.index;
    calibrated.duration = g.duration;
    calibrated.growth = pe / base_re;
    calibrated.chain.reserve(g.chain.size());
    double capital = base_re;
    for (std::size_t i = 0; i < g.chain.size(); ++i) {
      const double released = capital * calibrated.growth;
      calibrated.chain.push_back(make_lumped(capital, released,
                                             static_cast<double>(i) * g.duration,
                                             static_cast<double>(i + 1) * g.duration));
      capital = released;
    }
    out.groups.push_back(std::move(calibrated));
  }
  return out;
}

}  // namespace opeff
