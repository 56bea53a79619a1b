#include "opeff/studies.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace opeff {

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::Profitability: return "profitability";
    case Criterion::EPair: return "e_pair";
    case Criterion::EPotential: return "e_potential";
  }
  return "?";
}

Criterion parse_criterion(std::string_view name) {
  if (name == "profitability") return Criterion::Profitability;
  if (name == "e_pair") return Criterion::EPair;
  if (name == "e_potential") return Criterion::EPotential;
  throw InvalidSpec("unknown criterion '" + std::string(name) +
                    "' (expected profitability, e_pair or e_potential)");
}

std::optional<double> criterion_value(const MetricsReport& report, Criterion c) {
  switch (c) {
    case Criterion::Profitability: return report.profitability;
    case Criterion::EPair: return report.efficiency_pair;
    case Criterion::EPotential: return report.efficiency_potential;
  }
  return std::nullopt;
}

std::string_view sweep_variable_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::Re: return "re";
    case SweepVariable::Pe: return "pe";
    case SweepVariable::TOp: return "t_op";
  }
  return "?";
}

SweepVariable parse_sweep_variable(std::string_view name) {
  if (name == "re") return SweepVariable::Re;
  if (name == "pe") return SweepVariable::Pe;
  if (name == "t_op") return SweepVariable::TOp;
  throw InvalidSpec("unknown sweep variable '" + std::string(name) +
                    "' (expected re, pe or t_op)");
}

void validate(const SweepSpec& spec) {
  if (spec.grid.empty()) throw InvalidSpec("sweep grid is empty");
  for (double x : spec.grid)
    if (!std::isfinite(x)) throw InvalidSpec("sweep grid values must be finite");
  if (spec.grid.size() > 1) {
    const bool increasing = spec.grid[1] > spec.grid[0];
    for (std::size_t i = 1; i < spec.grid.size(); ++i) {
      const bool step_up = spec.grid[i] > spec.grid[i - 1];
      if (spec.grid[i] == spec.grid[i - 1] || step_up != increasing)
        throw InvalidSpec("sweep grid must be strictly monotone");
    }
  }
  if (spec.criteria.empty()) throw InvalidSpec("sweep requests no criteria");
  const auto fixed_ok = [](double v) { return std::isfinite(v); };
  if (spec.varying != SweepVariable::Re && !fixed_ok(spec.fixed_re))
    throw InvalidSpec("fixed re must be finite");
  if (spec.varying != SweepVariable::Pe && !fixed_ok(spec.fixed_pe))
    throw InvalidSpec("fixed pe must be finite");
  if (spec.varying != SweepVariable::TOp && !fixed_ok(spec.fixed_t_op))
    throw InvalidSpec("fixed t_op must be finite");
}

SweepResult run_sweep(const SweepSpec& spec, const AssessmentConfig& cfg,
                      const DaughterSpec& dspec) {
  validate(spec);
  validate(cfg);
  validate(dspec);

  SweepResult result;
  result.spec = spec;
  result.rows.reserve(spec.grid.size());
  for (double x : spec.grid) {
    SweepRow row;
    row.x = x;
    const double re = spec.varying == SweepVariable::Re ? x : spec.fixed_re;
    const double pe = spec.varying == SweepVariable::Pe ? x : spec.fixed_pe;
    const double t_op = spec.varying == SweepVariable::TOp ? x : spec.fixed_t_op;
    try {
      const MetricsReport report =
          evaluate_lumped(make_lumped(re, pe, 0.0, t_op), cfg, dspec);
      row.values.reserve(spec.criteria.size());
      for (Criterion c : spec.criteria)
        row.values.push_back(criterion_value(report, c));
    } catch (const Error& e) {
      row.error = e.what();
      row.values.assign(spec.criteria.size(), std::nullopt);
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

namespace {

TableStudy fixed_grid_study(int id, std::string title, SweepVariable varying,
                            double fixed_a, double fixed_b,
                            const std::vector<double>& grid,
                            const AssessmentConfig& cfg) {
  TableStudy study;
  study.id = id;
  study.title = std::move(title);
  study.e_variant = Criterion::EPair;
  study.e_decimals = 2;
  study.rows.reserve(grid.size());
  int n = 0;
  for (double x : grid) {
    double re = 0;
    double pe = 0;
    double t_op = 0;
    switch (varying) {
      case SweepVariable::Re: re = x, pe = fixed_a, t_op = fixed_b; break;
      case SweepVariable::Pe: re = fixed_a, pe = x, t_op = fixed_b; break;
      case SweepVariable::TOp: re = fixed_a, pe = fixed_b, t_op = x; break;
    }
    const MetricsReport r =
        evaluate_lumped(make_lumped(re, pe, 0.0, t_op), cfg, DaughterSpec{});
    TableRow row;
    row.n = ++n;
    row.re = re;
    row.pe = pe;
    row.t_op = t_op;
    row.profitability = r.profitability;
    row.e = r.efficiency_pair;
    row.k = r.k;
    study.rows.push_back(row);
  }
  return study;
}

std::vector<double> tenths(int from, int to) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(to - from + 1));
  for (int i = from; i <= to; ++i) grid.push_back(i / 10.0);
  return grid;
}

}  // namespace

TableStudy run_table_study(int table_id, const AssessmentConfig& cfg) {
  validate(cfg);
  switch (table_id) {
    case 1:
      return fixed_grid_study(
          1, "Profitability and pair efficiency as the input value rises",
          SweepVariable::Re, 3.0, 1.0, tenths(20, 26), cfg);
    case 2:
      return fixed_grid_study(
          2, "Profitability and pair efficiency as the output value rises",
          SweepVariable::Pe, 2.0, 1.0, tenths(25, 31), cfg);
    case 3:
      return fixed_grid_study(
          3, "Profitability and pair efficiency as the operation time grows",
          SweepVariable::TOp, 2.0, 3.0,
          {1.0, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7}, cfg);
    case 4: {
      TableStudy study;
      study.id = 4;
      study.title = "Potential efficiency of the reference-set group leads";
      study.e_variant = Criterion::EPotential;
      study.e_decimals = 6;
      const ReferenceSet set = generate_reference_set(ReferenceSetSpec{});
      study.rows.reserve(set.groups.size());
      for (const ReferenceGroup& g : set.groups) {
        const LumpedOperation& lead = g.chain.front();
        const MetricsReport r = evaluate_lumped(lead, cfg, DaughterSpec{});
        TableRow row;
        row.n = g.index;
        row.re = lead.re;
        row.pe = lead.pe;
        row.t_op = lead.t_op();
        row.profitability = r.profitability;
        row.e = r.efficiency_potential;
        row.k = r.k;
        study.rows.push_back(row);
      }
      return study;
    }
    default:
      throw UnknownTable("unknown table id " + std::to_string(table_id) +
                         " (expected 1..4)");
  }
}

RankedCatalog rank_operations(std::span<const CatalogEntry> catalog,
                              Criterion criterion, const AssessmentConfig& cfg,
                              const DaughterSpec& dspec) {
  validate(cfg);
  validate(dspec);
  RankedCatalog out;
  out.criterion = criterion;
  for (const CatalogEntry& entry : catalog) {
    MetricsReport report;
    try {
      if (const auto* lumped = std::get_if<LumpedOperation>(&entry.op))
        report = evaluate_lumped(*lumped, cfg, dspec);
      else
        report = evaluate_flow(std::get<FlowOperation>(entry.op), cfg, dspec);
    } catch (const Error& e) {
      out.invalid.push_back({entry.id, e.what()});
      continue;
    }
    const std::optional<double> value = criterion_value(report, criterion);
    if (!value) {
      out.invalid.push_back(
          {entry.id, std::string(criterion_name(criterion)) +
                         " undefined: requires k > 1 and t_op > 0"});
      continue;
    }
    out.rows.push_back({0, entry.id, *value, std::move(report)});
  }

  std::sort(out.rows.begin(), out.rows.end(),
            [](const RankedRow& a, const RankedRow& b) {
              return a.value != b.value ? a.value > b.value : a.id < b.id;
            });

  // Competition ranks; values within rel_tol of the group anchor share the
  // anchor's rank.
  double anchor = 0;
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    const double v = out.rows[i].value;
    if (i == 0 || std::abs(anchor - v) >
                      cfg.rel_tol * std::max(std::abs(anchor), std::abs(v))) {
      out.rows[i].rank = static_cast<int>(i) + 1;
      anchor = v;
    } else {
      out.rows[i].rank = out.rows[i - 1].rank;
    }
  }
  // Present tied rows in id order.
  for (std::size_t lo = 0; lo < out.rows.size();) {
    std::size_t hi = lo + 1;
    while (hi < out.rows.size() && out.rows[hi].rank == out.rows[lo].rank) ++hi;
    std::sort(out.rows.begin() + static_cast<std::ptrdiff_t>(lo),
              out.rows.begin() + static_cast<std::ptrdiff_t>(hi),
              [](const RankedRow& a, const RankedRow& b) { return a.id < b.id; });
    lo = hi;
  }
  std::sort(out.invalid.begin(), out.invalid.end(),
            [](const InvalidRow& a, const InvalidRow& b) { return a.id < b.id; });
  return out;
}

}  // namespace opeff
