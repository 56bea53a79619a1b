#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "opeff/flow.hpp"
#include "opeff/reference_set.hpp"
#include "opeff/studies.hpp"

namespace opeff::io {

using json = nlohmann::ordered_json;

// --- number and field formatting -----------------------------------------

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

/// Fixed-point rendering with `decimals` places, rounding half away from
/// zero (so 0.125 at 2 decimals is "0.13", matching hand-rounded tables).
std::string format_fixed(double v, int decimals);

/// %g-style rendering with `significant` digits, trailing zeros trimmed.
std::string format_general(double v, int significant);

/// RFC-4180 quoting: the field is quoted when it contains a comma, a quote
/// or a line break, with embedded quotes doubled.
std::string csv_escape(std::string_view field);

// --- ingestion ------------------------------------------------------------

/// Events CSV with header "t,amount"; one signed value impulse per line.
/// Throws ParseError with a 1-based line number on malformed input and
/// propagates flow validation errors from make_flow.
FlowOperation parse_events_csv(std::istream& in);

/// Catalog CSV with header "id,re,pe,t_r,t_p"; ids must be unique. Rows must
/// form valid lumped operations; violations are reported with line numbers.
std::vector<CatalogEntry> parse_catalog_csv(std::istream& in);

/// Sweep spec JSON: {"varying": "re|pe|t_op", "fixed": {...}, "grid": [...],
/// "criteria": [...]}. Syntax errors raise ParseError, semantic ones
/// InvalidSpec.
SweepSpec parse_sweep_spec(std::istream& in);
SweepSpec sweep_spec_from_json(const json& j);

// --- metrics report -------------------------------------------------------

/// Stable schema: {"re","pe","t_r","t_p","t_op","k","profitability","t_a",
/// "t_d","resource_intensity","potential_effect","efficiency_potential",
/// "efficiency_pair"}; absent indicators are null. The JSON round-trips to a
/// bit-identical report.
json report_to_json(const MetricsReport& report);
MetricsReport report_from_json(const json& j);

/// Two-column human-readable rendering; absent indicators print as "null".
std::string render_report_table(const MetricsReport& report);

// --- study output ---------------------------------------------------------

/// CSV with a leading "# ..." annotation naming the E variant. Full-precision
/// columns come first; the *_printed columns carry the fixed-point rendering
/// at the study's printed precision.
std::string table_to_csv(const TableStudy& study);
json table_to_json(const TableStudy& study);

std::string sweep_to_csv(const SweepResult& result);
json sweep_to_json(const SweepResult& result);

std::string ranking_to_csv(const RankedCatalog& ranking);
json ranking_to_json(const RankedCatalog& ranking);

// --- reference set --------------------------------------------------------

/// Time-by-group capital grid plus duration, growth coefficient and
/// e_potential per group; "-" marks times with no completed operation.
std::string render_reference_set(const ReferenceSet& set,
                                 const AssessmentConfig& cfg = {});
json reference_set_to_json(const ReferenceSet& set,
                           const AssessmentConfig& cfg = {});

// --- flow curves ----------------------------------------------------------

/// Samples of the flow curves as CSV "t,ice,d,wde": the net cumulative step
/// function, its running integral and the accumulated effect from the time
/// of actual completion. Sampled at every event time, at t_a and t_a + t1,
/// and on a uniform grid; the wde column is empty before t_a (and entirely
/// empty when the flow never completes).
std::string curves_to_csv(const FlowOperation& flow,
                          const AssessmentConfig& cfg = {});

}  // namespace opeff::io
