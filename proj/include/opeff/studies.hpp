#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opeff/batch.hpp"
#include "opeff/reference_set.hpp"

namespace opeff {

/// Scoring criteria a study or ranking can compute.
enum class Criterion { Profitability, EPair, EPotential };

std::string_view criterion_name(Criterion c);
Criterion parse_criterion(std::string_view name);  // throws InvalidSpec

/// Criterion value out of a finished report; absent when the report does not
/// define it (k <= 1 or zero operation time).
std::optional<double> criterion_value(const MetricsReport& report, Criterion c);

/// Which operation parameter a sweep varies; the other two stay fixed.
enum class SweepVariable { Re, Pe, TOp };

std::string_view sweep_variable_name(SweepVariable v);
SweepVariable parse_sweep_variable(std::string_view name);  // throws InvalidSpec

struct SweepSpec {
  SweepVariable varying = SweepVariable::Re;
  double fixed_re = 0;    // used unless varying == Re
  double fixed_pe = 0;    // used unless varying == Pe
  double fixed_t_op = 0;  // used unless varying == TOp
  std::vector<double> grid;
  std::vector<Criterion> criteria;
};

/// Throws InvalidSpec unless the grid is non-empty, finite and strictly
/// monotone and at least one criterion is requested.
void validate(const SweepSpec& spec);

struct SweepRow {
  double x = 0;
  std::vector<std::optional<double>> values;  // parallel to spec.criteria
  std::string error;  // non-empty when the grid point is not a valid operation
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;  // one per grid point, in grid order
};

SweepResult run_sweep(const SweepSpec& spec, const AssessmentConfig& cfg = {},
                      const DaughterSpec& dspec = {});

/// One row of a fixed study table.
struct TableRow {
  int n = 0;
  double re = 0;
  double pe = 0;
  double t_op = 0;
  double profitability = 0;
  std::optional<double> e;
  double k = 0;
};

struct TableStudy {
  int id = 0;
  std::string title;
  Criterion e_variant = Criterion::EPair;  // which criterion the E column holds
  int e_decimals = 2;                      // printed precision of the E column
  std::vector<TableRow> rows;
};

/// The four built-in studies: 1 varies re, 2 varies pe, 3 varies the
/// operation time, 4 evaluates the reference-set group leads. Throws
/// UnknownTable for any other id.
TableStudy run_table_study(int table_id, const AssessmentConfig& cfg = {});

/// A catalog entry carries either model of an operation under a stable id.
using AnyOperation = std::variant<LumpedOperation, FlowOperation>;

struct CatalogEntry {
  std::string id;
  AnyOperation op;
};

struct RankedRow {
  int rank = 0;  // competition ranking; rows tied within rel_tol share a rank
  std::string id;
  double value = 0;
  MetricsReport report;
};

struct InvalidRow {
  std::string id;
  std::string error;
};

struct RankedCatalog {
  Criterion criterion = Criterion::EPotential;
  std::vector<RankedRow> rows;       // descending by value; ties by ascending id
  std::vector<InvalidRow> invalid;   // rows the criterion is undefined for
};

/// Deterministic ranking of a catalog by one criterion. Rows whose operation
/// fails to evaluate, or for which the criterion is undefined, are collected
/// in `invalid` with their diagnostic instead of aborting the ranking.
RankedCatalog rank_operations(std::span<const CatalogEntry> catalog,
                              Criterion criterion,
                              const AssessmentConfig& cfg = {},
                              const DaughterSpec& dspec = {});

}  // namespace opeff
