// opeff: command-line front end for the efficiency indicator library.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "opeff/io.hpp"

namespace {

using namespace opeff;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + out_path);
  out << text;
  if (!out) throw Error("cannot write output file: " + out_path);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file: " + path);
  return in;
}

// Re-raises parser diagnostics with the offending file name attached.
template <typename Fn>
auto with_file_context(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void add_eval_lumped(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "eval-lumped", "Evaluate a registration-model operation (re, pe, t_r, t_p)");
  struct O {
    double re = 0, pe = 0, t_r = 0, t_p = 0;
    double t1 = 1.0, td = 1.0;
    std::string format = "table";
  };
  auto opts = std::make_shared<O>();
  cmd->add_option("--re", opts->re, "cost estimate of input products")->required();
  cmd->add_option("--pe", opts->pe, "cost estimate of output products")->required();
  cmd->add_option("--t-r", opts->t_r, "registration time of the investment")->required();
  cmd->add_option("--t-p", opts->t_p, "registration time of the release")->required();
  cmd->add_option("--t1", opts->t1, "estimated interval after completion (default 1)");
  cmd->add_option("--td", opts->td, "daughter operation duration (default 1)");
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->callback([opts] {
    const LumpedOperation op = make_lumped(opts->re, opts->pe, opts->t_r, opts->t_p);
    AssessmentConfig cfg;
    cfg.t1 = opts->t1;
    const MetricsReport report = evaluate_lumped(op, cfg, DaughterSpec{opts->td});
    if (opts->format == "json")
      std::cout << io::report_to_json(report).dump(2) << "\n";
    else
      std::cout << io::render_report_table(report);
  });
}

void add_eval_flow(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "eval-flow", "Evaluate a distributed operation from an events CSV");
  struct O {
    std::string input;
    std::string dump_curves;
    double t1 = 1.0, td = 1.0;
    std::string format = "table";
  };
  auto opts = std::make_shared<O>();
  cmd->add_option("--input", opts->input, "events CSV with header t,amount")->required();
  cmd->add_option("--t1", opts->t1, "estimated interval after completion (default 1)");
  cmd->add_option("--td", opts->td, "daughter operation duration (default 1)");
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--dump-curves", opts->dump_curves,
                  "also write t,ice,d,wde samples to this CSV file");
  cmd->callback([opts] {
    auto in = open_input(opts->input);
    const FlowOperation flow =
        with_file_context(opts->input, [&] { return io::parse_events_csv(in); });
    AssessmentConfig cfg;
    cfg.t1 = opts->t1;
    const MetricsReport report = evaluate_flow(flow, cfg, DaughterSpec{opts->td});
    if (opts->format == "json")
      std::cout << io::report_to_json(report).dump(2) << "\n";
    else
      std::cout << io::render_report_table(report);
    if (!opts->dump_curves.empty())
      write_output(io::curves_to_csv(flow, cfg), opts->dump_curves);
  });
}

void add_refset(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "refset", "Generate (and optionally calibrate) a reference set of chains");
  struct O {
    ReferenceSetSpec spec;
    bool calibrate = false;
    double t1 = 1.0;
    std::string format = "table";
  };
  auto opts = std::make_shared<O>();
  cmd->add_option("--base-re", opts->spec.base_re,
                  "initial capital of every chain (default 3)");
  cmd->add_option("--base-t", opts->spec.base_duration,
                  "duration of the shortest operation (default 2)");
  cmd->add_option("--growth", opts->spec.base_growth,
                  "value growth per base duration (default 1.1)");
  cmd->add_option("--groups", opts->spec.group_count,
                  "number of groups (default 4)");
  cmd->add_option("--horizon", opts->spec.horizon,
                  "time horizon of the set (default 16)");
  cmd->add_flag("--calibrate", opts->calibrate,
                "recalibrate growth so all groups match group 1's efficiency");
  cmd->add_option("--t1", opts->t1, "estimated interval after completion (default 1)");
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->callback([opts] {
    AssessmentConfig cfg;
    cfg.t1 = opts->t1;
    ReferenceSet set = generate_reference_set(opts->spec);
    if (opts->calibrate) set = calibrate_reference_set(set, cfg);
    if (opts->format == "json")
      std::cout << io::reference_set_to_json(set, cfg).dump(2) << "\n";
    else
      std::cout << io::render_reference_set(set, cfg);
  });
}

void add_study(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "study", "Run a built-in table study or a parameter sweep");
  struct O {
    int table_id = 0;
    std::string sweep_path;
    std::string out_path;
    double t1 = 1.0;
    std::string format = "csv";
  };
  auto opts = std::make_shared<O>();
  auto* table_opt =
      cmd->add_option("--table", opts->table_id, "built-in study id (1..4)");
  auto* sweep_opt =
      cmd->add_option("--sweep", opts->sweep_path, "sweep spec JSON file");
  table_opt->excludes(sweep_opt);
  sweep_opt->excludes(table_opt);
  cmd->add_option("--out", opts->out_path, "write to this file instead of stdout");
  cmd->add_option("--t1", opts->t1, "estimated interval after completion (default 1)");
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->callback([opts, table_opt, sweep_opt] {
    AssessmentConfig cfg;
    cfg.t1 = opts->t1;
    std::string text;
    if (table_opt->count() > 0) {
      const TableStudy study = run_table_study(opts->table_id, cfg);
      text = opts->format == "json" ? io::table_to_json(study).dump(2) + "\n"
                                    : io::table_to_csv(study);
    } else if (sweep_opt->count() > 0) {
      auto in = open_input(opts->sweep_path);
      const SweepSpec spec = with_file_context(
          opts->sweep_path, [&] { return io::parse_sweep_spec(in); });
      const SweepResult result = run_sweep(spec, cfg);
      text = opts->format == "json" ? io::sweep_to_json(result).dump(2) + "\n"
                                    : io::sweep_to_csv(result);
    } else {
      throw InvalidSpec("study requires --table or --sweep");
    }
    write_output(text, opts->out_path);
  });
}

void add_rank(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "rank", "Rank the operations of a catalog CSV by a criterion");
  struct O {
    std::string input;
    std::string criterion = "e_potential";
    std::string out_path;
    double t1 = 1.0, td = 1.0;
    std::string format = "csv";
  };
  auto opts = std::make_shared<O>();
  cmd->add_option("--input", opts->input,
                  "catalog CSV with header id,re,pe,t_r,t_p")->required();
  cmd->add_option("--criterion", opts->criterion,
                  "profitability, e_pair or e_potential (default e_potential)");
  cmd->add_option("--out", opts->out_path, "write to this file instead of stdout");
  cmd->add_option("--t1", opts->t1, "estimated interval after completion (default 1)");
  cmd->add_option("--td", opts->td, "daughter operation duration (default 1)");
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->callback([opts] {
    const Criterion criterion = parse_criterion(opts->criterion);
    auto in = open_input(opts->input);
    const std::vector<CatalogEntry> catalog =
        with_file_context(opts->input, [&] { return io::parse_catalog_csv(in); });
    AssessmentConfig cfg;
    cfg.t1 = opts->t1;
    const RankedCatalog ranked =
        rank_operations(catalog, criterion, cfg, DaughterSpec{opts->td});
    const std::string text = opts->format == "json"
                                 ? io::ranking_to_json(ranked).dump(2) + "\n"
                                 : io::ranking_to_csv(ranked);
    write_output(text, opts->out_path);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Target-operation efficiency indicators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "opeff 0.1.0");
  add_eval_lumped(app);
  add_eval_flow(app);
  add_refset(app);
  add_study(app);
  add_rank(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const opeff::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
