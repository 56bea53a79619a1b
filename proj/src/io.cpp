#include "opeff/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>

namespace opeff::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string line_prefix(int line_no) {
  return "line " + std::to_string(line_no) + ": ";
}

std::vector<std::string> split_csv_line(const std::string& line, int line_no) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
    } else if (c == '"' && cell.empty()) {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  if (quoted) throw ParseError(line_prefix(line_no) + "unterminated quote");
  cells.push_back(std::move(cell));
  return cells;
}

double parse_number(const std::string& token, int line_no,
                    std::string_view what) {
  const std::string_view t = trim(token);
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (first != last && *first == '+') ++first;  // from_chars rejects '+'
  double value = 0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (t.empty() || ec != std::errc() || ptr != last)
    throw ParseError(line_prefix(line_no) + "cannot parse '" + token +
                     "' as " + std::string(what));
  if (!std::isfinite(value))
    throw ParseError(line_prefix(line_no) + std::string(what) +
                     " must be finite");
  return value;
}

void check_field_count(const std::vector<std::string>& cells,
                       std::size_t expected, int line_no) {
  if (cells.size() == expected) return;
  std::string msg = line_prefix(line_no) + "expected " +
                    std::to_string(expected) + " fields, found " +
                    std::to_string(cells.size());
  if (cells.size() > expected)
    msg += " (decimal commas are not accepted; use '.')";
  throw ParseError(msg);
}

// Reads physical lines, tracking 1-based numbers and dropping a trailing CR.
bool next_line(std::istream& in, std::string& line, int& line_no) {
  if (!std::getline(in, line)) return false;
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int decimals) {
  decimals = std::clamp(decimals, 0, 17);
  if (!std::isfinite(v)) return format_double(v);
  const double scale = std::pow(10.0, decimals);
  const double scaled = std::floor(std::abs(v) * scale + 0.5);
  if (scaled >= 9.0e18) {  // out of exact uint64 range; rounding moot there
    char buf[512];
    const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::fixed, decimals);
    return std::string(buf, res.ptr);
  }
  const auto units = static_cast<std::uint64_t>(scaled);
  std::uint64_t pow10 = 1;
  for (int i = 0; i < decimals; ++i) pow10 *= 10;
  std::string out;
  if (std::signbit(v) && units != 0) out += '-';
  out += std::to_string(units / pow10);
  if (decimals > 0) {
    const std::string frac = std::to_string(units % pow10);
    out += '.';
    out.append(static_cast<std::size_t>(decimals) - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::string format_general(double v, int significant) {
  significant = std::clamp(significant, 1, 17);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::general, significant);
  return std::string(buf, res.ptr);
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos)
    return std::string(field);
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

FlowOperation parse_events_csv(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::vector<FlowEvent> events;
  while (next_line(in, line, line_no)) {
    if (trim(line).empty()) continue;
    auto cells = split_csv_line(line, line_no);
    for (auto& c : cells) c = std::string(trim(c));
    if (!have_header) {
      if (cells != std::vector<std::string>{"t", "amount"})
        throw ParseError(line_prefix(line_no) +
                         "expected header \"t,amount\"");
      have_header = true;
      continue;
    }
    check_field_count(cells, 2, line_no);
    FlowEvent ev;
    ev.t = parse_number(cells[0], line_no, "a time");
    ev.amount = parse_number(cells[1], line_no, "an amount");
    events.push_back(ev);
  }
  if (!have_header)
    throw ParseError("empty input: expected header \"t,amount\"");
  return make_flow(std::move(events));
}

std::vector<CatalogEntry> parse_catalog_csv(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::vector<CatalogEntry> entries;
  std::set<std::string> seen;
  const std::vector<std::string> header = {"id", "re", "pe", "t_r", "t_p"};
  while (next_line(in, line, line_no)) {
    if (trim(line).empty()) continue;
    auto cells = split_csv_line(line, line_no);
    for (auto& c : cells) c = std::string(trim(c));
    if (!have_header) {
      if (cells != header)
        throw ParseError(line_prefix(line_no) +
                         "expected header \"id,re,pe,t_r,t_p\"");
      have_header = true;
      continue;
    }
    check_field_count(cells, 5, line_no);
    if (cells[0].empty())
      throw ParseError(line_prefix(line_no) + "empty id");
    if (!seen.insert(cells[0]).second)
      throw ParseError(line_prefix(line_no) + "duplicate id '" + cells[0] + "'");
    const double re = parse_number(cells[1], line_no, "re");
    const double pe = parse_number(cells[2], line_no, "pe");
    const double t_r = parse_number(cells[3], line_no, "t_r");
    const double t_p = parse_number(cells[4], line_no, "t_p");
    try {
      entries.push_back({cells[0], make_lumped(re, pe, t_r, t_p)});
    } catch (const Error& e) {
      throw ParseError(line_prefix(line_no) + e.what());
    }
  }
  if (!have_header)
    throw ParseError("empty input: expected header \"id,re,pe,t_r,t_p\"");
  return entries;
}

SweepSpec parse_sweep_spec(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("sweep spec: ") + e.what());
  }
  return sweep_spec_from_json(j);
}

SweepSpec sweep_spec_from_json(const json& j) {
  if (!j.is_object()) throw InvalidSpec("sweep spec must be a JSON object");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "varying" && key != "fixed" && key != "grid" &&
        key != "criteria")
      throw InvalidSpec("sweep spec: unknown key \"" + key + "\"");
  }
  if (!j.contains("varying") || !j.at("varying").is_string())
    throw InvalidSpec("sweep spec: \"varying\" must be \"re\", \"pe\" or \"t_op\"");
  SweepSpec spec;
  spec.varying = parse_sweep_variable(j.at("varying").get<std::string>());
  if (!j.contains("fixed") || !j.at("fixed").is_object())
    throw InvalidSpec("sweep spec: \"fixed\" must be an object");
  const json& fixed = j.at("fixed");
  for (const auto& item : fixed.items()) {
    const std::string& key = item.key();
    if (key != "re" && key != "pe" && key != "t_op")
      throw InvalidSpec("sweep spec: unknown fixed key \"" + key + "\"");
    if (key == sweep_variable_name(spec.varying))
      throw InvalidSpec("sweep spec: \"fixed\" must not repeat the varying parameter");
  }
  const auto need = [&fixed](const char* name) {
    if (!fixed.contains(name) || !fixed.at(name).is_number())
      throw InvalidSpec(std::string("sweep spec: fixed \"") + name +
                        "\" must be a number");
    return fixed.at(name).get<double>();
  };
  if (spec.varying != SweepVariable::Re) spec.fixed_re = need("re");
  if (spec.varying != SweepVariable::Pe) spec.fixed_pe = need("pe");
  if (spec.varying != SweepVariable::TOp) spec.fixed_t_op = need("t_op");
  if (!j.contains("grid") || !j.at("grid").is_array())
    throw InvalidSpec("sweep spec: \"grid\" must be an array of numbers");
  for (const auto& x : j.at("grid")) {
    if (!x.is_number())
      throw InvalidSpec("sweep spec: \"grid\" must be an array of numbers");
    spec.grid.push_back(x.get<double>());
  }
  if (!j.contains("criteria") || !j.at("criteria").is_array())
    throw InvalidSpec("sweep spec: \"criteria\" must be an array of names");
  for (const auto& c : j.at("criteria")) {
    if (!c.is_string())
      throw InvalidSpec("sweep spec: \"criteria\" must be an array of names");
    spec.criteria.push_back(parse_criterion(c.get<std::string>()));
  }
  validate(spec);
  return spec;
}

json report_to_json(const MetricsReport& report) {
  json j = json::object();
  j["re"] = report.re;
  j["pe"] = report.pe;
  j["t_r"] = report.t_r;
  j["t_p"] = report.t_p;
  j["t_op"] = report.t_op;
  j["k"] = report.k;
  j["profitability"] = report.profitability;
  const auto opt = [&j](const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
    else j[key] = nullptr;
  };
  opt("t_a", report.t_a);
  opt("t_d", report.t_d);
  opt("resource_intensity", report.resource_intensity);
  opt("potential_effect", report.potential_effect);
  opt("efficiency_potential", report.efficiency_potential);
  opt("efficiency_pair", report.efficiency_pair);
  return j;
}

MetricsReport report_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("report must be a JSON object");
  const auto num = [&j](const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
      throw ParseError(std::string("report: field \"") + key +
                       "\" must be a number");
    return j.at(key).get<double>();
  };
  const auto opt = [&j](const char* key) -> std::optional<double> {
    if (!j.contains(key))
      throw ParseError(std::string("report: missing field \"") + key + "\"");
    const json& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    if (!v.is_number())
      throw ParseError(std::string("report: field \"") + key +
                       "\" must be a number or null");
    return v.get<double>();
  };
  MetricsReport r;
  r.re = num("re");
  r.pe = num("pe");
  r.t_r = num("t_r");
  r.t_p = num("t_p");
  r.t_op = num("t_op");
  r.k = num("k");
  r.profitability = num("profitability");
  r.t_a = opt("t_a");
  r.t_d = opt("t_d");
  r.resource_intensity = opt("resource_intensity");
  r.potential_effect = opt("potential_effect");
  r.efficiency_potential = opt("efficiency_potential");
  r.efficiency_pair = opt("efficiency_pair");
  return r;
}

std::string render_report_table(const MetricsReport& report) {
  const auto line = [](std::string_view key, const std::string& value) {
    std::string s(key);
    s.append(22 - key.size(), ' ');
    s += value;
    s += '\n';
    return s;
  };
  const auto opt = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string("null");
  };
  std::string out;
  out += line("re", format_double(report.re));
  out += line("pe", format_double(report.pe));
  out += line("t_r", format_double(report.t_r));
  out += line("t_p", format_double(report.t_p));
  out += line("t_op", format_double(report.t_op));
  out += line("k", format_double(report.k));
  out += line("profitability", format_double(report.profitability));
  out += line("t_a", opt(report.t_a));
  out += line("t_d", opt(report.t_d));
  out += line("resource_intensity", opt(report.resource_intensity));
  out += line("potential_effect", opt(report.potential_effect));
  out += line("efficiency_potential", opt(report.efficiency_potential));
  out += line("efficiency_pair", opt(report.efficiency_pair));
  return out;
}

std::string table_to_csv(const TableStudy& study) {
  std::string out = "# E column: " + std::string(criterion_name(study.e_variant)) +
                    ", printed at " + std::to_string(study.e_decimals) +
                    " decimals\n";
  out += "n,re,pe,t_op,profitability,e,k,profitability_printed,e_printed\n";
  for (const TableRow& row : study.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += format_double(row.re);
    out += ',';
    out += format_double(row.pe);
    out += ',';
    out += format_double(row.t_op);
    out += ',';
    out += format_double(row.profitability);
    out += ',';
    if (row.e) out += format_double(*row.e);
    out += ',';
    out += format_double(row.k);
    out += ',';
    out += format_fixed(row.profitability, 2);
    out += ',';
    if (row.e) out += format_fixed(*row.e, study.e_decimals);
    out += '\n';
  }
  return out;
}

json table_to_json(const TableStudy& study) {
  json j = json::object();
  j["table"] = study.id;
  j["title"] = study.title;
  j["e_variant"] = std::string(criterion_name(study.e_variant));
  j["e_decimals"] = study.e_decimals;
  json rows = json::array();
  for (const TableRow& row : study.rows) {
    json r = json::object();
    r["n"] = row.n;
    r["re"] = row.re;
    r["pe"] = row.pe;
    r["t_op"] = row.t_op;
    r["profitability"] = row.profitability;
    if (row.e) r["e"] = *row.e;
    else r["e"] = nullptr;
    r["k"] = row.k;
    r["profitability_printed"] = format_fixed(row.profitability, 2);
    if (row.e) r["e_printed"] = format_fixed(*row.e, study.e_decimals);
    else r["e_printed"] = nullptr;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

namespace {

void append_fixed_annotation(std::string& out, const SweepSpec& spec) {
  out += "# varying: ";
  out += sweep_variable_name(spec.varying);
  out += "; fixed:";
  bool first = true;
  const auto one = [&](SweepVariable v, const char* name, double value) {
    if (spec.varying == v) return;
    out += first ? " " : ", ";
    first = false;
    out += name;
    out += '=';
    out += format_double(value);
  };
  one(SweepVariable::Re, "re", spec.fixed_re);
  one(SweepVariable::Pe, "pe", spec.fixed_pe);
  one(SweepVariable::TOp, "t_op", spec.fixed_t_op);
  out += '\n';
}

}  // namespace

std::string sweep_to_csv(const SweepResult& result) {
  const SweepSpec& spec = result.spec;
  std::string out;
  append_fixed_annotation(out, spec);
  out += sweep_variable_name(spec.varying);
  for (const Criterion c : spec.criteria) {
    out += ',';
    out += criterion_name(c);
  }
  out += ",error\n";
  for (const SweepRow& row : result.rows) {
    out += format_double(row.x);
    for (const std::optional<double>& v : row.values) {
      out += ',';
      if (v) out += format_double(*v);
    }
    out += ',';
    out += csv_escape(row.error);
    out += '\n';
  }
  return out;
}

json sweep_to_json(const SweepResult& result) {
  const SweepSpec& spec = result.spec;
  json j = json::object();
  j["varying"] = std::string(sweep_variable_name(spec.varying));
  json fixed = json::object();
  if (spec.varying != SweepVariable::Re) fixed["re"] = spec.fixed_re;
  if (spec.varying != SweepVariable::Pe) fixed["pe"] = spec.fixed_pe;
  if (spec.varying != SweepVariable::TOp) fixed["t_op"] = spec.fixed_t_op;
  j["fixed"] = std::move(fixed);
  j["grid"] = spec.grid;
  json criteria = json::array();
  for (const Criterion c : spec.criteria)
    criteria.push_back(std::string(criterion_name(c)));
  j["criteria"] = std::move(criteria);
  json rows = json::array();
  for (const SweepRow& row : result.rows) {
    json r = json::object();
    r["x"] = row.x;
    json values = json::object();
    for (std::size_t i = 0; i < spec.criteria.size(); ++i) {
      const auto name = std::string(criterion_name(spec.criteria[i]));
      if (row.values[i]) values[name] = *row.values[i];
      else values[name] = nullptr;
    }
    r["values"] = std::move(values);
    if (row.error.empty()) r["error"] = nullptr;
    else r["error"] = row.error;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string ranking_to_csv(const RankedCatalog& ranking) {
  std::string out = "# criterion: ";
  out += criterion_name(ranking.criterion);
  out += '\n';
  out += "rank,id,value,error\n";
  for (const RankedRow& row : ranking.rows) {
    out += std::to_string(row.rank);
    out += ',';
    out += csv_escape(row.id);
    out += ',';
    out += format_double(row.value);
    out += ",\n";
  }
  for (const InvalidRow& row : ranking.invalid) {
    out += ',';
    out += csv_escape(row.id);
    out += ",,";
    out += csv_escape(row.error);
    out += '\n';
  }
  return out;
}

json ranking_to_json(const RankedCatalog& ranking) {
  json j = json::object();
  j["criterion"] = std::string(criterion_name(ranking.criterion));
  json rows = json::array();
  for (const RankedRow& row : ranking.rows) {
    json r = json::object();
    r["rank"] = row.rank;
    r["id"] = row.id;
    r["value"] = row.value;
    r["report"] = report_to_json(row.report);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  json invalid = json::array();
  for (const InvalidRow& row : ranking.invalid) {
    json r = json::object();
    r["id"] = row.id;
    r["error"] = row.error;
    invalid.push_back(std::move(r));
  }
  j["invalid"] = std::move(invalid);
  return j;
}

namespace {

// Capital shown for a group at grid time t: the initial investment at the
// chain start, the released value at each completion, nothing in between.
std::optional<double> capital_at(const ReferenceGroup& g, double t) {
  if (g.chain.empty()) return std::nullopt;
  const double ratio = t / g.duration;
  const double idx = std::floor(ratio + 0.5);
  if (std::abs(ratio - idx) > 1e-9 * std::max(1.0, std::abs(ratio)))
    return std::nullopt;
  const auto i = static_cast<long long>(idx);
  if (i < 0 || i > static_cast<long long>(g.chain.size())) return std::nullopt;
  if (i == 0) return g.chain.front().re;
  return g.chain[static_cast<std::size_t>(i - 1)].pe;
}

}  // namespace

std::string render_reference_set(const ReferenceSet& set,
                                 const AssessmentConfig& cfg) {
  validate(cfg);
  const int sig = cfg.precision;
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> grid;

  const auto add_row = [&](std::string label, std::vector<std::string> cells) {
    labels.push_back(std::move(label));
    grid.push_back(std::move(cells));
  };

  const std::size_t n = set.groups.size();
  std::vector<std::string> cells(n);

  for (std::size_t i = 0; i < n; ++i)
    cells[i] = std::to_string(set.groups[i].index);
  add_row("group", cells);
  for (std::size_t i = 0; i < n; ++i)
    cells[i] = format_general(set.groups[i].duration, sig);
  add_row("duration", cells);
  for (std::size_t i = 0; i < n; ++i)
    cells[i] = format_general(set.groups[i].growth, sig);
  add_row("k", cells);
  for (std::size_t i = 0; i < n; ++i)
    cells[i] = format_fixed(
        efficiency_potential(set.groups[i].chain.front(), cfg), sig);
  add_row("e_potential", cells);

  const double base = set.spec.base_duration;
  const auto steps =
      static_cast<long long>(std::floor(set.spec.horizon / base * (1 + 1e-12)));
  for (long long s = 0; s <= steps; ++s) {
    const double t = static_cast<double>(s) * base;
    for (std::size_t i = 0; i < n; ++i) {
      const std::optional<double> c = capital_at(set.groups[i], t);
      cells[i] = c ? format_general(*c, sig) : std::string("-");
    }
    add_row("t = " + format_general(t, sig), cells);
  }

  std::size_t label_w = 0;
  for (const std::string& l : labels) label_w = std::max(label_w, l.size());
  std::size_t cell_w = 0;
  for (const auto& row : grid)
    for (const std::string& c : row) cell_w = std::max(cell_w, c.size());

  std::string out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::string line = labels[r];
    line.append(label_w + 2 - labels[r].size(), ' ');
    for (std::size_t i = 0; i < grid[r].size(); ++i) {
      line += grid[r][i];
      if (i + 1 < grid[r].size())
        line.append(cell_w + 2 - grid[r][i].size(), ' ');
    }
    out += line;
    out += '\n';
  }
  return out;
}

json reference_set_to_json(const ReferenceSet& set,
                           const AssessmentConfig& cfg) {
  validate(cfg);
  json j = json::object();
  json spec = json::object();
  spec["base_re"] = set.spec.base_re;
  spec["base_duration"] = set.spec.base_duration;
  spec["base_growth"] = set.spec.base_growth;
  spec["group_count"] = set.spec.group_count;
  spec["horizon"] = set.spec.horizon;
  j["spec"] = std::move(spec);
  json groups = json::array();
  for (const ReferenceGroup& g : set.groups) {
    json gj = json::object();
    gj["index"] = g.index;
    gj["duration"] = g.duration;
    gj["growth"] = g.growth;
    gj["e_potential"] = efficiency_potential(g.chain.front(), cfg);
    json chain = json::array();
    for (const LumpedOperation& op : g.chain) {
      json oj = json::object();
      oj["re"] = op.re;
      oj["pe"] = op.pe;
      oj["t_r"] = op.t_r;
      oj["t_p"] = op.t_p;
      chain.push_back(std::move(oj));
    }
    gj["chain"] = std::move(chain);
    groups.push_back(std::move(gj));
  }
  j["groups"] = std::move(groups);
  json matches = json::array();
  for (const CapitalMatch& m : verify_reference_set(set)) {
    json mj = json::object();
    mj["time"] = m.time;
    mj["max_rel_deviation"] = m.max_rel_deviation;
    json capitals = json::array();
    for (const auto& [group, capital] : m.capitals) {
      json cj = json::object();
      cj["group"] = group;
      cj["capital"] = capital;
      capitals.push_back(std::move(cj));
    }
    mj["capitals"] = std::move(capitals);
    matches.push_back(std::move(mj));
  }
  j["matches"] = std::move(matches);
  return j;
}

std::string curves_to_csv(const FlowOperation& flow,
                          const AssessmentConfig& cfg) {
  validate(cfg);
  const PiecewisePolynomial ice = cumulative_net(flow);
  const PiecewisePolynomial d = effect_primitive(flow);
  std::optional<double> t_a;
  try {
    t_a = taco_flow(flow, cfg);
  } catch (const Error&) {
    // incomplete flow: curves are still well defined, wde is not
  }
  const double t0 = flow.t_start();
  const double t_hi = (t_a ? *t_a : flow.t_end()) + cfg.t1;

  std::vector<double> samples(ice.breakpoints().begin(),
                              ice.breakpoints().end());
  if (t_a) {
    samples.push_back(*t_a);
    samples.push_back(*t_a + cfg.t1);
  }
  constexpr int kGrid = 64;
  for (int i = 0; i <= kGrid; ++i)
    samples.push_back(t0 + (t_hi - t0) * i / kGrid);
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end(),
                            [](double a, double b) {
                              return std::abs(a - b) <=
                                     1e-12 * std::max({1.0, std::abs(a),
                                                       std::abs(b)});
                            }),
                samples.end());

  std::string out = "t,ice,d,wde\n";
  for (const double t : samples) {
    out += format_double(t);
    out += ',';
    out += format_double(ice(t));
    out += ',';
    out += format_double(d(t));
    out += ',';
    if (t_a && t >= *t_a - 1e-12 * std::max(1.0, std::abs(*t_a))) {
      const double to = std::max(t, *t_a);
      out += format_double(d.integral(*t_a, to) - d(*t_a) * (to - *t_a));
    }
    out += '\n';
  }
  return out;
}

}  // namespace opeff::io
