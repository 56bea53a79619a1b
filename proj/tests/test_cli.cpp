// End-to-end checks that drive the installed binary through a shell.
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef OPEFF_CLI_BIN
#error "OPEFF_CLI_BIN must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path temp_path(const std::string& suffix) {
  static int counter = 0;
  return fs::temp_directory_path() /
         ("opeff_cli_" + std::to_string(::getpid()) + "_" +
          std::to_string(counter++) + suffix);
}

fs::path write_file(const std::string& content, const std::string& suffix) {
  const fs::path path = temp_path(suffix);
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

RunResult run_cli(const std::string& args) {
  const fs::path out_path = temp_path(".out");
  const fs::path err_path = temp_path(".err");
  const std::string cmd = std::string("\"") + OPEFF_CLI_BIN + "\" " + args +
                          " >\"" + out_path.string() + "\" 2>\"" +
                          err_path.string() + "\"";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  fs::remove(out_path);
  fs::remove(err_path);
  return result;
}

}  // namespace

TEST_CASE("cli reports its version") {
  const RunResult r = run_cli("--version");
  CHECK(r.code == 0);
  CHECK(r.out.find("opeff 0.1.0") != std::string::npos);
}

TEST_CASE("cli requires a subcommand") {
  const RunResult r = run_cli("");
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("eval-lumped prints the full indicator table") {
  const RunResult r = run_cli("eval-lumped --re 3 --pe 3.3 --t-r 0 --t-p 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("efficiency_potential") != std::string::npos);
  CHECK(r.out.find("null") == std::string::npos);
}

TEST_CASE("eval-lumped emits machine-readable JSON") {
  const RunResult r =
      run_cli("eval-lumped --re 3 --pe 3.3 --t-r 0 --t-p 2 --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("k").get<double>() == doctest::Approx(1.1).epsilon(1e-12));
  CHECK(j.at("efficiency_potential").get<double>() ==
        doctest::Approx(1.0 / 440.0).epsilon(1e-12));
  CHECK(j.at("t_a").get<double>() == doctest::Approx(22.0).epsilon(1e-12));
}

TEST_CASE("eval-lumped marks absent indicators as null in JSON") {
  const RunResult r =
      run_cli("eval-lumped --re 2 --pe 2 --t-r 0 --t-p 1 --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("t_a").is_null());
  CHECK(j.at("efficiency_pair").is_null());
  CHECK(j.at("profitability").get<double>() == 0.0);
}

TEST_CASE("eval-lumped rejects inverted registration times") {
  const RunResult r = run_cli("eval-lumped --re 3 --pe 3.3 --t-r 1 --t-p 0");
  CHECK(r.code == 2);
  CHECK(r.err.find("t_p < t_r") != std::string::npos);
}

TEST_CASE("eval-flow reads an events file and can dump curves") {
  const fs::path events = write_file("t,amount\n0,-3\n2,3.3\n", ".csv");
  const fs::path curves = temp_path(".curves.csv");
  const RunResult r =
      run_cli("eval-flow --input \"" + events.string() + "\" --format json" +
              " --dump-curves \"" + curves.string() + "\"");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("t_a").get<double>() == doctest::Approx(22.0).epsilon(1e-9));
  CHECK(j.at("efficiency_potential").get<double>() ==
        doctest::Approx(1.0 / 440.0).epsilon(1e-9));
  const std::string curve_csv = read_file(curves);
  CHECK(curve_csv.rfind("t,ice,d,wde\n", 0) == 0);
  fs::remove(events);
  fs::remove(curves);
}

TEST_CASE("eval-flow rejects a one-sided events file") {
  const fs::path events = write_file("t,amount\n0,-1\n1,-2\n", ".csv");
  const RunResult r = run_cli("eval-flow --input \"" + events.string() + "\"");
  CHECK(r.code == 2);
  CHECK(r.err.find("one-sided flow") != std::string::npos);
  fs::remove(events);
}

TEST_CASE("eval-flow reports an unreadable input path") {
  const RunResult r = run_cli("eval-flow --input /nonexistent/nowhere.csv");
  CHECK(r.code == 2);
  CHECK(r.err.find("cannot open input file") != std::string::npos);
}

TEST_CASE("refset renders the capital grid") {
  const RunResult r = run_cli("refset");
  CHECK(r.code == 0);
  CHECK(r.out.find("e_potential") != std::string::npos);
  CHECK(r.out.find("5.31468") != std::string::npos);
  CHECK(r.out.find("t = 16") != std::string::npos);
}

TEST_CASE("refset validates the growth coefficient") {
  const RunResult r = run_cli("refset --growth 1.0");
  CHECK(r.code == 2);
  CHECK(r.err.find("growth must exceed 1") != std::string::npos);
}

TEST_CASE("refset --calibrate retunes the slower groups") {
  const RunResult r = run_cli("refset --calibrate --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.at("groups").size() == 4);
  CHECK(j.at("groups")[1].at("chain")[0].at("pe").get<double>() ==
        doctest::Approx(3.6292174).epsilon(1e-6));
}

TEST_CASE("study --table prints the built-in studies") {
  const RunResult t4 = run_cli("study --table 4");
  CHECK(t4.code == 0);
  CHECK(t4.out.find("0.002273") != std::string::npos);
  CHECK(t4.out.find("0.002299") != std::string::npos);
  const RunResult t2 = run_cli("study --table 2");
  CHECK(t2.code == 0);
  CHECK(t2.out.find(",3.1,") != std::string::npos);
  CHECK(t2.out.find("0.55") != std::string::npos);
}

TEST_CASE("study rejects unknown table ids") {
  const RunResult r = run_cli("study --table 5");
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown table id") != std::string::npos);
}

TEST_CASE("study --sweep reads a spec file") {
  const fs::path spec = write_file(
      R"({"varying": "re", "fixed": {"pe": 3, "t_op": 1},
          "grid": [2.0, 2.1, 2.2],
          "criteria": ["e_potential", "profitability"]})",
      ".json");
  const RunResult r = run_cli("study --sweep \"" + spec.string() + "\"");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("re,e_potential,profitability,error\n") !=
        std::string::npos);
  fs::remove(spec);
}

TEST_CASE("study --sweep diagnoses a malformed spec with its path") {
  const fs::path spec = write_file("{\"varying\":", ".json");
  const RunResult r = run_cli("study --sweep \"" + spec.string() + "\"");
  CHECK(r.code == 2);
  CHECK(r.err.find(spec.string()) != std::string::npos);
  fs::remove(spec);
}

TEST_CASE("study needs either a table or a sweep") {
  const RunResult r = run_cli("study");
  CHECK(r.code == 2);
  CHECK(r.err.find("study requires --table or --sweep") != std::string::npos);
  const RunResult both = run_cli("study --table 1 --sweep x.json");
  CHECK(both.code == 2);
}

TEST_CASE("study --out writes to a file instead of stdout") {
  const fs::path out = temp_path(".csv");
  const RunResult r = run_cli("study --table 1 --out \"" + out.string() + "\"");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_file(out).find("n,re,pe,t_op") != std::string::npos);
  fs::remove(out);
}

TEST_CASE("rank orders a catalog and collects invalid rows") {
  const fs::path catalog = write_file(
      "id,re,pe,t_r,t_p\n"
      "slow,3,3.3,0,2\n"
      "fast,2,3,0,1\n"
      "flat,2,2,0,1\n",
      ".csv");
  const RunResult r = run_cli("rank --input \"" + catalog.string() + "\"");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("# criterion: e_potential\n") != std::string::npos);
  const std::size_t fast = r.out.find("1,fast,");
  const std::size_t slow = r.out.find("2,slow,");
  const std::size_t flat = r.out.find(",flat,,");
  CHECK(fast != std::string::npos);
  CHECK(slow != std::string::npos);
  CHECK(flat != std::string::npos);
  CHECK(fast < slow);
  CHECK(slow < flat);
  fs::remove(catalog);
}

TEST_CASE("rank rejects unknown criteria and empty catalogs") {
  const fs::path catalog = write_file("id,re,pe,t_r,t_p\na,2,3,0,1\n", ".csv");
  const RunResult bad =
      run_cli("rank --input \"" + catalog.string() + "\" --criterion npv");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown criterion") != std::string::npos);
  fs::remove(catalog);

  const fs::path empty = write_file("", ".csv");
  const RunResult r = run_cli("rank --input \"" + empty.string() + "\"");
  CHECK(r.code == 2);
  CHECK(r.err.find("empty input") != std::string::npos);
  CHECK(r.err.find(empty.string()) != std::string::npos);
  fs::remove(empty);
}
