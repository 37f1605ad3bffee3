#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace fs = std::filesystem;
using namespace isostab::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "isostab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "isostab_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

// Largest deviation of each column from its first value.
double max_column_drift(const std::vector<std::vector<double>>& rows, std::size_t first, std::size_t last) {
  double d = 0.0;
  for (const auto& r : rows)
    for (std::size_t c = first; c <= last; ++c) d = std::max(d, std::abs(r[c] - rows.front()[c]));
  return d;
}

}  // namespace

TEST_CASE("spectrum") {
  Result r = run_cli({"spectrum", "--mu", "3"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "omega2 = 2\n"));
  CHECK(contains(r.out, "roots: 0, 0, +-1i, +-2i"));
  CHECK(contains(r.out, "algebraic multiplicity 2"));
  r = run_cli({"spectrum", "--mu", "12"});
  CHECK(contains(r.out, "omega2 = 5/2"));
  r = run_cli({"spectrum", "--mu", "0.5"});
  CHECK(contains(r.out, "omega2 = 4/3"));
  CHECK(contains(r.out, "+-4/3i"));
  CHECK(run_cli({"spectrum", "--mu", "-1"}).code == kInvalidInput);
  CHECK(run_cli({"spectrum", "--mu", "abc"}).code == kInvalidInput);
  CHECK(run_cli({"spectrum"}).code == kInvalidInput);
  CHECK(run_cli({}).code == kInvalidInput);
}

TEST_CASE("resonances") {
  Result r = run_cli({"resonances"});
  CHECK(r.code == kOk);
  CHECK(r.out == "N2,mu_star\n3,20/23\n4,3\n5,12\n");
  CHECK(run_cli({"resonances", "--max-mu", "1"}).out == "N2,mu_star\n3,20/23\n");
  r = run_cli({"resonances", "--max-mu", "0.5"});
  CHECK(r.code == kOk);
  CHECK(r.out == "N2,mu_star\n");
  CHECK(run_cli({"resonances", "--min-mu", "5", "--max-mu", "1"}).code == kInvalidInput);
  CHECK(run_cli({"resonances", "--min-mu", "-1"}).code == kInvalidInput);
}

TEST_CASE("normalform check against the published fractions") {
  Result r = run_cli({"normalform", "--n2", "4", "--order", "4", "--check-paper"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "check-paper: PASS"));
  CHECK(contains(r.out, "mu2 = -63/20"));
  r = run_cli({"normalform", "--n2", "3", "--order", "3", "--check-paper"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "mu2 = -1295/2116"));
  r = run_cli({"normalform", "--n2", "5", "--order", "4", "--check-paper"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "mu2 = -117/4"));
  // The canonical normal form differs from the published listing.
  r = run_cli({"normalform", "--n2", "4", "--order", "4", "--convention", "canonical", "--check-paper"});
  CHECK(r.code == kGoldenMismatch);
  CHECK(contains(r.out, "check-paper: FAIL"));
  CHECK(run_cli({"normalform", "--n2", "6"}).code == kInvalidInput);
  CHECK(run_cli({"normalform", "--n2", "4", "--convention", "other"}).code == kInvalidInput);
}

TEST_CASE("normalform JSON is canonical and deterministic") {
  const Result a = run_cli({"--out", "-", "normalform", "--n2", "3", "--order", "4"});
  const Result b = run_cli({"normalform", "--n2", "3", "--order", "4", "--out", "-"});
  CHECK(a.code == kOk);
  CHECK(a.out == b.out);
  const nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j.dump(2) + "\n" == a.out);
  const fs::path p = scratch("nf.json");
  CHECK(run_cli({"normalform", "--n2", "3", "--order", "4", "--out", p.string()}).code == kOk);
  CHECK(read_file(p) == a.out);
}

TEST_CASE("floquet-chart") {
  Result r = run_cli({"floquet-chart", "--n2", "4", "--eps", "0.02,0.05,0.1"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "eps,mu_branch_lower,mu_branch_upper,bracket_width,max_modulus_inside\n"));
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    const double e = row[0];
    CHECK(std::abs(row[1] - (3 - 63.0 / 20 * e * e)) <= 0.02);
    CHECK(std::abs(row[1] - (3 - 21.0 / 10 * e * e)) <= 1e-4);
    CHECK(row[2] >= row[1]);
    CHECK(row[3] <= 1e-10);
  }
  CHECK(run_cli({"floquet-chart", "--n2", "4", "--eps", "0.02,0.05,0.1"}).out == r.out);

  r = run_cli({"floquet-chart", "--n2", "3", "--eps", "0"});
  CHECK(r.code == kOk);
  const auto zero = csv_rows(r.out);
  CHECK(std::abs(zero[0][1] - 20.0 / 23) <= 1e-10);
  CHECK(std::abs(zero[0][2] - 20.0 / 23) <= 1e-10);

  const fs::path svg = scratch("chart.svg");
  fs::remove(svg);
  r = run_cli({"floquet-chart", "--n2", "3", "--eps", "0.05,0.1", "--svg", svg.string()});
  CHECK(r.code == kOk);
  const std::string text = read_file(svg);
  CHECK(text.rfind("<?xml", 0) == 0);
  CHECK(contains(text, "</svg>"));
  std::size_t polylines = 0;
  for (std::size_t at = text.find("<polyline"); at != std::string::npos; at = text.find("<polyline", at + 1)) ++polylines;
  CHECK(polylines == 2);

  r = run_cli({"floquet-chart", "--n2", "4", "--eps", "0.1", "--mu-min", "2.999", "--mu-max", "3.001"});
  CHECK(r.code == kTracingFailure);
  CHECK(contains(r.err, "no crossing"));
  CHECK(run_cli({"floquet-chart", "--n2", "4", "--mu-min", "3.1"}).code == kInvalidInput);
  CHECK(run_cli({"floquet-chart", "--n2", "4", "--eps", "1.5"}).code == kInvalidInput);
  CHECK(run_cli({"--tol", "1e-3", "floquet-chart", "--n2", "4"}).code == kInvalidInput);
}

TEST_CASE("simulate") {
  // Equilibrium start stays put.
  Result r = run_cli({"simulate", "--theta", "0.7", "--mu", "3", "--eps", "0.3", "--periods", "10"});
  CHECK(r.code == kOk);
  auto rows = csv_rows(r.out);
  CHECK(rows.size() == 161);
  CHECK(max_column_drift(rows, 1, 6) <= 1e-9);

  // Reduced system at eps = 0 conserves H.
  r = run_cli({"simulate", "--system", "reduced", "--mu", "3", "--state", "1.05,0.03,-0.02,0.01", "--periods", "100",
               "--samples", "4"});
  CHECK(r.code == kOk);
  rows = csv_rows(r.out);
  CHECK(max_column_drift(rows, 5, 5) <= 1e-9);

  // Full system from a bounded start near the circle conserves Q.
  r = run_cli({"simulate", "--mu", "3", "--eps", "0.2", "--state", "0.03,0.21,0.04,-0.17,0.05,-0.02", "--periods",
               "100", "--samples", "4"});
  CHECK(r.code == kOk);
  rows = csv_rows(r.out);
  CHECK(max_column_drift(rows, 7, 7) <= 1e-9);

  // An escaping orbit (|x| grows to ~76): the drift is integration error
  // proportional to the state size, and shrinks with the tolerance.
  double last = 1.0;
  for (const char* tol : {"1e-12", "1e-13", "1e-14"}) {
    r = run_cli({"--tol", tol, "simulate", "--mu", "3", "--eps", "0.2", "--state", "0.1,0.2,0.05,-0.1,0.3,0.02",
                 "--periods", "20", "--samples", "4"});
    const double drift = max_column_drift(csv_rows(r.out), 7, 7);
    CHECK(drift < 0.5 * last);
    last = drift;
  }
  CHECK(last <= 1e-9);

  // Zero angular momentum about the primary: a head-on fall.
  r = run_cli({"simulate", "--state", "-0.5,0,0,0,-1,0", "--periods", "5"});
  CHECK(r.code == kSingularity);
  CHECK(contains(r.err, "last good nu"));
  CHECK(run_cli({"simulate", "--system", "other"}).code == kInvalidInput);
  CHECK(run_cli({"simulate", "--state", "1,2"}).code == kInvalidInput);
}

TEST_CASE("config files") {
  const fs::path cfg = scratch("nf.json");
  {
    std::ofstream f(cfg);
    f << R"({"n2": 3, "order": 3, "check-paper": true})";
  }
  Result r = run_cli({"--config", cfg.string(), "normalform"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "mu2 = -1295/2116"));
  CHECK(contains(r.out, "check-paper: PASS"));
  // Flags take precedence over the file.
  r = run_cli({"--config", cfg.string(), "normalform", "--n2", "4", "--order", "4"});
  CHECK(contains(r.out, "mu2 = -63/20"));

  {
    std::ofstream f(cfg);
    f << R"({"n2": 3, "bogus": 1})";
  }
  CHECK(run_cli({"--config", cfg.string(), "normalform"}).code == kInvalidInput);
  {
    std::ofstream f(cfg);
    f << "{not json";
  }
  CHECK(run_cli({"--config", cfg.string(), "normalform"}).code == kInvalidInput);
  CHECK(run_cli({"--config", "/nonexistent/cfg.json", "resonances"}).code == kInvalidInput);
}
