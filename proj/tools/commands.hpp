#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace isostab::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kGoldenMismatch = 3,
  kTracingFailure = 4,
  kSingularity = 5,
};

struct SpectrumOptions {
  std::string mu;  // rational text, e.g. "3", "20/23", "0.5"
  double theta = 0.0;
};

struct ResonanceOptions {
  std::string minMu = "0";  // exclusive
  std::string maxMu;        // inclusive; empty = unbounded
};

struct NormalFormOptions {
  int n2 = 4;
  int order = 4;
  std::string convention;  // canonical | published; empty = canonical, or published with checkPaper
  bool checkPaper = false;
  std::string jsonOut;  // JSON dump path; "-" = stdout instead of the table
};

struct ChartOptions {
  int n2 = 4;
  std::vector<double> eps{0.0125, 0.025, 0.05, 0.1};
  std::optional<double> muMin, muMax;  // default: 2 omega2 within 0.4 of N2
  double tol = 1e-12;
  double bracket = 1e-10;
  int order = 5;
  std::string convention = "canonical";
  std::string csvOut;  // empty = stdout
  std::string svgOut;
};

struct SimulateOptions {
  std::string system = "full";  // full | reduced
  double mu = 3.0;
  double eps = 0.0;
  double gamma = 1.0;
  double theta = 0.0;         // full: start on the equilibrium circle unless a state is given
  std::vector<double> state;  // full: x1 x2 x3 y1 y2 y3; reduced: u1 u3 v1 v3
  double nu0 = 0.0;
  double periods = 10.0;
  int samplesPerPeriod = 16;
  double tol = 1e-12;
  std::string out;  // empty = stdout
};

int cmd_spectrum(const SpectrumOptions& o, std::ostream& out, std::ostream& err);
int cmd_resonances(const ResonanceOptions& o, std::ostream& out, std::ostream& err);
int cmd_normalform(const NormalFormOptions& o, std::ostream& out, std::ostream& err);
int cmd_floquet_chart(const ChartOptions& o, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err);

// Full command line: subcommands plus --config/--tol/--out/--check-paper.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isostab::cli
