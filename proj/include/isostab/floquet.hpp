#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isostab/integrator.hpp"
#include "isostab/model.hpp"
#include "isostab/normalizer.hpp"

namespace isostab {

enum class Verdict { Stable, Unstable, Boundary };
const char* to_string(Verdict v);

struct MonodromyReport {
  Eigen::Matrix4d M = Eigen::Matrix4d::Identity();  // ordering (xi1, xi2, eta1, eta2)
  std::array<std::complex<double>, 4> multipliers{};
  double maxModulus = 1.0;
  Verdict verdict = Verdict::Stable;
  double symplecticDefect = 0.0;  // |det M - 1|
  double blockCoupling = 0.0;     // largest entry coupling (xi1, eta1) with (xi2, eta2)
  std::array<double, 2> blockTraces{};
  long steps = 0;
};

// 2 pi or 4 pi.
double period_length(Period p);
Period floquet_period(int n2);  // 4 pi for odd N2

// Fundamental matrix of z' = J S(nu) z over one period, S = quadratic_part_H0,
// with an embedded Runge-Kutta-Fehlberg 7(8) pair. Multipliers come from the
// (xi1, eta1) and (xi2, eta2) blocks when the monodromy decouples (it does
// exactly for this family), otherwise from the 4x4 eigenproblem. A block is
// unstable when |trace| - 2 > 100 tol and its multiplier modulus exceeds 1 + 10 tol.
MonodromyReport integrate_fundamental(const ModelParams& params, Period period, double tol);

struct MuWindow {
  double lo = 0.0;
  double hi = 0.0;
};

// mu range on which 2 omega2 stays within 0.4 of N2.
MuWindow default_mu_window(int n2);

// One eps slice of the tongue: its two edges, each localized to a bracket.
struct TongueSection {
  double eps = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double bracketWidth = 0.0;  // widest of the two final brackets
  double maxModulusInside = 1.0;
  bool ok = false;
  std::string error;  // set when no crossing is found
};

// For each eps, scans the window for sign changes of the monodromy entries
// M(xi2, eta2) and M(eta2, xi2) -- the off-diagonal entries of the resonant
// block, whose sign changes are exactly the points where |trace| = 2 -- and
// bisects each to width <= bracketTol (0: to floating-point resolution). Grid points run concurrently, capped by
// ISOSTAB_THREADS; results keep the input order.
std::vector<TongueSection> trace_boundary(int n2, const std::vector<double>& epsGrid, const MuWindow& window,
                                          double tol, double bracketTol = 1e-10, int scanPoints = 32);

std::string tongue_csv(const std::vector<TongueSection>& sections);

struct AgreementReport {
  std::vector<double> eps;
  std::vector<double> residuals;  // |mu_oracle - mu_series| at the nearest edge
  std::vector<bool> used;         // above the noise floor
  double slope = 0.0;
  bool degenerate = false;  // fewer than 2 points above the noise floor
  double maxResidual = 0.0;
  int firstOmittedOrder = 0;
  bool passes = false;  // slope >= firstOmittedOrder - 0.5, or degenerate with maxResidual <= 1e-9
};

inline constexpr double kOracleNoiseFloor = 1e-11;

// Least-squares slope of log residual against log eps, using the curve
// through `through` (default: every determined coefficient).
AgreementReport order_of_agreement(const BoundaryCurve& curve, const std::vector<TongueSection>& sections,
                                   std::optional<int> through = std::nullopt);

int thread_limit();

}  // namespace isostab
