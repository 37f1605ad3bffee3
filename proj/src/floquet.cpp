#include "isostab/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <numbers>
#include <sstream>
#include <thread>

namespace isostab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::Unstable: return "unstable";
    case Verdict::Boundary: return "boundary";
  }
  return "?";
}

double period_length(Period p) { return p == Period::TwoPi ? 2.0 * std::numbers::pi : 4.0 * std::numbers::pi; }

Period floquet_period(int n2) { return n2 % 2 ? Period::FourPi : Period::TwoPi; }

namespace {

using State = std::array<double, 16>;  // row-major 4x4

struct Variational {
  ModelParams params;
  void operator()(const State& z, State& dz, double nu) const {
    const Eigen::Matrix4d s = quadratic_part_H0(nu, params);
    Eigen::Matrix4d a;
    a.topRows<2>() = s.bottomRows<2>();
    a.bottomRows<2>() = -s.topRows<2>();
    Eigen::Map<const Eigen::Matrix<double, 4, 4, Eigen::RowMajor>> zm(z.data());
    Eigen::Map<Eigen::Matrix<double, 4, 4, Eigen::RowMajor>> dm(dz.data());
    dm = a * zm;
  }
};

struct BlockMultipliers {
  std::complex<double> l1, l2;
  double modulus;
  bool unstable;
  bool onCircle;
};

// Eigenvalues from the block entries, (a+d)/2 +- sqrt(((a-d)/2)^2 + bc): near a
// double multiplier this is first-order accurate in the integration error,
// whereas the trace alone (det forced to 1) amplifies it to its square root.
// The verdict still uses the trace: hyperbolic when |trace| - 2 > 100 tol.
BlockMultipliers block_multipliers(double a, double b, double c, double d, double tol) {
  const double trace = a + d, half = 0.5 * (a - d);
  const std::complex<double> root = std::sqrt(std::complex<double>(half * half + b * c, 0.0));
  const std::complex<double> l1 = 0.5 * trace + root, l2 = 0.5 * trace - root;
  const double modulus = std::max(std::abs(l1), std::abs(l2));
  const bool unstable = std::abs(trace) - 2.0 > 100.0 * tol && modulus - 1.0 > 10.0 * tol;
  return {l1, l2, modulus, unstable, !unstable};
}

}  // namespace

MonodromyReport integrate_fundamental(const ModelParams& params, Period period, double tol) {
  params.validate();
  if (!(tol >= 1e-14 && tol <= 1e-6)) throw DomainError("integrate_fundamental: tol must lie in [1e-14, 1e-6]");
  const double T = period_length(period);
  State z{};
  for (int i = 0; i < 4; ++i) z[5 * i] = 1.0;

  double dt = 0.05;
  MonodromyReport rep;
  try {
    rep.steps = integrate_controlled(Variational{params}, z, 0.0, T, tol, dt);
  } catch (const StepCollapseError& e) {
    throw StepCollapseError(std::string("integrate_fundamental: ") + e.what());
  }
  rep.M = Eigen::Map<const Eigen::Matrix<double, 4, 4, Eigen::RowMajor>>(z.data());
  rep.symplecticDefect = std::abs(rep.M.determinant() - 1.0);
  const int b1[2] = {0, 2}, b2[2] = {1, 3};
  for (int i : b1)
    for (int j : b2) rep.blockCoupling = std::max({rep.blockCoupling, std::abs(rep.M(i, j)), std::abs(rep.M(j, i))});

  if (rep.blockCoupling <= 1e3 * tol) {
    rep.blockTraces = {rep.M(0, 0) + rep.M(2, 2), rep.M(1, 1) + rep.M(3, 3)};
    const auto& m = rep.M;
    const auto m1 = block_multipliers(m(0, 0), m(0, 2), m(2, 0), m(2, 2), tol);
    const auto m2 = block_multipliers(m(1, 1), m(1, 3), m(3, 1), m(3, 3), tol);
    rep.multipliers = {m1.l1, m1.l2, m2.l1, m2.l2};
    rep.maxModulus = std::max(m1.modulus, m2.modulus);
    rep.verdict = (m1.unstable || m2.unstable) ? Verdict::Unstable
                  : (std::abs(std::abs(rep.blockTraces[0]) - 2.0) <= 100.0 * tol ||
                     std::abs(std::abs(rep.blockTraces[1]) - 2.0) <= 100.0 * tol)
                      ? Verdict::Boundary
                      : Verdict::Stable;
  } else {
    Eigen::EigenSolver<Eigen::Matrix4d> es(rep.M, false);
    for (int i = 0; i < 4; ++i) rep.multipliers[i] = es.eigenvalues()[i];
    rep.maxModulus = 0.0;
    for (const auto& l : rep.multipliers) rep.maxModulus = std::max(rep.maxModulus, std::abs(l));
    rep.verdict = rep.maxModulus > 1.0 + 10.0 * tol                 ? Verdict::Unstable
                  : std::abs(rep.maxModulus - 1.0) <= 10.0 * tol ? Verdict::Boundary
                                                                   : Verdict::Stable;
  }
  return rep;
}

MuWindow default_mu_window(int n2) {
  if (n2 < 3 || n2 > 5) throw DomainError("default_mu_window: N2 must be 3, 4 or 5");
  // 2 omega2 = n  <=>  mu = 4(s - 1)/(8 - s) with s = (n/2)^2.
  const auto mu_of = [](double n) {
    const double s = n * n / 4.0;
    return 4.0 * (s - 1.0) / (8.0 - s);
  };
  return {mu_of(n2 - 0.4), mu_of(n2 + 0.4)};
}

int thread_limit() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("ISOSTAB_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return n;
}

namespace {

// Off-diagonal entries of the resonant block.
double edge_function(int which, int n2, double eps, double mu, double tol) {
  ModelParams p;
  p.mu = mu;
  p.eps = eps;
  const auto rep = integrate_fundamental(p, floquet_period(n2), tol);
  return which == 0 ? rep.M(1, 3) : rep.M(3, 1);
}

struct Bracket {
  double lo, hi;
};

// Stops at `width` or when the bracket can no longer be split in doubles.
Bracket bisect(int which, int n2, double eps, double lo, double hi, double flo, double tol, double width) {
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = edge_function(which, n2, eps, mid, tol);
    if (fm == 0.0) return {mid, mid};
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

TongueSection trace_one(int n2, double eps, const MuWindow& w, double tol, double bracketTol, int scanPoints) {
  TongueSection sec;
  sec.eps = eps;
  std::vector<double> grid(static_cast<std::size_t>(scanPoints) + 1);
  for (int i = 0; i <= scanPoints; ++i) grid[i] = w.lo + (w.hi - w.lo) * i / scanPoints;
  double edges[2];
  for (int which = 0; which < 2; ++which) {
    std::vector<double> f(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) f[i] = edge_function(which, n2, eps, grid[i], tol);
    int changes = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
      if ((f[i] > 0) != (f[i + 1] > 0)) {
        ++changes;
        at = i;
      }
    if (changes != 1) {
      sec.error = "expected one crossing of the " + std::string(which == 0 ? "M(xi2,eta2)" : "M(eta2,xi2)") +
                  " entry in the window, found " + std::to_string(changes);
      return sec;
    }
    const Bracket b = bisect(which, n2, eps, grid[at], grid[at + 1], f[at], tol, bracketTol);
    edges[which] = 0.5 * (b.lo + b.hi);
    sec.bracketWidth = std::max(sec.bracketWidth, b.hi - b.lo);
  }
  sec.lower = std::min(edges[0], edges[1]);
  sec.upper = std::max(edges[0], edges[1]);
  ModelParams p;
  p.mu = 0.5 * (sec.lower + sec.upper);
  p.eps = eps;
  sec.maxModulusInside = integrate_fundamental(p, floquet_period(n2), tol).maxModulus;
  sec.ok = true;
  return sec;
}

}  // namespace

std::vector<TongueSection> trace_boundary(int n2, const std::vector<double>& epsGrid, const MuWindow& window,
                                          double tol, double bracketTol, int scanPoints) {
  if (!(window.lo < window.hi)) throw DomainError("trace_boundary: empty mu window");
  if (scanPoints < 2) throw DomainError("trace_boundary: need at least 2 scan intervals");
  std::vector<TongueSection> out(epsGrid.size());
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_limit()), epsGrid.size());
  std::size_t next = 0;
  while (next < epsGrid.size()) {
    std::vector<std::future<TongueSection>> batch;
    const std::size_t end = std::min(epsGrid.size(), next + std::max<std::size_t>(workers, 1));
    for (std::size_t i = next; i < end; ++i)
      batch.push_back(std::async(std::launch::async, trace_one, n2, epsGrid[i], window, tol, bracketTol, scanPoints));
    for (std::size_t i = next; i < end; ++i) out[i] = batch[i - next].get();
    next = end;
  }
  return out;
}

std::string tongue_csv(const std::vector<TongueSection>& sections) {
  std::ostringstream os;
  os.precision(17);
  os << "eps,mu_branch_lower,mu_branch_upper,bracket_width,max_modulus_inside\n";
  for (const auto& s : sections) {
    if (!s.ok) continue;
    os << s.eps << ',' << s.lower << ',' << s.upper << ',' << s.bracketWidth << ',' << s.maxModulusInside << '\n';
  }
  return os.str();
}

AgreementReport order_of_agreement(const BoundaryCurve& curve, const std::vector<TongueSection>& sections,
                                   std::optional<int> through) {
  const int m = through.value_or(curve.determined_through());
  if (m > curve.determined_through()) throw DomainError("order_of_agreement: curve is not determined that far");
  AgreementReport rep;
  rep.firstOmittedOrder = m + 1;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& s : sections) {
    if (!s.ok || s.eps <= 0.0) continue;
    const double series = curve.evaluate(s.eps, m);
    const double r = std::min(std::abs(s.lower - series), std::abs(s.upper - series));
    const bool use = r >= kOracleNoiseFloor;
    rep.eps.push_back(s.eps);
    rep.residuals.push_back(r);
    rep.used.push_back(use);
    rep.maxResidual = std::max(rep.maxResidual, r);
    if (!use) continue;
    const double x = std::log(s.eps), y = std::log(r);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (rep.eps.size() < 4) throw DomainError("order_of_agreement: needs at least 4 eps values");
  if (n < 2) {
    rep.degenerate = true;
    rep.passes = rep.maxResidual <= 1e-9;
    return rep;
  }
  rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  rep.passes = rep.slope >= rep.firstOmittedOrder - 0.5;
  return rep;
}

}  // namespace isostab
