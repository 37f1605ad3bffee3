#include "isostab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace isostab {

namespace {

Eigen::Matrix3d sigma_matrix() {
  Eigen::Matrix3d s = Eigen::Matrix3d::Zero();
  s(0, 1) = -1.0;
  s(1, 0) = 1.0;
  return s;
}

}  // namespace

LinearizationMatrix linearization_full(double theta, double nu, const ModelParams& params) {
  params.validate();
  const FullPhasePoint eq = equilibrium_circle(theta, nu);
  LinearizationMatrix out;
  out.theta = theta;
  out.nu = nu;
  out.params = params;
  out.hessianW = hessian_W(eq.x, params.mu);
  const Eigen::Matrix3d s = sigma_matrix();
  out.A.block<3, 3>(0, 0) = -s;
  out.A.block<3, 3>(0, 3) = Eigen::Matrix3d::Identity();
  out.A.block<3, 3>(3, 0) = hessian_V(eq.x, nu, params);
  out.A.block<3, 3>(3, 3) = -s;
  return out;
}

Mat6 symplectic_J() {
  Mat6 j = Mat6::Zero();
  j.block<3, 3>(0, 3) = Eigen::Matrix3d::Identity();
  j.block<3, 3>(3, 0) = -Eigen::Matrix3d::Identity();
  return j;
}

double symplectic_defect(const Mat6& A) {
  const Mat6 j = symplectic_J();
  return (A.transpose() * j + j * A).cwiseAbs().maxCoeff();
}

std::array<double, 7> characteristic_poly(double mu) {
  if (!(mu >= 0.0)) throw DomainError("characteristic_poly: mu must be nonnegative");
  const double s = 4.0 * (2.0 * mu + 1.0) / (mu + 4.0);
  return {0.0, 0.0, -s, 0.0, -(1.0 + s), 0.0, -1.0};
}

std::array<Rational, 7> characteristic_poly_exact(const Rational& mu) {
  if (sgn(mu) < 0) throw DomainError("characteristic_poly_exact: mu must be nonnegative");
  const Rational s = omega2_sq(mu);
  return {Rational(0), Rational(0), Rational(-s), Rational(0), Rational(-(1 + s)), Rational(0), Rational(-1)};
}

std::vector<std::complex<double>> characteristic_roots(double mu) {
  const double w2 = frequencies(mu).omega2;
  const std::complex<double> i(0.0, 1.0);
  return {0.0, 0.0, i, -i, i * w2, -i * w2};
}

FrequencyPair frequencies(double mu) {
  if (!(mu >= 0.0)) throw DomainError("frequencies: mu must be nonnegative");
  return {1.0, std::sqrt(4.0 * (2.0 * mu + 1.0) / (mu + 4.0))};
}

Rational omega2_sq(const Rational& mu) {
  Rational r = Rational(4 * (2 * mu + 1)) / Rational(mu + 4);
  r.canonicalize();
  return r;
}

Rational resonance_mu(int n2) {
  const long n = static_cast<long>(n2) * n2;
  if (n2 <= 2 || n >= 32) throw DomainError("resonance_mu: 2 omega2 = N2 needs 2 < N2 < 4 sqrt(2)");
  return ratio(4 * (n - 4), 32 - n);
}

std::vector<ResonanceHit> kgl_resonance_scan(const MuInterval& range) {
  if (sgn(range.lo) < 0) throw DomainError("kgl_resonance_scan: interval must lie in mu > 0");
  // 2 omega2 is increasing in mu with 2 < 2 omega2 < 4 sqrt(2) on mu > 0.
  std::vector<ResonanceHit> hits;
  for (int n2 = 3; n2 * n2 < 32; ++n2) {
    const Rational mu = resonance_mu(n2);
    const bool aboveLo = range.loClosed ? mu >= range.lo : mu > range.lo;
    const bool belowHi = range.hiInfinite || (range.hiClosed ? mu <= range.hi : mu < range.hi);
    if (!(aboveLo && belowHi)) continue;
    if (omega2_sq(mu) * 4 != n2 * n2) throw std::logic_error("kgl_resonance_scan: nonzero rational residue");
    hits.push_back({n2, mu});
  }
  return hits;
}

std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalues: eigensolver did not converge");
  const auto ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

int numerical_rank(const Eigen::MatrixXd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > tol * std::max(1.0, sv[0])) ++rank;
  return rank;
}

ZeroAwareSpectrum spectrum_with_zero_block(const Eigen::MatrixXd& m, double rankTol) {
  const int n = static_cast<int>(m.rows());
  ZeroAwareSpectrum out;
  out.zeroGeometric = n - numerical_rank(m, rankTol);
  Eigen::MatrixXd power = m;
  int rank = n - out.zeroGeometric;
  for (int k = 2; k <= n; ++k) {
    power = power * m;
    const int next = numerical_rank(power, rankTol);
    if (next == rank) break;
    rank = next;
  }
  out.zeroAlgebraic = n - rank;
  auto ev = eigenvalues(m);
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) { return std::abs(a) > std::abs(b); });
  ev.resize(static_cast<std::size_t>(n - out.zeroAlgebraic));
  ev.insert(ev.end(), static_cast<std::size_t>(out.zeroAlgebraic), std::complex<double>(0.0, 0.0));
  out.eigenvalues = std::move(ev);
  return out;
}

double max_pairing_error(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_pairing_error: size mismatch");
  double worst = 0.0;
  for (const auto& x : a) {
    auto best = std::min_element(b.begin(), b.end(),
                                 [&](const auto& p, const auto& q) { return std::abs(p - x) < std::abs(q - x); });
    worst = std::max(worst, std::abs(*best - x));
    b.erase(best);
  }
  return worst;
}

}  // namespace isostab
