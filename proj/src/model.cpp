#include "isostab/model.hpp"

#include <cmath>
#include <string>

namespace isostab {

namespace {

constexpr double kSingularDistance = 1e-300;

struct Distances {
  double d1;
  double d2;
};

Distances distances(const Vec3& x, double mu) {
  const double a = 1.0 + x[0];
  const double d1 = std::hypot(a, x[1]);
  const double d2 = std::sqrt(a * a + x[1] * x[1] + (2.0 * mu + 1.0) * x[2] * x[2]);
  if (d1 <= kSingularDistance || d2 <= kSingularDistance)
    throw SingularityError("collision: (x1, x2) = (-1, 0) is outside the domain of W");
  return {d1, d2};
}

double denominator(double nu, double eps) {
  const double den = 1.0 + eps * std::cos(nu);
  if (den <= 0.0) throw DomainError("1 + eps cos(nu) must be positive (eps < 1)");
  return den;
}

}  // namespace

void ModelParams::validate() const {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("mu must be a finite nonnegative number");
  if (!(eps >= 0.0 && eps < 1.0)) throw DomainError("eps must satisfy 0 <= eps < 1");
  if (!std::isfinite(gamma)) throw DomainError("gamma must be finite");
}

double radius(double nu, double eps, double p) {
  if (!(eps >= 0.0 && eps < 1.0)) throw DomainError("radius: eps must satisfy 0 <= eps < 1");
  if (!(p > 0.0)) throw DomainError("radius: p must be positive");
  return p / (1.0 + eps * std::cos(nu));
}

double radius(const KeplerState& k) { return radius(k.nu, k.eps, k.p); }

double potential_W(const Vec3& x, double mu) {
  const auto [d1, d2] = distances(x, mu);
  return mu / (4.0 * d1) + 1.0 / d2;
}

Vec3 grad_W(const Vec3& x, double mu) {
  const auto [d1, d2] = distances(x, mu);
  const double d2c = d2 * d2 * d2;
  const double b = mu / (4.0 * d1 * d1 * d1) + 1.0 / d2c;
  return -Vec3(b * (1.0 + x[0]), b * x[1], (2.0 * mu + 1.0) * x[2] / d2c);
}

Eigen::Matrix3d hessian_W(const Vec3& x, double mu) {
  const auto [d1, d2] = distances(x, mu);
  const double a = 1.0 + x[0], m = 2.0 * mu + 1.0;
  const double d13 = d1 * d1 * d1, d23 = d2 * d2 * d2;
  const double d15 = d13 * d1 * d1, d25 = d23 * d2 * d2;
  const double b = mu / (4.0 * d13) + 1.0 / d23;
  const double b1 = mu / (4.0 * d15) + 1.0 / d25;  // -(1/3) dB/dx1 / (1+x1)
  Eigen::Matrix3d h;
  h(0, 0) = 3.0 * b1 * a * a - b;
  h(0, 1) = h(1, 0) = 3.0 * b1 * a * x[1];
  h(1, 1) = 3.0 * b1 * x[1] * x[1] - b;
  h(0, 2) = h(2, 0) = 3.0 * m * a * x[2] / d25;
  h(1, 2) = h(2, 1) = 3.0 * m * x[1] * x[2] / d25;
  h(2, 2) = m * (3.0 * m * x[2] * x[2] / d25 - 1.0 / d23);
  return h;
}

double potential_V(const Vec3& x, double nu, const ModelParams& p) {
  const double c = p.eps * std::cos(nu);
  return (-0.5 * c * x.squaredNorm() + potential_W(x, p.mu) / p.kappa() + x[0]) / denominator(nu, p.eps);
}

Vec3 grad_V(const Vec3& x, double nu, const ModelParams& p) {
  const double c = p.eps * std::cos(nu);
  Vec3 g = -c * x + grad_W(x, p.mu) / p.kappa();
  g[0] += 1.0;
  return g / denominator(nu, p.eps);
}

Eigen::Matrix3d hessian_V(const Vec3& x, double nu, const ModelParams& p) {
  const double c = p.eps * std::cos(nu);
  return (-c * Eigen::Matrix3d::Identity() + hessian_W(x, p.mu) / p.kappa()) / denominator(nu, p.eps);
}

Vec3 sigma(const Vec3& v) { return Vec3(-v[1], v[0], 0.0); }

double full_hamiltonian(const FullPhasePoint& s, const ModelParams& p) {
  return 0.5 * s.y.squaredNorm() - sigma(s.x).dot(s.y) - potential_V(s.x, s.nu, p);
}

Vec6 full_rhs(const FullPhasePoint& s, const ModelParams& p) {
  Vec6 out;
  out.head<3>() = s.y - sigma(s.x);
  out.tail<3>() = -sigma(s.y) + grad_V(s.x, s.nu, p);
  return out;
}

double first_integral_Q(const FullPhasePoint& s) {
  const double x1 = s.x[0] + 1.0, x2 = s.x[1];
  const double y1 = s.y[0], y2 = s.y[1] + 1.0;
  return x2 * y1 - x1 * y2;
}

double origin_angular_momentum(const FullPhasePoint& s) { return s.x[1] * s.y[0] - s.x[0] * s.y[1]; }

FullPhasePoint equilibrium_circle(double theta, double nu) {
  FullPhasePoint s;
  s.x = Vec3(std::cos(theta) - 1.0, std::sin(theta), 0.0);
  s.y = sigma(s.x);
  s.nu = nu;
  return s;
}

namespace {

struct ReducedTerms {
  double den;   // 1 + eps cos nu
  double c;     // eps cos nu
  double dist;  // sqrt(u1^2 + (2mu+1) u3^2)
};

ReducedTerms reduced_terms(const ReducedPhasePoint& s, const ModelParams& p) {
  if (std::abs(s.u1) <= kSingularDistance) throw SingularityError("reduced Hamiltonian is singular at u1 = 0");
  const double dist = std::sqrt(s.u1 * s.u1 + (2.0 * p.mu + 1.0) * s.u3 * s.u3);
  return {denominator(s.nu, p.eps), p.eps * std::cos(s.nu), dist};
}

}  // namespace

double reduced_hamiltonian(const ReducedPhasePoint& s, const ModelParams& p) {
  const auto t = reduced_terms(s, p);
  const double w = p.mu / (4.0 * std::abs(s.u1)) + 1.0 / t.dist;
  return 0.5 * (s.v1 * s.v1 + s.v3 * s.v3) + p.gamma * p.gamma / (2.0 * s.u1 * s.u1) +
         (0.5 * t.c * (s.u1 * s.u1 + s.u3 * s.u3) - w / p.kappa()) / t.den;
}

Eigen::Vector4d reduced_gradient(const ReducedPhasePoint& s, const ModelParams& p) {
  const auto t = reduced_terms(s, p);
  const double m = 2.0 * p.mu + 1.0, d3 = t.dist * t.dist * t.dist;
  const double sgn_u1 = s.u1 > 0 ? 1.0 : -1.0;
  const double w_u1 = -p.mu * sgn_u1 / (4.0 * s.u1 * s.u1) - s.u1 / d3;
  const double w_u3 = -m * s.u3 / d3;
  Eigen::Vector4d g;
  g[0] = -p.gamma * p.gamma / (s.u1 * s.u1 * s.u1) + (t.c * s.u1 - w_u1 / p.kappa()) / t.den;
  g[1] = (t.c * s.u3 - w_u3 / p.kappa()) / t.den;
  g[2] = s.v1;
  g[3] = s.v3;
  return g;
}

Eigen::Matrix4d reduced_hessian(const ReducedPhasePoint& s, const ModelParams& p) {
  const auto t = reduced_terms(s, p);
  const double m = 2.0 * p.mu + 1.0, d2 = t.dist * t.dist, d3 = d2 * t.dist, d5 = d3 * d2;
  const double au1 = std::abs(s.u1);
  const double w_11 = p.mu / (2.0 * au1 * au1 * au1) - 1.0 / d3 + 3.0 * s.u1 * s.u1 / d5;
  const double w_13 = 3.0 * m * s.u1 * s.u3 / d5;
  const double w_33 = -m / d3 + 3.0 * m * m * s.u3 * s.u3 / d5;
  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
  const double u2 = s.u1 * s.u1;
  h(0, 0) = 3.0 * p.gamma * p.gamma / (u2 * u2) + (t.c - w_11 / p.kappa()) / t.den;
  h(0, 1) = h(1, 0) = -w_13 / p.kappa() / t.den;
  h(1, 1) = (t.c - w_33 / p.kappa()) / t.den;
  h(2, 2) = 1.0;
  h(3, 3) = 1.0;
  return h;
}

Eigen::Vector4d reduced_rhs(const ReducedPhasePoint& s, const ModelParams& p) {
  const Eigen::Vector4d g = reduced_gradient(s, p);
  return Eigen::Vector4d(g[2], g[3], -g[0], -g[1]);
}

Eigen::Matrix4d quadratic_part_H0(double nu, const ModelParams& p) {
  ReducedPhasePoint star;
  star.nu = nu;
  return reduced_hessian(star, p);
}

NormalizedTerm normalized_H_series(int k, double mu) {
  if (k < 0) throw DomainError("normalized_H_series: k must be nonnegative");
  if (!(mu >= 0.0)) throw DomainError("normalized_H_series: mu must be nonnegative");
  const double w2 = std::sqrt(4.0 * (2.0 * mu + 1.0) / (mu + 4.0));
  NormalizedTerm t;
  if (k == 0) {
    t.x1sq = t.y1sq = 0.5;
    t.x2sq = t.y2sq = 0.5 * w2;
    return t;
  }
  const double sign = k % 2 == 1 ? 1.0 : -1.0;
  t.y1sq = sign * 1.5;
  t.y2sq = sign * 0.5 * (1.0 / w2 - w2);  // = -(7/2) mu/((mu+4) w2) times sign
  t.cosPower = k;
  return t;
}

}  // namespace isostab
