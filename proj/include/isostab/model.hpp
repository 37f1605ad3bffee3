#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace isostab {

struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// mu = m/m3, eps = eccentricity of the Kepler orbit, gamma = value of the
// reduced angular momentum.
struct ModelParams {
  double mu = 1.0;
  double eps = 0.0;
  double gamma = 1.0;

  double kappa() const { return (mu + 4.0) / 4.0; }
  // mu >= 0 (mu = 0 is accepted as a degenerate limit), 0 <= eps < 1.
  void validate() const;
};

struct KeplerState {
  double nu = 0.0;   // true anomaly
  double p = 1.0;    // orbit parameter
  double eps = 0.0;  // eccentricity
  double c = 1.0;    // area constant
};

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;

// Pulsating-rotating position and momentum, with the true anomaly as time.
struct FullPhasePoint {
  Vec3 x = Vec3::Zero();
  Vec3 y = Vec3::Zero();
  double nu = 0.0;
};

struct ReducedPhasePoint {
  double u1 = 1.0;
  double u3 = 0.0;
  double v1 = 0.0;
  double v3 = 0.0;
  double nu = 0.0;
};

// Displacements from P* = (u1, u3, v1, v3) = (1, 0, 0, 0).
struct LocalPhasePoint {
  double xi1 = 0.0;
  double xi2 = 0.0;
  double eta1 = 0.0;
  double eta2 = 0.0;
};

double radius(double nu, double eps, double p);
double radius(const KeplerState& k);

// W = mu/(4 d1) + 1/d2, d1 = |(1+x1, x2)|, d2 = sqrt((1+x1)^2 + x2^2 + (2mu+1) x3^2).
double potential_W(const Vec3& x, double mu);
Vec3 grad_W(const Vec3& x, double mu);
Eigen::Matrix3d hessian_W(const Vec3& x, double mu);

// V = (-(1/2) eps cos(nu) |x|^2 + W/kappa + x1) / (1 + eps cos nu)
double potential_V(const Vec3& x, double nu, const ModelParams& p);
Vec3 grad_V(const Vec3& x, double nu, const ModelParams& p);
Eigen::Matrix3d hessian_V(const Vec3& x, double nu, const ModelParams& p);

// Sigma x = (-x2, x1, 0).
Vec3 sigma(const Vec3& v);

// H = |y|^2/2 - <Sigma x, y> - V; its canonical field is full_rhs.
double full_hamiltonian(const FullPhasePoint& s, const ModelParams& p);
// (y - Sigma x, -Sigma y + grad V)
Vec6 full_rhs(const FullPhasePoint& s, const ModelParams& p);

// Angular momentum about the primary at x = (-1, 0, 0): x2 y1 - x1 y2 written
// in primary-centred coordinates (x + e1, y + e2), where the rotation
// symmetry of the field lives. Constant along full_rhs trajectories.
double first_integral_Q(const FullPhasePoint& s);
// x2 y1 - x1 y2 about the frame origin; not conserved, kept for comparison.
double origin_angular_momentum(const FullPhasePoint& s);

// Relative equilibrium with 1 + x1 = cos(theta), x2 = sin(theta), y = Sigma x.
FullPhasePoint equilibrium_circle(double theta, double nu = 0.0);

double reduced_hamiltonian(const ReducedPhasePoint& s, const ModelParams& p);
// Partial derivatives with respect to (u1, u3, v1, v3).
Eigen::Vector4d reduced_gradient(const ReducedPhasePoint& s, const ModelParams& p);
Eigen::Matrix4d reduced_hessian(const ReducedPhasePoint& s, const ModelParams& p);
// (u1', u3', v1', v3') = (dH/dv1, dH/dv3, -dH/du1, -dH/du3)
Eigen::Vector4d reduced_rhs(const ReducedPhasePoint& s, const ModelParams& p);

// Hessian of the reduced Hamiltonian at P* in the ordering (xi1, xi2, eta1, eta2).
Eigen::Matrix4d quadratic_part_H0(double nu, const ModelParams& p);

// Coefficient set of one term of the normalized Hamiltonian in (x1,x2,y1,y2):
// (x1sq x1^2 + y1sq y1^2 + x2sq x2^2 + y2sq y2^2) cos^cosPower(nu).
struct NormalizedTerm {
  double x1sq = 0.0;
  double y1sq = 0.0;
  double x2sq = 0.0;
  double y2sq = 0.0;
  int cosPower = 0;
};

// eps^k term (plain powers) of the normalized Hamiltonian at fixed mu.
NormalizedTerm normalized_H_series(int k, double mu);

}  // namespace isostab
