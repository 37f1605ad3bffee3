#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "isostab/model.hpp"
#include "isostab/rational.hpp"

namespace isostab {

using Mat6 = Eigen::Matrix<double, 6, 6>;

struct LinearizationMatrix {
  Mat6 A = Mat6::Zero();                           // J times the Hessian of the full Hamiltonian
  Eigen::Matrix3d hessianW = Eigen::Matrix3d::Zero();  // W_xx at the equilibrium
  double theta = 0.0;
  double nu = 0.0;
  ModelParams params;
};

// A = [[-Sigma, I], [V_xx, -Sigma]] at equilibrium_circle(theta).
LinearizationMatrix linearization_full(double theta, double nu, const ModelParams& params);

// J = [[0, I], [-I, 0]] in (x, y) ordering.
Mat6 symplectic_J();
// Largest entry of A^T J + J A; zero for an infinitesimally symplectic A.
double symplectic_defect(const Mat6& A);

// Coefficients (ascending powers of lambda) of -lambda^2 (lambda^2 + 1)(lambda^2 + (2mu+1)/kappa).
std::array<double, 7> characteristic_poly(double mu);
std::array<Rational, 7> characteristic_poly_exact(const Rational& mu);
// Its roots {0, 0, +-i, +-i omega2}.
std::vector<std::complex<double>> characteristic_roots(double mu);

struct FrequencyPair {
  double omega1 = 1.0;
  double omega2 = 0.0;
};
FrequencyPair frequencies(double mu);
// omega2^2 = 4(2mu+1)/(mu+4), exact.
Rational omega2_sq(const Rational& mu);

struct ResonanceHit {
  int n2 = 0;
  Rational muStar;
};

struct MuInterval {
  Rational lo;
  Rational hi;
  bool loClosed = false;
  bool hiClosed = true;
  bool hiInfinite = false;
};

// Every mu in the interval with 2 omega2(mu) = N2 an integer, ascending in mu.
std::vector<ResonanceHit> kgl_resonance_scan(const MuInterval& range);
// mu* = 4(N2^2 - 4)/(32 - N2^2); throws when no positive mu gives 2 omega2 = N2.
Rational resonance_mu(int n2);

std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& m);
int numerical_rank(const Eigen::MatrixXd& m, double tol);

// Spectrum with the zero eigenvalue counted by ranks instead of read off a
// numeric eigensolve: a defective zero (a Jordan block, as at these relative
// equilibria) splits into roots of size sqrt(machine eps) under any
// eigensolver. zeroAlgebraic = n - rank(A^k) once the ranks stabilize,
// zeroGeometric = n - rank(A); the remaining eigenvalues are the
// largest-modulus numeric ones, and the zeros are inserted exactly.
struct ZeroAwareSpectrum {
  int zeroGeometric = 0;
  int zeroAlgebraic = 0;
  std::vector<std::complex<double>> eigenvalues;
};
ZeroAwareSpectrum spectrum_with_zero_block(const Eigen::MatrixXd& m, double rankTol = 1e-10);
// Greedy nearest-neighbour pairing; returns the largest pair distance.
double max_pairing_error(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b);

}  // namespace isostab
