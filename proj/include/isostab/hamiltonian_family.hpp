#pragma once

#include <stdexcept>

#include "isostab/eps_series.hpp"
#include "isostab/quadform.hpp"

namespace isostab {

using HamiltonianSeries = EpsSeries<TrigQuadForm>;

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// omega_2^2 = 4(2mu+1)/(mu+4), exactly.
Rational omega2_squared(const Rational& mu);

// Normalized quadratic Hamiltonian in (x1,y1,x2,y2) (stored in the X/Y slots)
//   1/2 (x1^2+y1^2) + omega2(mu)/2 (x2^2+y2^2)
//     + sum_k eps^k (-1)^(k+1) cos^k(nu) [3/2 y1^2 + (1/omega2 - omega2)/2 y2^2]
// with mu = mu0 + mu1 eps + ... + mu_order eps^order, expanded in plain eps
// powers through `order`. omega2(mu0) must be rational.
HamiltonianSeries substitute_curve(const Rational& mu0, int order);

// Rotates (x_i, y_i) by the angle N_i nu/2 and subtracts the generator of the
// rotation, N1/4 (X1^2+Y1^2) + N2/4 (X2^2+Y2^2).
HamiltonianSeries apply_double_rotation(const HamiltonianSeries& h, int n1, int n2);

// cos^k(nu), trig-linearized.
TrigCoeff cos_power(int k);

}  // namespace isostab
