#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isostab/hamiltonian_family.hpp"

namespace isostab {

// Lie-operator sign used by the triangle. Canonical uses L_W f = {f, W}
// together with the -dW/dnu term of the extended phase space, which is the
// consistent choice. Published flips the bracket while keeping -dW/dnu; it is
// kept only to reproduce the published tables (see README).
enum class Convention { Canonical, Published };

const char* to_string(Convention c);

struct NormalFormResult {
  HamiltonianSeries input;  // plain, after rotation
  HamiltonianSeries K;      // factorial: K = sum eps^j/j! K_j, every K_j autonomous
  HamiltonianSeries W;      // W[n] = W_n; generator = sum_{n>=0} eps^n/n! W_{n+1}
  int order = 0;
  int n2 = 0;
  Rational mu0;  // resonance value the family is expanded at
  Period period = Period::TwoPi;
  Convention convention = Convention::Canonical;
};

// Deprit triangle for a plain-scaled input with vanishing eps^0 term.
NormalFormResult deprit_hori_normalize(const HamiltonianSeries& h, int order, Period period,
                                       Convention convention = Convention::Canonical);

// Independent check through the linear flow: the generator W defines
// z = P(nu, eps) Z with dP/deps = J S_W(eps) P, and K must satisfy
// P A_K = A_H P - dP/dnu (A = J S) through the truncation order.
struct ForwardCheck {
  bool consistent = false;
  int firstMismatchOrder = -1;  // -1 when consistent
  std::string detail;
};
ForwardCheck forward_transform_check(const NormalFormResult& nf);

// Assignment of exact values to curve unknowns mu_i (keys 1-based).
using Substitution = std::map<int, Rational>;

// Characteristic polynomial lambda^4 + a lambda^2 + b of the autonomous
// system K (plain eps powers), with d = a^2 - 4b.
struct CharCoeffs {
  ScalarSeries a, b, d;
  // Set when K is block diagonal: a = d1 + d2, b = d1 d2, with d1, d2 the
  // determinants of the (X1, Y1) and (X2, Y2) blocks, each with its own precision.
  bool blockDiagonal = false;
  ScalarSeries d1, d2;
};

CharCoeffs characteristic_coeffs(const NormalFormResult& nf, const Substitution& subs = {});

// Block: d2 = 0, the determinant of the resonant (X2, Y2) block. When the
// (X1, Y1) block is parabolic (d1 = 0) this is the a = 0 boundary, but solved
// at the precision of d2 rather than that of d1.
enum class Condition { B, D, A, Block };
const char* to_string(Condition c);

struct BoundaryCurve {
  int n2 = 0;
  Condition condition = Condition::B;
  std::string label;
  std::vector<std::optional<Rational>> mu;  // mu[0] = mu0, mu[i] for i >= 1
  std::vector<int> fixedAtOrder;            // eps-order of the condition coefficient that fixed mu[i]; -1 if none
  int resolvedPrecision = 0;                // condition known (and annihilated) through this eps-order
  std::string status;

  int determined_through() const;  // largest m with mu[1..m] all determined
  double evaluate(double eps) const;
  double evaluate(double eps, int through) const;
  std::string to_string() const;
};

struct DeadBranch {
  Substitution assignment;
  int order = 0;
  std::string reason;
};

struct BoundarySolution {
  std::vector<BoundaryCurve> curves;
  std::vector<DeadBranch> dead;
  bool no_real_solution() const;
};

// Order by order: take the lowest nonvanishing eps-coefficient of the
// condition, solve it for its single undetermined unknown (double roots kept
// once, distinct roots branch), substitute and repeat until the known
// precision is exhausted.
BoundarySolution solve_boundary(const NormalFormResult& nf, Condition condition);

struct TransitionVerdict {
  bool decided = false;
  bool aPositive = false;
  bool vanishesOnCurve = false;
  int leadingOrder = -1;
  Rational leadingValue;
  int thresholdUnknown = 0;            // unknown whose range decides the sign of a
  std::vector<Rational> thresholdRoots;  // its rational roots, ascending
  std::string condition;                 // e.g. "mu2 < -42/5 or mu2 > 21/10"
  std::string summary;
};

TransitionVerdict check_transition_type(const NormalFormResult& nf, const BoundaryCurve& curve);

struct DiscriminantVerdict {
  bool infeasible = false;
  std::string reason;
};

// Is d = 0 together with a > 0 achievable along some curve?
DiscriminantVerdict check_d_zero_with_a_positive(const NormalFormResult& nf);

// Real rational roots of a univariate rational polynomial (coefficients low
// to high), each listed once; `irrational` flags real roots that are not rational.
struct RealRoots {
  std::vector<Rational> roots;
  bool irrational = false;
  bool unsupported = false;  // squarefree degree > 2 without a full rational factorization
};
RealRoots real_rational_roots(const std::vector<Rational>& coeffs);

}  // namespace isostab
