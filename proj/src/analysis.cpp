#include "isostab/analysis.hpp"

#include "isostab/spectral.hpp"

namespace isostab {

NormalFormResult normalize_resonance(int n2, int order, Convention convention) {
  if (n2 < 3 || n2 > 5) throw DomainError("normalize_resonance: N2 must be 3, 4 or 5");
  if (order < 1 || order > kMaxUnknowns)
    throw DomainError("normalize_resonance: order must lie in [1, " + std::to_string(kMaxUnknowns) + "]");
  const Rational mu0 = resonance_mu(n2);
  const HamiltonianSeries h = apply_double_rotation(substitute_curve(mu0, order), 2, n2);
  NormalFormResult nf = deprit_hori_normalize(h, order, n2 % 2 ? Period::FourPi : Period::TwoPi, convention);
  nf.n2 = n2;
  nf.mu0 = mu0;
  return nf;
}

ResonanceAnalysis analyze_resonance(int n2, int order, Convention convention) {
  ResonanceAnalysis r;
  r.n2 = n2;
  r.order = order;
  r.convention = convention;
  r.nf = normalize_resonance(n2, order, convention);
  r.coeffs = characteristic_coeffs(r.nf);
  r.coeffsMu1 = characteristic_coeffs(r.nf, {{1, Rational(0)}});
  r.forward = forward_transform_check(r.nf);
  r.bIdenticallyZero = r.coeffs.b.valuation() > r.coeffs.b.precision();
  r.bCurves = solve_boundary(r.nf, Condition::B);
  if (r.coeffs.blockDiagonal) r.blockCurves = solve_boundary(r.nf, Condition::Block);
  for (const auto& c : r.boundary().curves) r.transitions.push_back(check_transition_type(r.nf, c));
  r.dCheck = check_d_zero_with_a_positive(r.nf);
  return r;
}

}  // namespace isostab
