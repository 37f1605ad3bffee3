#pragma once

#include "isostab/normalizer.hpp"

namespace isostab {

// Everything derived from one resonance: rotation, normal form, coefficients,
// boundary curves and verdicts.
struct ResonanceAnalysis {
  int n2 = 0;
  int order = 0;
  Convention convention = Convention::Canonical;
  NormalFormResult nf;
  CharCoeffs coeffs;      // mu1 free
  CharCoeffs coeffsMu1;   // mu1 = 0
  ForwardCheck forward;
  BoundarySolution bCurves;
  bool bIdenticallyZero = false;   // b vanishes through its precision: no constraint
  BoundarySolution blockCurves;    // d2 = 0 (empty when K is coupled)
  std::vector<TransitionVerdict> transitions;  // one per boundary() curve
  DiscriminantVerdict dCheck;

  // The curves bounding the tongue: the b = 0 curves, or the d2 = 0 curves
  // when b places no constraint (the (X1, Y1) block is parabolic).
  const BoundarySolution& boundary() const { return bIdenticallyZero ? blockCurves : bCurves; }
  Condition boundary_condition() const { return bIdenticallyZero ? Condition::Block : Condition::B; }
};

// Expands the family along mu = mu*(N2) + sum mu_i eps^i, applies the
// rotation with N1 = 2, normalizes over 2 pi (N2 even) or 4 pi (N2 odd).
NormalFormResult normalize_resonance(int n2, int order, Convention convention);
ResonanceAnalysis analyze_resonance(int n2, int order, Convention convention);

}  // namespace isostab
