#pragma once

#include <string>
#include <vector>

#include "isostab/analysis.hpp"

namespace isostab {

enum class GoldenKind {
  KCoefficient,    // target = monomial, index = j (factorial K_j), expected = polynomial
  KConstant,       // constant part of that coefficient
  KPlain,          // as KCoefficient, for the eps^j coefficient of K in plain powers
  CharMu1Zero,     // target = a|b|d, index = eps power (plain), mu1 = 0, expected = polynomial
  CharFree,        // same with mu1 free
  CurveValues,     // index = i, expected = comma-separated distinct mu_i over the b = 0 branches
  Thresholds,      // expected = comma-separated roots of the leading a condition
  Conclusion,      // target = "a-violated-on-b-curves" | "d-zero-infeasible", expected = "true"
};

struct Golden {
  int n2 = 0;
  GoldenKind kind = GoldenKind::KCoefficient;
  std::string label;
  int index = 0;
  std::string target;
  std::string expected;
};

// The published values, written as exact expressions.
const std::vector<Golden>& published_goldens();

enum class GoldenStatus { Pass, Fail, Skipped };
const char* to_string(GoldenStatus s);

struct GoldenResult {
  GoldenStatus status = GoldenStatus::Skipped;
  std::string got;
  std::string detail;
};

// Skipped when the analysis order is too shallow to decide the value.
GoldenResult check_golden(const ResonanceAnalysis& r, const Golden& g);

}  // namespace isostab
