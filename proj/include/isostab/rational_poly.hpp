#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isostab/rational.hpp"

namespace isostab {

// Curve unknowns mu_1..mu_6 (index 1-based in the public API).
inline constexpr int kMaxUnknowns = 6;

using Exponents = std::array<std::uint8_t, kMaxUnknowns>;

// Sparse polynomial with exact rational coefficients in the curve unknowns.
// Zero coefficients are never stored.
class RationalPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  RationalPoly() = default;
  RationalPoly(const Rational& c);  // NOLINT: constants convert implicitly
  RationalPoly(long c);             // NOLINT

  static RationalPoly unknown(int index);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const TermMap& terms() const { return terms_; }

  std::vector<int> unknowns() const;
  int degree_in(int index) const;
  int total_degree() const;

  RationalPoly substitute(int index, const Rational& value) const;
  // Coefficients c_0..c_n of the polynomial seen as univariate in mu_index.
  // Throws std::logic_error if any other unknown is present.
  std::vector<Rational> as_univariate(int index) const;
  // mu[0] holds mu_1; missing trailing entries count as zero.
  double evaluate(std::span<const double> mu) const;

  void add_term(const Exponents& e, const Rational& c);

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  RationalPoly& operator*=(const Rational& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
  friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }
  RationalPoly operator-() const;
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.terms_ == b.terms_; }

  // Human form, e.g. "-5/98*mu1^2 + 2/7*mu2 + 9/10"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  TermMap terms_;
};

inline bool is_zero(const RationalPoly& p) { return p.is_zero(); }

std::string monomial_name(const Exponents& e);
// Inverse of monomial_name: "1", "mu2", "mu1^2*mu3".
Exponents parse_monomial(std::string_view text);

// Parses expressions over rationals and mu1..mu6 with + - * / ^ and
// parentheses, e.g. "(1/2450)*(5*mu2+42)*(10*mu2-21)". Division is only
// allowed by constants.
RationalPoly parse_poly(std::string_view text);

}  // namespace isostab
