#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "isostab/rational_poly.hpp"

namespace isostab {

enum class Parity : std::uint8_t { Cos = 0, Sin = 1 };

// cos(half*nu/2) or sin(half*nu/2); harmonics are counted in units of nu/2 so
// that 2pi- and 4pi-periodic coefficients share one representation.
struct Harmonic {
  int half = 0;
  Parity parity = Parity::Cos;
  auto operator<=>(const Harmonic&) const = default;
};

// Finite Fourier series in nu/2 with RationalPoly coefficients.
class TrigCoeff {
 public:
  using TermMap = std::map<Harmonic, RationalPoly>;

  TrigCoeff() = default;
  TrigCoeff(const RationalPoly& c);  // NOLINT: constants convert implicitly
  TrigCoeff(const Rational& c);      // NOLINT
  TrigCoeff(long c);                 // NOLINT

  static TrigCoeff cos_half(int half, const RationalPoly& c = RationalPoly(1L));
  static TrigCoeff sin_half(int half, const RationalPoly& c = RationalPoly(1L));

  // Normalizes negative harmonics and drops sin(0) and zero coefficients.
  void add_term(int half, Parity parity, const RationalPoly& c);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  RationalPoly coefficient(int half, Parity parity) const;

  RationalPoly mean() const { return coefficient(0, Parity::Cos); }
  TrigCoeff oscillatory() const;
  bool is_constant() const;
  bool has_odd_harmonics() const;
  int max_harmonic() const;

  TrigCoeff derivative() const;  // d/dnu
  // Zero-mean antiderivative in nu; throws std::invalid_argument if the mean is nonzero.
  TrigCoeff antiderivative_zero_mean() const;

  TrigCoeff substitute(int index, const Rational& value) const;
  double evaluate(double nu, std::span<const double> mu = {}) const;

  TrigCoeff& operator+=(const TrigCoeff& o);
  TrigCoeff& operator-=(const TrigCoeff& o);
  TrigCoeff& operator*=(const RationalPoly& c);
  friend TrigCoeff operator+(TrigCoeff a, const TrigCoeff& b) { return a += b; }
  friend TrigCoeff operator-(TrigCoeff a, const TrigCoeff& b) { return a -= b; }
  friend TrigCoeff operator*(const TrigCoeff& a, const TrigCoeff& b);
  friend TrigCoeff operator*(TrigCoeff a, const RationalPoly& c) { return a *= c; }
  friend TrigCoeff operator*(const RationalPoly& c, TrigCoeff a) { return a *= c; }
  friend TrigCoeff operator*(TrigCoeff a, const Rational& c) { return a *= RationalPoly(c); }
  friend TrigCoeff operator*(const Rational& c, TrigCoeff a) { return a *= RationalPoly(c); }
  TrigCoeff operator-() const;
  friend bool operator==(const TrigCoeff& a, const TrigCoeff& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  TermMap terms_;
};

inline bool is_zero(const TrigCoeff& c) { return c.is_zero(); }

// Canonical JSON key of a harmonic: "c<half>" or "s<half>".
std::string harmonic_key(const Harmonic& h);
Harmonic parse_harmonic_key(const std::string& key);

}  // namespace isostab
