#pragma once

#include <array>
#include <span>
#include <string>

#include "isostab/trig_coeff.hpp"

namespace isostab {

// Phase-space variables of the normalized problem, ordered (X1, Y1, X2, Y2);
// Y_i is conjugate to X_i.
enum Var : int { kX1 = 0, kY1 = 1, kX2 = 2, kY2 = 3 };
inline constexpr int kNumVars = 4;
inline constexpr int kNumMonomials = 10;

struct Monomial {
  int i;
  int j;
  const char* name;
};

inline constexpr std::array<Monomial, kNumMonomials> kMonomials{{{kX1, kX1, "X1^2"},
                                                                 {kX1, kY1, "X1*Y1"},
                                                                 {kY1, kY1, "Y1^2"},
                                                                 {kX2, kX2, "X2^2"},
                                                                 {kX2, kY2, "X2*Y2"},
                                                                 {kY2, kY2, "Y2^2"},
                                                                 {kX1, kX2, "X1*X2"},
                                                                 {kX1, kY2, "X1*Y2"},
                                                                 {kY1, kX2, "Y1*X2"},
                                                                 {kY1, kY2, "Y1*Y2"}}};

int monomial_index(int i, int j);
int monomial_index(const std::string& name);

class TrigQuadForm;

// Linear form sum_i c_i v_i with trigonometric coefficients.
struct LinearForm {
  std::array<TrigCoeff, kNumVars> c;
};

TrigQuadForm operator*(const LinearForm& a, const LinearForm& b);

// Quadratic form sum_m c_m * monomial_m over the ten monomials in kMonomials.
class TrigQuadForm {
 public:
  TrigQuadForm() = default;

  static TrigQuadForm monomial(int i, int j, const TrigCoeff& c);

  const TrigCoeff& coeff(int index) const { return c_[index]; }
  const TrigCoeff& coeff(int i, int j) const { return c_[monomial_index(i, j)]; }
  void add(int i, int j, const TrigCoeff& value) { c_[monomial_index(i, j)] += value; }
  void set(int index, const TrigCoeff& value) { c_[index] = value; }

  bool is_zero() const;
  bool is_autonomous() const;
  bool has_odd_harmonics() const;

  LinearForm partial(int var) const;
  TrigQuadForm derivative_nu() const;
  TrigQuadForm substitute(int index, const Rational& value) const;
  // Replaces each variable v_k by images[k] (a linear form in new variables).
  TrigQuadForm substitute_linear(const std::array<LinearForm, kNumVars>& images) const;

  double evaluate(const std::array<double, kNumVars>& z, double nu, std::span<const double> mu = {}) const;

  TrigQuadForm& operator+=(const TrigQuadForm& o);
  TrigQuadForm& operator-=(const TrigQuadForm& o);
  TrigQuadForm& operator*=(const TrigCoeff& s);
  friend TrigQuadForm operator+(TrigQuadForm a, const TrigQuadForm& b) { return a += b; }
  friend TrigQuadForm operator-(TrigQuadForm a, const TrigQuadForm& b) { return a -= b; }
  friend TrigQuadForm operator*(TrigQuadForm a, const TrigCoeff& s) { return a *= s; }
  friend TrigQuadForm operator*(const TrigCoeff& s, TrigQuadForm a) { return a *= s; }
  friend TrigQuadForm operator*(TrigQuadForm a, const Rational& s) { return a *= TrigCoeff(s); }
  friend TrigQuadForm operator*(const Rational& s, TrigQuadForm a) { return a *= TrigCoeff(s); }
  TrigQuadForm operator-() const;
  friend bool operator==(const TrigQuadForm& a, const TrigQuadForm& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::array<TrigCoeff, kNumMonomials> c_;
};

inline bool is_zero(const TrigQuadForm& f) { return f.is_zero(); }

// {F,G} = sum_i (dF/dX_i dG/dY_i - dF/dY_i dG/dX_i)
TrigQuadForm poisson_bracket(const TrigQuadForm& f, const TrigQuadForm& g);

enum class Period { TwoPi, FourPi };

struct AverageSplit {
  TrigQuadForm average;
  TrigQuadForm oscillatory;
};

// Throws std::invalid_argument when half-integer harmonics appear with a 2pi period.
AverageSplit split_average_oscillatory(const TrigQuadForm& f, Period period);

// W with dW/dnu = F and zero mean; rejects inputs with a nonzero mean.
TrigQuadForm antiderivative_zero_mean(const TrigQuadForm& f);

}  // namespace isostab
