#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "isostab/rational.hpp"
#include "isostab/rational_poly.hpp"

namespace isostab {

// Plain: f = sum eps^k f_k.  Factorial: f = sum eps^k/k! f_k.
enum class Scaling { Plain, Factorial };

// Truncated power series in eps. Coefficients 0..precision() are known
// exactly; everything beyond is unknown (not zero).
template <class T>
class EpsSeries {
 public:
  EpsSeries() = default;
  explicit EpsSeries(int precision, Scaling scaling = Scaling::Plain)
      : terms_(static_cast<std::size_t>(precision) + 1), scaling_(scaling) {
    if (precision < 0) throw std::invalid_argument("EpsSeries: negative precision");
  }

  int precision() const { return static_cast<int>(terms_.size()) - 1; }
  Scaling scaling() const { return scaling_; }
  const std::vector<T>& terms() const { return terms_; }

  T& operator[](int k) { return terms_.at(static_cast<std::size_t>(k)); }
  const T& operator[](int k) const { return terms_.at(static_cast<std::size_t>(k)); }

  // Index of the first nonzero coefficient, or precision()+1 if none is known.
  int valuation() const {
    for (int k = 0; k <= precision(); ++k)
      if (!is_zero(terms_[k])) return k;
    return precision() + 1;
  }

  EpsSeries truncated(int p) const {
    if (p > precision()) throw std::invalid_argument("EpsSeries: cannot extend precision by truncation");
    EpsSeries out(p, scaling_);
    for (int k = 0; k <= p; ++k) out.terms_[k] = terms_[k];
    return out;
  }

  EpsSeries to_plain() const {
    if (scaling_ == Scaling::Plain) return *this;
    EpsSeries out(precision(), Scaling::Plain);
    for (int k = 0; k <= precision(); ++k) out.terms_[k] = terms_[k] * Rational(Rational(1) / factorial(k));
    return out;
  }

  EpsSeries to_factorial() const {
    if (scaling_ == Scaling::Factorial) return *this;
    EpsSeries out(precision(), Scaling::Factorial);
    for (int k = 0; k <= precision(); ++k) out.terms_[k] = terms_[k] * factorial(k);
    return out;
  }

  template <class F>
  auto map(F f) const {
    using U = decltype(f(terms_[0]));
    EpsSeries<U> out(precision(), scaling_);
    for (int k = 0; k <= precision(); ++k) out[k] = f(terms_[k]);
    return out;
  }

 private:
  std::vector<T> terms_;
  Scaling scaling_ = Scaling::Plain;
};

namespace series_detail {
inline void require_plain(Scaling a, Scaling b) {
  if (a != Scaling::Plain || b != Scaling::Plain)
    throw std::invalid_argument("EpsSeries arithmetic requires plain scaling; convert explicitly");
}
}  // namespace series_detail

template <class T>
EpsSeries<T> operator+(const EpsSeries<T>& a, const EpsSeries<T>& b) {
  if (a.scaling() != b.scaling()) throw std::invalid_argument("EpsSeries: mixed scaling");
  const int p = std::min(a.precision(), b.precision());
  EpsSeries<T> out(p, a.scaling());
  for (int k = 0; k <= p; ++k) out[k] = a[k] + b[k];
  return out;
}

template <class T>
EpsSeries<T> operator-(const EpsSeries<T>& a, const EpsSeries<T>& b) {
  if (a.scaling() != b.scaling()) throw std::invalid_argument("EpsSeries: mixed scaling");
  const int p = std::min(a.precision(), b.precision());
  EpsSeries<T> out(p, a.scaling());
  for (int k = 0; k <= p; ++k) out[k] = a[k] - b[k];
  return out;
}

// Product with precision propagation: if f is known through p_f with
// valuation v_f (and likewise g), f*g is known through min(p_f+v_g, p_g+v_f).
template <class T>
EpsSeries<T> operator*(const EpsSeries<T>& a, const EpsSeries<T>& b) {
  series_detail::require_plain(a.scaling(), b.scaling());
  const int va = a.valuation(), vb = b.valuation();
  const int p = std::min(a.precision() + vb, b.precision() + va);
  EpsSeries<T> out(p);
  for (int k = 0; k <= p; ++k) {
    T sum{};
    for (int i = std::max(va, k - b.precision()); i <= std::min(k - vb, a.precision()); ++i) sum += a[i] * b[k - i];
    out[k] = sum;
  }
  return out;
}

template <class T, class S>
EpsSeries<T> scale(const EpsSeries<T>& a, const S& s) {
  EpsSeries<T> out(a.precision(), a.scaling());
  for (int k = 0; k <= a.precision(); ++k) out[k] = a[k] * s;
  return out;
}

using ScalarSeries = EpsSeries<RationalPoly>;

// 1/f for f with a nonzero rational constant term.
ScalarSeries series_inverse(const ScalarSeries& f);
// sqrt(f) with the given exact root of the constant term.
ScalarSeries series_sqrt(const ScalarSeries& f, const Rational& root0);
ScalarSeries series_substitute(const ScalarSeries& f, int index, const Rational& value);

}  // namespace isostab
