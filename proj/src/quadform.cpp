#include "isostab/quadform.hpp"

#include <sstream>
#include <stdexcept>

namespace isostab {

int monomial_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int m = 0; m < kNumMonomials; ++m) {
    const int a = std::min(kMonomials[m].i, kMonomials[m].j), b = std::max(kMonomials[m].i, kMonomials[m].j);
    if (a == i && b == j) return m;
  }
  throw std::out_of_range("monomial_index: bad variable pair");
}

int monomial_index(const std::string& name) {
  for (int m = 0; m < kNumMonomials; ++m)
    if (name == kMonomials[m].name) return m;
  throw std::invalid_argument("unknown monomial: " + name);
}

TrigQuadForm operator*(const LinearForm& a, const LinearForm& b) {
  TrigQuadForm out;
  for (int i = 0; i < kNumVars; ++i) {
    if (a.c[i].is_zero()) continue;
    for (int j = 0; j < kNumVars; ++j) {
      if (b.c[j].is_zero()) continue;
      out.add(i, j, a.c[i] * b.c[j]);
    }
  }
  return out;
}

TrigQuadForm TrigQuadForm::monomial(int i, int j, const TrigCoeff& c) {
  TrigQuadForm f;
  f.add(i, j, c);
  return f;
}

bool TrigQuadForm::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool TrigQuadForm::is_autonomous() const {
  for (const auto& c : c_)
    if (!c.is_constant()) return false;
  return true;
}

bool TrigQuadForm::has_odd_harmonics() const {
  for (const auto& c : c_)
    if (c.has_odd_harmonics()) return true;
  return false;
}

LinearForm TrigQuadForm::partial(int var) const {
  LinearForm out;
  for (int m = 0; m < kNumMonomials; ++m) {
    const auto& [i, j, name] = kMonomials[m];
    if (c_[m].is_zero()) continue;
    if (i == j) {
      if (i == var) out.c[i] += c_[m] * Rational(2);
    } else if (i == var) {
      out.c[j] += c_[m];
    } else if (j == var) {
      out.c[i] += c_[m];
    }
  }
  return out;
}

TrigQuadForm TrigQuadForm::derivative_nu() const {
  TrigQuadForm out;
  for (int m = 0; m < kNumMonomials; ++m) out.c_[m] = c_[m].derivative();
  return out;
}

TrigQuadForm TrigQuadForm::substitute(int index, const Rational& value) const {
  TrigQuadForm out;
  for (int m = 0; m < kNumMonomials; ++m) out.c_[m] = c_[m].substitute(index, value);
  return out;
}

TrigQuadForm TrigQuadForm::substitute_linear(const std::array<LinearForm, kNumVars>& images) const {
  TrigQuadForm out;
  for (int m = 0; m < kNumMonomials; ++m) {
    if (c_[m].is_zero()) continue;
    TrigQuadForm prod = images[kMonomials[m].i] * images[kMonomials[m].j];
    out += prod * c_[m];
  }
  return out;
}

double TrigQuadForm::evaluate(const std::array<double, kNumVars>& z, double nu, std::span<const double> mu) const {
  double sum = 0.0;
  for (int m = 0; m < kNumMonomials; ++m) {
    if (c_[m].is_zero()) continue;
    sum += c_[m].evaluate(nu, mu) * z[kMonomials[m].i] * z[kMonomials[m].j];
  }
  return sum;
}

TrigQuadForm& TrigQuadForm::operator+=(const TrigQuadForm& o) {
  for (int m = 0; m < kNumMonomials; ++m) c_[m] += o.c_[m];
  return *this;
}

TrigQuadForm& TrigQuadForm::operator-=(const TrigQuadForm& o) {
  for (int m = 0; m < kNumMonomials; ++m) c_[m] -= o.c_[m];
  return *this;
}

TrigQuadForm& TrigQuadForm::operator*=(const TrigCoeff& s) {
  for (auto& c : c_)
    if (!c.is_zero()) c = c * s;
  return *this;
}

TrigQuadForm TrigQuadForm::operator-() const {
  TrigQuadForm out;
  for (int m = 0; m < kNumMonomials; ++m) out.c_[m] = -c_[m];
  return out;
}

std::string TrigQuadForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m < kNumMonomials; ++m) {
    if (c_[m].is_zero()) continue;
    if (!first) os << "\n";
    first = false;
    os << kMonomials[m].name << ": " << c_[m].to_string();
  }
  return first ? "0" : os.str();
}

TrigQuadForm poisson_bracket(const TrigQuadForm& f, const TrigQuadForm& g) {
  TrigQuadForm out;
  for (int pair = 0; pair < 2; ++pair) {
    const int x = 2 * pair, y = 2 * pair + 1;
    out += f.partial(x) * g.partial(y);
    out -= f.partial(y) * g.partial(x);
  }
  return out;
}

AverageSplit split_average_oscillatory(const TrigQuadForm& f, Period period) {
  if (period == Period::TwoPi && f.has_odd_harmonics())
    throw std::invalid_argument("split_average_oscillatory: half-integer harmonics need the 4pi period");
  AverageSplit s;
  for (int m = 0; m < kNumMonomials; ++m) {
    s.average.set(m, TrigCoeff(f.coeff(m).mean()));
    s.oscillatory.set(m, f.coeff(m).oscillatory());
  }
  return s;
}

TrigQuadForm antiderivative_zero_mean(const TrigQuadForm& f) {
  TrigQuadForm out;
  for (int m = 0; m < kNumMonomials; ++m) out.set(m, f.coeff(m).antiderivative_zero_mean());
  return out;
}

}  // namespace isostab
