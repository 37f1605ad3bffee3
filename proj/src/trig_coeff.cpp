#include "isostab/trig_coeff.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace isostab {

TrigCoeff::TrigCoeff(const RationalPoly& c) { add_term(0, Parity::Cos, c); }
TrigCoeff::TrigCoeff(const Rational& c) : TrigCoeff(RationalPoly(c)) {}
TrigCoeff::TrigCoeff(long c) : TrigCoeff(RationalPoly(c)) {}

TrigCoeff TrigCoeff::cos_half(int half, const RationalPoly& c) {
  TrigCoeff t;
  t.add_term(half, Parity::Cos, c);
  return t;
}

TrigCoeff TrigCoeff::sin_half(int half, const RationalPoly& c) {
  TrigCoeff t;
  t.add_term(half, Parity::Sin, c);
  return t;
}

void TrigCoeff::add_term(int half, Parity parity, const RationalPoly& c) {
  if (c.is_zero()) return;
  RationalPoly v = c;
  if (half < 0) {
    half = -half;
    if (parity == Parity::Sin) v = -v;
  }
  if (half == 0 && parity == Parity::Sin) return;
  auto [it, inserted] = terms_.emplace(Harmonic{half, parity}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RationalPoly TrigCoeff::coefficient(int half, Parity parity) const {
  auto it = terms_.find(Harmonic{half, parity});
  return it == terms_.end() ? RationalPoly() : it->second;
}

TrigCoeff TrigCoeff::oscillatory() const {
  TrigCoeff out = *this;
  out.terms_.erase(Harmonic{0, Parity::Cos});
  return out;
}

bool TrigCoeff::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Harmonic{0, Parity::Cos});
}

bool TrigCoeff::has_odd_harmonics() const {
  for (const auto& [h, c] : terms_)
    if (h.half % 2 != 0) return true;
  return false;
}

int TrigCoeff::max_harmonic() const {
  int m = 0;
  for (const auto& [h, c] : terms_) m = std::max(m, h.half);
  return m;
}

TrigCoeff TrigCoeff::derivative() const {
  TrigCoeff out;
  for (const auto& [h, c] : terms_) {
    if (h.half == 0) continue;
    const Rational w = ratio(h.half, 2);
    if (h.parity == Parity::Cos)
      out.add_term(h.half, Parity::Sin, c * Rational(-w));
    else
      out.add_term(h.half, Parity::Cos, c * w);
  }
  return out;
}

TrigCoeff TrigCoeff::antiderivative_zero_mean() const {
  if (!mean().is_zero()) throw std::invalid_argument("antiderivative_zero_mean: input has nonzero mean");
  TrigCoeff out;
  for (const auto& [h, c] : terms_) {
    const Rational inv = ratio(2, h.half);
    if (h.parity == Parity::Cos)
      out.add_term(h.half, Parity::Sin, c * inv);
    else
      out.add_term(h.half, Parity::Cos, c * Rational(-inv));
  }
  return out;
}

TrigCoeff TrigCoeff::substitute(int index, const Rational& value) const {
  TrigCoeff out;
  for (const auto& [h, c] : terms_) out.add_term(h.half, h.parity, c.substitute(index, value));
  return out;
}

double TrigCoeff::evaluate(double nu, std::span<const double> mu) const {
  double sum = 0.0;
  for (const auto& [h, c] : terms_) {
    const double arg = 0.5 * h.half * nu;
    sum += c.evaluate(mu) * (h.parity == Parity::Cos ? std::cos(arg) : std::sin(arg));
  }
  return sum;
}

TrigCoeff& TrigCoeff::operator+=(const TrigCoeff& o) {
  for (const auto& [h, c] : o.terms_) add_term(h.half, h.parity, c);
  return *this;
}

TrigCoeff& TrigCoeff::operator-=(const TrigCoeff& o) {
  for (const auto& [h, c] : o.terms_) add_term(h.half, h.parity, -c);
  return *this;
}

TrigCoeff& TrigCoeff::operator*=(const RationalPoly& c) {
  TrigCoeff out;
  for (const auto& [h, v] : terms_) out.add_term(h.half, h.parity, v * c);
  return *this = out;
}

// Product-to-sum linearization:
//   cos a cos b = (cos(a-b) + cos(a+b))/2    sin a sin b = (cos(a-b) - cos(a+b))/2
//   sin a cos b = (sin(a+b) + sin(a-b))/2    cos a sin b = (sin(a+b) - sin(a-b))/2
TrigCoeff operator*(const TrigCoeff& a, const TrigCoeff& b) {
  TrigCoeff out;
  const Rational half = ratio(1, 2);
  for (const auto& [ha, ca] : a.terms_)
    for (const auto& [hb, cb] : b.terms_) {
      const RationalPoly p = ca * cb * half;
      const int sum = ha.half + hb.half, diff = ha.half - hb.half;
      if (ha.parity == Parity::Cos && hb.parity == Parity::Cos) {
        out.add_term(diff, Parity::Cos, p);
        out.add_term(sum, Parity::Cos, p);
      } else if (ha.parity == Parity::Sin && hb.parity == Parity::Sin) {
        out.add_term(diff, Parity::Cos, p);
        out.add_term(sum, Parity::Cos, -p);
      } else if (ha.parity == Parity::Sin) {
        out.add_term(sum, Parity::Sin, p);
        out.add_term(diff, Parity::Sin, p);
      } else {
        out.add_term(sum, Parity::Sin, p);
        out.add_term(diff, Parity::Sin, -p);
      }
    }
  return out;
}

TrigCoeff TrigCoeff::operator-() const {
  TrigCoeff out = *this;
  for (auto& [h, c] : out.terms_) c = -c;
  return out;
}

std::string TrigCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [h, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (h.half == 0) {
      os << '(' << c.to_string() << ')';
      continue;
    }
    std::string arg = h.half % 2 == 0 ? (h.half == 2 ? "nu" : std::to_string(h.half / 2) + "nu")
                                      : (h.half == 1 ? "nu/2" : std::to_string(h.half) + "nu/2");
    os << '(' << c.to_string() << ")*" << (h.parity == Parity::Cos ? "cos(" : "sin(") << arg << ')';
  }
  return os.str();
}

std::string harmonic_key(const Harmonic& h) {
  return (h.parity == Parity::Cos ? "c" : "s") + std::to_string(h.half);
}

Harmonic parse_harmonic_key(const std::string& key) {
  if (key.size() < 2 || (key[0] != 'c' && key[0] != 's')) throw std::invalid_argument("bad harmonic key: " + key);
  char* end = nullptr;
  const long half = std::strtol(key.c_str() + 1, &end, 10);
  if (*end != '\0' || half < 0) throw std::invalid_argument("bad harmonic key: " + key);
  return Harmonic{static_cast<int>(half), key[0] == 'c' ? Parity::Cos : Parity::Sin};
}

}  // namespace isostab
