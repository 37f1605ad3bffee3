#include "isostab/rational_poly.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace isostab {

RationalPoly::RationalPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exponents{}, c);
}

RationalPoly::RationalPoly(long c) : RationalPoly(Rational(c)) {}

RationalPoly RationalPoly::unknown(int index) {
  if (index < 1 || index > kMaxUnknowns) throw std::out_of_range("unknown index out of range");
  Exponents e{};
  e[index - 1] = 1;
  RationalPoly p;
  p.terms_.emplace(e, Rational(1));
  return p;
}

bool RationalPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational RationalPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<int> RationalPoly::unknowns() const {
  std::vector<int> out;
  for (int i = 0; i < kMaxUnknowns; ++i)
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) {
        out.push_back(i + 1);
        break;
      }
  return out;
}

int RationalPoly::degree_in(int index) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[index - 1]));
  return d;
}

int RationalPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

RationalPoly RationalPoly::substitute(int index, const Rational& value) const {
  RationalPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    const int k = f[index - 1];
    f[index - 1] = 0;
    Rational v = c;
    for (int i = 0; i < k; ++i) v *= value;
    out.add_term(f, v);
  }
  return out;
}

std::vector<Rational> RationalPoly::as_univariate(int index) const {
  std::vector<Rational> c(static_cast<std::size_t>(degree_in(index)) + 1);
  for (const auto& [e, v] : terms_) {
    for (int i = 0; i < kMaxUnknowns; ++i)
      if (i != index - 1 && e[i] != 0) throw std::logic_error("polynomial is not univariate");
    c[e[index - 1]] += v;
  }
  return c;
}

double RationalPoly::evaluate(std::span<const double> mu) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < kMaxUnknowns; ++i) {
      if (e[i] == 0) continue;
      const double m = i < static_cast<int>(mu.size()) ? mu[i] : 0.0;
      t *= std::pow(m, e[i]);
    }
    sum += t;
  }
  return sum;
}

void RationalPoly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < kMaxUnknowns; ++i) {
        const int s = ea[i] + eb[i];
        if (s > 255) throw std::overflow_error("exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      out.add_term(e, ca * cb);
    }
  return out;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) { return *this = *this * o; }

RationalPoly& RationalPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

std::string monomial_name(const Exponents& e) {
  std::string out;
  for (int i = 0; i < kMaxUnknowns; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "mu" + std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string RationalPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.rbegin(), terms_.rend());
  for (const auto& [e, c] : ordered) {
    const bool neg = sgn(c) < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const bool unit = e == Exponents{};
    if (unit)
      os << isostab::to_string(a);
    else if (a == 1)
      os << monomial_name(e);
    else
      os << isostab::to_string(a) << '*' << monomial_name(e);
  }
  return os.str();
}

Exponents parse_monomial(std::string_view text) {
  Exponents e{};
  if (text == "1") return e;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text.substr(pos, 2) != "mu") throw std::invalid_argument("bad monomial: " + std::string(text));
    pos += 2;
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) throw std::invalid_argument("bad monomial: " + std::string(text));
    const int index = std::stoi(std::string(text.substr(pos, end - pos)));
    if (index < 1 || index > kMaxUnknowns) throw std::invalid_argument("unknown out of range");
    pos = end;
    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw std::invalid_argument("bad exponent in monomial");
      power = std::stoi(std::string(text.substr(pos, end - pos)));
      pos = end;
    }
    e[index - 1] = static_cast<std::uint8_t>(e[index - 1] + power);
    if (pos < text.size()) {
      if (text[pos] != '*') throw std::invalid_argument("bad monomial: " + std::string(text));
      ++pos;
    }
  }
  return e;
}

namespace {

// Recursive-descent parser: expr := term (('+'|'-') term)*
//                           term := factor (('*'|'/') factor)*
//                           factor := ('-'|'+') factor | atom ('^' int)?
class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  RationalPoly parse() {
    RationalPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalPoly expr() {
    RationalPoly p = term();
    for (;;) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }

  RationalPoly term() {
    RationalPoly p = factor();
    for (;;) {
      if (accept('*')) {
        p *= factor();
      } else if (accept('/')) {
        RationalPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by non-constant or zero");
        p *= Rational(1) / d.constant_term();
      } else {
        return p;
      }
    }
  }

  RationalPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    RationalPoly base = atom();
    if (accept('^')) {
      skip();
      std::size_t end = pos_;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      if (end == pos_) fail("expected exponent");
      const int n = std::stoi(std::string(s_.substr(pos_, end - pos_)));
      pos_ = end;
      RationalPoly r(1L);
      for (int i = 0; i < n; ++i) r *= base;
      return r;
    }
    return base;
  }

  RationalPoly atom() {
    skip();
    if (accept('(')) {
      RationalPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (s_.substr(pos_, 2) == "mu") {
      pos_ += 2;
      std::size_t end = pos_;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      if (end == pos_) fail("expected unknown index");
      const int index = std::stoi(std::string(s_.substr(pos_, end - pos_)));
      pos_ = end;
      return RationalPoly::unknown(index);
    }
    std::size_t end = pos_;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
    if (end == pos_) fail("expected number, unknown or '('");
    mpz_class n(std::string(s_.substr(pos_, end - pos_)));
    pos_ = end;
    return RationalPoly(Rational(n));
  }
};

}  // namespace

RationalPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace isostab
