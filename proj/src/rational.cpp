#include "isostab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace isostab {

std::string to_string(const Rational& q) {
  return q.get_str();  // mpq prints "p/q" and omits a unit denominator
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t first = 0;
  while (first < s.size() && std::isspace(static_cast<unsigned char>(s[first]))) ++first;
  s = s.substr(first);
  if (s.empty()) throw std::invalid_argument("empty rational");

  bool negative = false;
  std::string body = s;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body = body.substr(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("bad rational: " + s);
    result = Rational(mpz_class(num, 10), mpz_class(den, 10));
    if (result.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    result.canonicalize();
  } else {
    int exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string::npos) {
      std::string exp_part = body.substr(e + 1);
      body = body.substr(0, e);
      bool exp_neg = false;
      if (!exp_part.empty() && (exp_part[0] == '+' || exp_part[0] == '-')) {
        exp_neg = exp_part[0] == '-';
        exp_part = exp_part.substr(1);
      }
      if (!all_digits(exp_part) || exp_part.size() > 4) throw std::invalid_argument("bad exponent: " + s);
      exponent = std::stoi(exp_part) * (exp_neg ? -1 : 1);
    }
    std::string int_part = body, frac_part;
    if (auto dot = body.find('.'); dot != std::string::npos) {
      int_part = body.substr(0, dot);
      frac_part = body.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("bad number: " + s);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
      throw std::invalid_argument("bad number: " + s);
    mpz_class digits(int_part + frac_part, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    result = Rational(digits, scale);
    result.canonicalize();
    if (exponent != 0) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
      if (exponent > 0)
        result *= Rational(p);
      else
        result /= Rational(p);
    }
  }
  return negative ? Rational(-result) : result;
}

Rational ratio(long n, long d) {
  if (d == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational r{mpz_class(n), mpz_class(d)};
  r.canonicalize();
  return r;
}

double to_double(const Rational& q) { return q.get_d(); }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace isostab
