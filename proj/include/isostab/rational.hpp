#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace isostab {

using Rational = mpq_class;

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

// Accepts "p/q", integers and plain decimals such as "-0.125" or "2.5e-3";
// decimals are converted exactly. Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// Canonicalized n/d; gmp leaves two-argument construction uncanonicalized.
Rational ratio(long n, long d);

double to_double(const Rational& q);

// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& q);

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace isostab
