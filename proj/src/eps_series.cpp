#include "isostab/eps_series.hpp"

namespace isostab {

ScalarSeries series_inverse(const ScalarSeries& f) {
  series_detail::require_plain(f.scaling(), Scaling::Plain);
  if (!f[0].is_constant() || f[0].is_zero())
    throw std::invalid_argument("series_inverse: constant term must be a nonzero rational");
  const Rational inv0 = Rational(1) / f[0].constant_term();
  ScalarSeries g(f.precision());
  g[0] = RationalPoly(inv0);
  for (int n = 1; n <= f.precision(); ++n) {
    RationalPoly s;
    for (int k = 1; k <= n; ++k) s += f[k] * g[n - k];
    g[n] = s * Rational(-inv0);
  }
  return g;
}

ScalarSeries series_sqrt(const ScalarSeries& f, const Rational& root0) {
  series_detail::require_plain(f.scaling(), Scaling::Plain);
  if (sgn(root0) == 0 || RationalPoly(Rational(root0 * root0)) != f[0])
    throw std::invalid_argument("series_sqrt: root0 is not a nonzero root of the constant term");
  const Rational inv = Rational(1) / Rational(2 * root0);
  ScalarSeries r(f.precision());
  r[0] = RationalPoly(root0);
  for (int n = 1; n <= f.precision(); ++n) {
    RationalPoly s = f[n];
    for (int k = 1; k < n; ++k) s -= r[k] * r[n - k];
    r[n] = s * inv;
  }
  return r;
}

ScalarSeries series_substitute(const ScalarSeries& f, int index, const Rational& value) {
  return f.map([&](const RationalPoly& p) { return p.substitute(index, value); });
}

}  // namespace isostab
