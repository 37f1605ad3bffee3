#include "isostab/hamiltonian_family.hpp"

namespace isostab {

Rational omega2_squared(const Rational& mu) {
  Rational r = Rational(4 * (2 * mu + 1)) / Rational(mu + 4);
  r.canonicalize();
  return r;
}

TrigCoeff cos_power(int k) {
  TrigCoeff c(1L);
  const TrigCoeff cos_nu = TrigCoeff::cos_half(2);
  for (int i = 0; i < k; ++i) c = c * cos_nu;
  return c;
}

HamiltonianSeries substitute_curve(const Rational& mu0, int order) {
  if (order < 0 || order > kMaxUnknowns)
    throw TruncationError("substitute_curve: order exceeds the number of curve unknowns");
  if (sgn(mu0) <= 0) throw std::invalid_argument("substitute_curve: mu0 must be positive");

  ScalarSeries mu(order);
  mu[0] = RationalPoly(mu0);
  for (int i = 1; i <= order; ++i) mu[i] = RationalPoly::unknown(i);

  ScalarSeries num(order), den(order);
  for (int i = 0; i <= order; ++i) {
    num[i] = mu[i] * Rational(8);
    den[i] = mu[i];
  }
  num[0] += RationalPoly(4L);
  den[0] += RationalPoly(4L);

  const ScalarSeries s = num * series_inverse(den);
  const auto root0 = exact_sqrt(s[0].constant_term());
  if (!root0) throw std::invalid_argument("substitute_curve: omega2(mu0) is not rational");
  const ScalarSeries w = series_sqrt(s, *root0);
  const ScalarSeries g = scale(series_inverse(w) - w, ratio(1, 2));

  HamiltonianSeries h(order);
  const Rational half = ratio(1, 2);
  h[0] += TrigQuadForm::monomial(kX1, kX1, half) + TrigQuadForm::monomial(kY1, kY1, half);
  for (int k = 0; k <= order; ++k) {
    const TrigCoeff c(w[k] * half);
    h[k] += TrigQuadForm::monomial(kX2, kX2, c) + TrigQuadForm::monomial(kY2, kY2, c);
  }
  for (int k = 1; k <= order; ++k) {
    const TrigCoeff ck = cos_power(k) * Rational(k % 2 == 1 ? 1 : -1);
    h[k] += TrigQuadForm::monomial(kY1, kY1, ck * ratio(3, 2));
    for (int j = 0; k + j <= order; ++j) h[k + j] += TrigQuadForm::monomial(kY2, kY2, ck * g[j]);
  }
  return h;
}

HamiltonianSeries apply_double_rotation(const HamiltonianSeries& h, int n1, int n2) {
  if (h.scaling() != Scaling::Plain) throw std::invalid_argument("apply_double_rotation: expects plain scaling");
  std::array<LinearForm, kNumVars> images;
  const int rot[2] = {n1, n2};
  for (int pair = 0; pair < 2; ++pair) {
    const int x = 2 * pair, y = 2 * pair + 1;
    const TrigCoeff c = TrigCoeff::cos_half(rot[pair]), s = TrigCoeff::sin_half(rot[pair]);
    images[x].c[x] = c;
    images[x].c[y] = s;
    images[y].c[x] = -s;
    images[y].c[y] = c;
  }
  HamiltonianSeries out(h.precision());
  for (int k = 0; k <= h.precision(); ++k) out[k] = h[k].substitute_linear(images);
  out[0] -= TrigQuadForm::monomial(kX1, kX1, ratio(n1, 4)) + TrigQuadForm::monomial(kY1, kY1, ratio(n1, 4));
  out[0] -= TrigQuadForm::monomial(kX2, kX2, ratio(n2, 4)) + TrigQuadForm::monomial(kY2, kY2, ratio(n2, 4));
  return out;
}

}  // namespace isostab
