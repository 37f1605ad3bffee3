#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "isostab/spectral.hpp"

using namespace isostab;
using cd = std::complex<double>;

TEST_CASE("Hessian of W at the equilibrium") {
  const LinearizationMatrix lin = linearization_full(0.0, 0.0, {3.0, 0.0, 1.0});
  CHECK(lin.hessianW(0, 0) == doctest::Approx(3.5));
  CHECK(lin.hessianW(0, 1) == doctest::Approx(0.0));
  CHECK(lin.hessianW(1, 1) == doctest::Approx(-1.75));
  CHECK(lin.hessianW(2, 2) == doctest::Approx(-7.0));
}

TEST_CASE("linearization is infinitesimally symplectic") {
  for (double theta : {0.0, 0.5, 2.0, 4.4})
    for (double eps : {0.0, 0.3}) CHECK(symplectic_defect(linearization_full(theta, 1.0, {2.0, eps, 1.0}).A) <= 1e-14);
}

TEST_CASE("characteristic polynomial") {
  const auto c = characteristic_poly(3.0);
  // -lambda^2 (lambda^2 + 1)(lambda^2 + 4) = -4 lambda^2 - 5 lambda^4 - lambda^6
  const std::array<double, 7> expect{0, 0, -4, 0, -5, 0, -1};
  for (int i = 0; i < 7; ++i) CHECK(c[i] == doctest::Approx(expect[i]));
  const auto c0 = characteristic_poly_exact(0);
  CHECK(c0 == std::array<Rational, 7>{0, 0, -1, 0, -2, 0, -1});
  CHECK(characteristic_poly_exact(12)[2] == ratio(-25, 4));

  CHECK(max_pairing_error(characteristic_roots(3.0), {0, 0, cd(0, 1), cd(0, -1), cd(0, 2), cd(0, -2)}) <= 1e-15);
  CHECK(max_pairing_error(characteristic_roots(12.0), {0, 0, cd(0, 1), cd(0, -1), cd(0, 2.5), cd(0, -2.5)}) <= 1e-15);
}

TEST_CASE("numeric spectrum matches the characteristic roots") {
  for (int k = 0; k < 10; ++k) {
    const auto s = spectrum_with_zero_block(linearization_full(0.6 * k, 0.0, {3.0, 0.0, 1.0}).A);
    CHECK(max_pairing_error(s.eigenvalues, characteristic_roots(3.0)) <= 1e-10);
  }
  const auto s = spectrum_with_zero_block(linearization_full(1.1, 0.0, {2.0, 0.0, 1.0}).A);
  CHECK(max_pairing_error(s.eigenvalues, characteristic_roots(2.0)) <= 1e-10);
}

TEST_CASE("the zero eigenvalue is a Jordan block") {
  const Mat6 a = linearization_full(0.7, 0.0, {3.0, 0.0, 1.0}).A;
  CHECK(numerical_rank(a, 1e-10) == 5);
  CHECK(numerical_rank(a * a, 1e-10) == 4);
  const auto s = spectrum_with_zero_block(a);
  CHECK(s.zeroGeometric == 1);
  CHECK(s.zeroAlgebraic == 2);
  CHECK(std::count(s.eigenvalues.begin(), s.eigenvalues.end(), cd(0, 0)) == 2);
}

TEST_CASE("spectrum symmetry") {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ev = spectrum_with_zero_block(linearization_full(6 * u(rng), 0.0, {20 * u(rng), 0.0, 1.0}).A).eigenvalues;
    std::vector<cd> neg, conj;
    for (const cd& l : ev) {
      neg.push_back(-l);
      conj.push_back(std::conj(l));
    }
    CHECK(max_pairing_error(ev, neg) <= 1e-12);
    CHECK(max_pairing_error(ev, conj) <= 1e-12);
  }
}

TEST_CASE("frequencies") {
  CHECK(frequencies(20.0 / 23.0).omega2 == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(frequencies(3.0).omega2 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(frequencies(3.0).omega1 == 1.0);
  CHECK(std::abs(frequencies(1e6).omega2 - 2 * std::numbers::sqrt2) <= 1e-5);
  CHECK(frequencies(1e6).omega2 < 2 * std::numbers::sqrt2);
  CHECK(omega2_sq(ratio(1, 2)) == ratio(16, 9));
}

TEST_CASE("resonance scan") {
  auto hits = kgl_resonance_scan({0, 20});
  REQUIRE(hits.size() == 3);
  CHECK(hits[0].n2 == 3);
  CHECK(hits[0].muStar == ratio(20, 23));
  CHECK(hits[1].n2 == 4);
  CHECK(hits[1].muStar == 3);
  CHECK(hits[2].n2 == 5);
  CHECK(hits[2].muStar == 12);
  for (const auto& h : hits) CHECK(4 * omega2_sq(h.muStar) == h.n2 * h.n2);

  CHECK(kgl_resonance_scan({0, ratio(1, 2)}).empty());
  CHECK(kgl_resonance_scan({0, 1}).size() == 1);
  MuInterval all{0, 0};
  all.hiInfinite = true;
  CHECK(kgl_resonance_scan(all).size() == 3);
  CHECK(kgl_resonance_scan({3, 12}).size() == 1);  // open at 3, closed at 12
  CHECK(resonance_mu(4) == 3);
  CHECK_THROWS(resonance_mu(6));
  CHECK_THROWS(resonance_mu(2));
}
