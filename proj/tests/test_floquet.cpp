#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "isostab/analysis.hpp"
#include "isostab/floquet.hpp"
#include "isostab/spectral.hpp"

using namespace isostab;
using std::numbers::pi;
using cd = std::complex<double>;

namespace {

const std::vector<double> kEps{0.0125, 0.025, 0.05, 0.1};

std::vector<cd> as_vector(const std::array<cd, 4>& a) { return {a.begin(), a.end()}; }

}  // namespace

TEST_CASE("periods") {
  CHECK(period_length(Period::TwoPi) == doctest::Approx(2 * pi));
  CHECK(period_length(Period::FourPi) == doctest::Approx(4 * pi));
  CHECK(floquet_period(3) == Period::FourPi);
  CHECK(floquet_period(4) == Period::TwoPi);
  CHECK(floquet_period(5) == Period::FourPi);
}

TEST_CASE("monodromy at eps = 0") {
  const MonodromyReport r = integrate_fundamental({3.0, 0.0, 1.0}, Period::TwoPi, 1e-12);
  CHECK((r.M - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(r.verdict != Verdict::Unstable);
  CHECK(r.symplecticDefect <= 1e-11);

  const MonodromyReport r1 = integrate_fundamental({1.0, 0.0, 1.0}, Period::TwoPi, 1e-12);
  const double phase = 2 * pi * std::sqrt(2.4);
  const std::vector<cd> expect{1.0, 1.0, std::polar(1.0, phase), std::polar(1.0, -phase)};
  CHECK(max_pairing_error(as_vector(r1.multipliers), expect) <= 1e-9);
  CHECK(r1.symplecticDefect <= 1e-11);

  for (double mu : {0.2, 20.0 / 23.0, 3.0, 7.5, 12.0, 19.0}) {
    const MonodromyReport r2 = integrate_fundamental({mu, 0.0, 1.0}, Period::FourPi, 1e-12);
    CHECK(r2.verdict != Verdict::Unstable);
    CHECK(r2.maxModulus <= 1 + 1e-9);
  }
}

TEST_CASE("symplectic structure at eps > 0") {
  for (double mu : {0.5, 0.869, 3.0, 11.9})
    for (double eps : {0.05, 0.3}) {
      const MonodromyReport r = integrate_fundamental({mu, eps, 1.0}, Period::FourPi, 1e-12);
      CHECK(r.symplecticDefect <= 1e-10);
      std::vector<cd> inv;
      for (const cd& l : r.multipliers) inv.push_back(1.0 / l);
      CHECK(max_pairing_error(as_vector(r.multipliers), inv) <= 1e-8);
      CHECK(r.blockCoupling <= 1e-9);
    }
}

TEST_CASE("tolerance refinement converges") {
  const ModelParams p{2.0, 0.2, 1.0};
  const Eigen::Matrix4d ref = integrate_fundamental(p, Period::TwoPi, 1e-14).M;
  double last = 1.0;
  for (double tol : {1e-6, 1e-8, 1e-10}) {
    const double dev = (integrate_fundamental(p, Period::TwoPi, tol).M - ref).cwiseAbs().maxCoeff();
    CHECK(dev < last);
    last = dev;
  }
  CHECK_THROWS_AS(integrate_fundamental(p, Period::TwoPi, 1e-3), std::invalid_argument);
}

TEST_CASE("branches collapse to the resonance at eps = 0") {
  for (int n2 : {3, 4, 5}) {
    const auto s = trace_boundary(n2, {0.0}, default_mu_window(n2), 1e-12);
    REQUIRE(s.size() == 1);
    REQUIRE(s[0].ok);
    const double mu = to_double(resonance_mu(n2));
    CHECK(std::abs(s[0].lower - mu) <= std::max(s[0].bracketWidth, 1e-10));
    CHECK(std::abs(s[0].upper - mu) <= std::max(s[0].bracketWidth, 1e-10));
  }
}

TEST_CASE("tongue geometry near the N2 = 3 resonance") {
  const auto s = trace_boundary(3, {0.1}, default_mu_window(3), 1e-13, 0.0);
  REQUIRE(s[0].ok);
  CHECK(s[0].upper - s[0].lower > 1e-5);
  CHECK(s[0].maxModulusInside > 1 + 1e-6);
  const double mid = 0.5 * (s[0].lower + s[0].upper);
  CHECK(integrate_fundamental({mid, 0.1, 1.0}, Period::FourPi, 1e-12).verdict == Verdict::Unstable);
  for (double outside : {s[0].lower - 1e-3, s[0].upper + 1e-3}) {
    const MonodromyReport r = integrate_fundamental({outside, 0.1, 1.0}, Period::FourPi, 1e-12);
    CHECK(r.verdict != Verdict::Unstable);
    CHECK(r.maxModulus <= 1 + 1e-9);
  }
}

TEST_CASE("no crossing is reported, not invented") {
  const auto s = trace_boundary(4, {0.05}, {3.5, 4.0}, 1e-10);
  REQUIRE(s.size() == 1);
  CHECK_FALSE(s[0].ok);
  CHECK_FALSE(s[0].error.empty());
}

TEST_CASE("tongue CSV") {
  const auto s = trace_boundary(4, {0.0, 0.05}, default_mu_window(4), 1e-12);
  const std::string csv = tongue_csv(s);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "eps,mu_branch_lower,mu_branch_upper,bracket_width,max_modulus_inside");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 2);
  CHECK(csv == tongue_csv(trace_boundary(4, {0.0, 0.05}, default_mu_window(4), 1e-12)));
}

TEST_CASE("agreement between oracle and series") {
  for (int n2 : {3, 4, 5}) {
    INFO("N2 = ", n2);
    const auto sections = trace_boundary(n2, kEps, default_mu_window(n2), 1e-13, 0.0);
    const auto r = analyze_resonance(n2, 5, Convention::Canonical);
    for (const auto& curve : r.boundary().curves) {
      const AgreementReport a = order_of_agreement(curve, sections);
      CHECK(a.firstOmittedOrder == 6);
      CHECK(a.passes);
      CHECK(a.slope >= 5.5);
    }
    if (n2 == 3) {
      // Through eps^2 the first omitted term is the eps^3 splitting.
      const AgreementReport a = order_of_agreement(r.boundary().curves[0], sections, 2);
      CHECK(a.firstOmittedOrder == 3);
      CHECK(a.slope == doctest::Approx(3.0).epsilon(0.1));
    }
    if (n2 == 4) CHECK(std::abs(sections[2].lower - r.boundary().curves[0].evaluate(0.05)) <= 1e-6);
  }
  CHECK_THROWS(order_of_agreement(analyze_resonance(4, 2, Convention::Canonical).boundary().curves[0],
                                  trace_boundary(4, {0.05, 0.1}, default_mu_window(4), 1e-12)));
}
