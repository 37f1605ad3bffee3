#include <doctest.h>

#include <algorithm>
#include <set>

#include "isostab/golden.hpp"

using namespace isostab;

namespace {

const ResonanceAnalysis& cached(int n2, int order, Convention conv) {
  static std::map<std::tuple<int, int, Convention>, ResonanceAnalysis> cache;
  auto key = std::make_tuple(n2, order, conv);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, analyze_resonance(n2, order, conv)).first;
  return it->second;
}

Substitution substitution_of(const BoundaryCurve& c) {
  Substitution s;
  for (std::size_t i = 1; i < c.mu.size(); ++i)
    if (c.mu[i]) s[static_cast<int>(i)] = *c.mu[i];
  return s;
}

// Distinct values of mu_i across the curves, as sorted strings.
std::set<std::string> values_at(const BoundarySolution& s, int i) {
  std::set<std::string> out;
  for (const auto& c : s.curves)
    if (static_cast<int>(c.mu.size()) > i && c.mu[i]) out.insert(to_string(*c.mu[i]));
  return out;
}

}  // namespace

TEST_CASE("autonomous input is its own normal form") {
  HamiltonianSeries h(3);
  h[1] = TrigQuadForm::monomial(kX1, kX1, TrigCoeff(ratio(1, 2))) + TrigQuadForm::monomial(kY1, kY1, TrigCoeff(ratio(1, 2)));
  h[2] = TrigQuadForm::monomial(kX2, kY2, TrigCoeff(3L));
  const NormalFormResult nf = deprit_hori_normalize(h, 3, Period::TwoPi);
  const HamiltonianSeries k = nf.K.to_plain();
  for (int j = 0; j <= 3; ++j) CHECK(k[j] == h[j]);
  for (int j = 0; j <= 3; ++j) CHECK(nf.W[j].is_zero());
  CHECK(forward_transform_check(nf).consistent);

  HamiltonianSeries bad(1);
  bad[0] = TrigQuadForm::monomial(kX1, kX1, TrigCoeff(1L));
  CHECK_THROWS(deprit_hori_normalize(bad, 1, Period::TwoPi));
}

TEST_CASE("every normal form coefficient is autonomous") {
  for (int n2 : {3, 4, 5}) {
    const auto& r = cached(n2, 5, Convention::Canonical);
    CHECK(r.nf.period == (n2 % 2 ? Period::FourPi : Period::TwoPi));
    for (int j = 0; j <= 5; ++j) CHECK(r.nf.K[j].is_autonomous());
  }
}

TEST_CASE("published goldens reproduce under the published convention") {
  int passed = 0;
  for (const Golden& g : published_goldens()) {
    const int order = g.n2 == 5 ? 6 : 4;
    const GoldenResult res = check_golden(cached(g.n2, order, Convention::Published), g);
    INFO(g.label, " got ", res.got, " ", res.detail);
    CHECK(res.status == GoldenStatus::Pass);
    passed += res.status == GoldenStatus::Pass;
  }
  CHECK(passed == static_cast<int>(published_goldens().size()));
}

TEST_CASE("shallow analyses skip rather than fail") {
  for (const Golden& g : published_goldens()) {
    const GoldenResult res = check_golden(cached(g.n2, 2, Convention::Published), g);
    INFO(g.label, " got ", res.got);
    CHECK(res.status != GoldenStatus::Fail);
  }
}

TEST_CASE("forward transformation check separates the conventions") {
  for (int n2 : {3, 4, 5}) {
    INFO("N2 = ", n2);
    const auto& canonical = cached(n2, 6, Convention::Canonical);
    CHECK(canonical.forward.consistent);
    const auto& published = cached(n2, 4, Convention::Published);
    CHECK_FALSE(published.forward.consistent);
    CHECK(published.forward.firstMismatchOrder == 2);
  }
}

TEST_CASE("discriminant identity d = a^2 - 4b") {
  for (Convention conv : {Convention::Canonical, Convention::Published})
    for (int n2 : {3, 4, 5}) {
      const CharCoeffs& c = cached(n2, 4, conv).coeffs;
      const ScalarSeries rhs = c.a * c.a - scale(c.b, Rational(4));
      const int p = std::min(c.d.precision(), rhs.precision());
      CHECK(p >= 2);
      for (int k = 0; k <= p; ++k) CHECK(c.d[k] == rhs[k]);
    }
}

TEST_CASE("boundary curves annihilate their condition") {
  for (Convention conv : {Convention::Canonical, Convention::Published})
    for (int n2 : {3, 4, 5}) {
      const auto& r = cached(n2, 5, conv);
      REQUIRE_FALSE(r.boundary().curves.empty());
      for (const auto& curve : r.boundary().curves) {
        INFO(to_string(conv), " N2 = ", n2, " ", curve.to_string());
        const CharCoeffs c = characteristic_coeffs(r.nf, substitution_of(curve));
        const ScalarSeries& cond = r.boundary_condition() == Condition::Block ? c.d2 : c.b;
        CHECK(curve.resolvedPrecision <= cond.precision());
        for (int k = 0; k <= curve.resolvedPrecision; ++k) CHECK(cond[k].is_zero());
      }
    }
}

TEST_CASE("canonical convention: parabolic first block and d2 = 0 curves") {
  SUBCASE("N2 = 4, a double root") {
    const auto& r = cached(4, 6, Convention::Canonical);
    CHECK(r.bIdenticallyZero);
    CHECK(r.coeffs.blockDiagonal);
    REQUIRE(r.blockCurves.curves.size() == 1);
    const auto& mu = r.blockCurves.curves[0].mu;
    const std::vector<Rational> expect{3, 0, ratio(-21, 10), 0, ratio(21, 250), 0, ratio(-1779, 12500)};
    REQUIRE(mu.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(mu[i] == expect[i]);
  }
  SUBCASE("N2 = 3") {
    const auto& r = cached(3, 6, Convention::Canonical);
    CHECK(r.bIdenticallyZero);
    CHECK(r.blockCurves.curves.size() == 2);
    CHECK(values_at(r.blockCurves, 2) == std::set<std::string>{"-945/2116"});
    CHECK(values_at(r.blockCurves, 3) == std::set<std::string>{"-315/16928", "315/16928"});
    CHECK(values_at(r.blockCurves, 4) == std::set<std::string>{"-3544695/49836032"});
    CHECK(values_at(r.blockCurves, 5) == std::set<std::string>{"-2486295/398688256", "2486295/398688256"});
    CHECK(values_at(r.blockCurves, 6) == std::set<std::string>{"-23332415715/586869112832"});
  }
  SUBCASE("N2 = 5") {
    const auto& r = cached(5, 6, Convention::Canonical);
    CHECK(r.bIdenticallyZero);
    CHECK(values_at(r.blockCurves, 0) == std::set<std::string>{"12"});
    CHECK(values_at(r.blockCurves, 2) == std::set<std::string>{"-75/4"});
    CHECK(values_at(r.blockCurves, 4) == std::set<std::string>{"69825/4096"});
    CHECK(values_at(r.blockCurves, 5) == std::set<std::string>{"-75/32768", "75/32768"});
    CHECK(values_at(r.blockCurves, 6) == std::set<std::string>{"-35142225/2097152"});
  }
}

TEST_CASE("published convention: b = 0 curves and their verdicts") {
  const auto& r = cached(4, 4, Convention::Published);
  CHECK_FALSE(r.bIdenticallyZero);
  CHECK(values_at(r.bCurves, 2) == std::set<std::string>{"-63/20"});
  CHECK(r.dCheck.infeasible);
  REQUIRE(r.transitions.size() == r.bCurves.curves.size());
  for (const auto& t : r.transitions) CHECK(t.decided);
}

TEST_CASE("block condition needs a block-diagonal normal form") {
  const auto& r = cached(4, 2, Convention::Canonical);
  CHECK_NOTHROW(solve_boundary(r.nf, Condition::Block));
  CHECK(to_string(Condition::Block) == std::string("d2=0"));
}

TEST_CASE("rational root finder") {
  // (x - 1/2)(x + 3)(x^2 + 1)
  auto r = real_rational_roots({ratio(-3, 2), ratio(5, 2), ratio(-1, 2), ratio(5, 2), Rational(1)});
  CHECK(r.roots == std::vector<Rational>{-3, ratio(1, 2)});
  CHECK_FALSE(r.irrational);
  r = real_rational_roots({-2, 0, 1});
  CHECK(r.roots.empty());
  CHECK(r.irrational);
  r = real_rational_roots({1, -2, 1});  // double root listed once
  CHECK(r.roots == std::vector<Rational>{1});
  r = real_rational_roots({4, -2, -2, 1});  // (x - 2)(x^2 - 2)
  CHECK(r.roots == std::vector<Rational>{2});
  CHECK(r.irrational);
  r = real_rational_roots({0, 0, 6, -5, 1});  // x^2 (x - 2)(x - 3)
  CHECK(r.roots == std::vector<Rational>{0, 2, 3});
  r = real_rational_roots({1, 0, 1});
  CHECK(r.roots.empty());
  CHECK_FALSE(r.irrational);
}
