// One PASS/FAIL line per acceptance criterion; INFO lines carry measurements
// that inform but do not decide a criterion. Exit status 1 on any FAIL.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "isostab/analysis.hpp"
#include "isostab/floquet.hpp"
#include "isostab/golden.hpp"
#include "isostab/integrator.hpp"
#include "isostab/spectral.hpp"

using namespace isostab;
using std::numbers::pi;

namespace {

int failures = 0;

void report(int id, bool ok, double seconds, double budget, const std::string& what) {
  const bool inTime = seconds <= budget;
  if (!ok || !inTime) ++failures;
  std::printf("%s criterion %d: %s [%.2f s, budget %.0f s]\n", ok && inTime ? "PASS" : "FAIL", id, what.c_str(),
              seconds, budget);
}

void info(const std::string& what) { std::printf("INFO %s\n", what.c_str()); }

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Published analyses deep enough for every listed value.
int published_order(int n2) { return n2 == 5 ? 6 : 4; }

std::map<int, ResonanceAnalysis> published;

const ResonanceAnalysis& published_analysis(int n2) {
  auto it = published.find(n2);
  if (it == published.end())
    it = published.emplace(n2, analyze_resonance(n2, published_order(n2), Convention::Published)).first;
  return it->second;
}

// Checks every golden of the given kinds; details of mismatches go to INFO.
bool goldens_pass(std::initializer_list<GoldenKind> kinds, int& count) {
  bool ok = true;
  count = 0;
  for (const Golden& g : published_goldens()) {
    if (std::find(kinds.begin(), kinds.end(), g.kind) == kinds.end()) continue;
    const GoldenResult r = check_golden(published_analysis(g.n2), g);
    ++count;
    if (r.status != GoldenStatus::Pass) {
      ok = false;
      info(std::string(to_string(r.status)) + ": " + g.label + " " + g.target + " index " + std::to_string(g.index) +
           " expected " + g.expected + ", got " + r.got);
    }
  }
  return ok;
}

void criterion1() {
  bool ok = false;
  const double s = timed([&] {
    const auto hits = kgl_resonance_scan({0, 20});
    ok = hits.size() == 3 && hits[0].n2 == 3 && hits[0].muStar == ratio(20, 23) && hits[1].n2 == 4 &&
         hits[1].muStar == 3 && hits[2].n2 == 5 && hits[2].muStar == 12;
  });
  report(1, ok, s, 1, "resonance scan over (0, 20] = {(3, 20/23), (4, 3), (5, 12)} exactly");
}

void criterion2() {
  double worst = 0.0;
  const double s = timed([&] {
    std::mt19937 rng(20);
    std::uniform_real_distribution<double> theta(0.0, 2 * pi), mu(1e-3, 20.0);
    for (int i = 0; i < 100; ++i) {
      const double m = mu(rng);
      const auto spec = spectrum_with_zero_block(linearization_full(theta(rng), 0.0, {m, 0.0, 1.0}).A);
      worst = std::max(worst, max_pairing_error(spec.eigenvalues, characteristic_roots(m)));
    }
  });
  report(2, worst <= 1e-10, s, 5,
         "100 random (theta, mu), eps = 0: eigenvalues vs characteristic roots, max error " + fmt("%.2e", worst) +
             " <= 1e-10");
}

void criterion3() {
  bool ok = false, canonicalConsistent = true;
  int count = 0;
  std::string mismatchOrders;
  const double s = timed([&] {
    for (int n2 : {3, 4, 5}) published_analysis(n2);
    ok = goldens_pass({GoldenKind::KCoefficient, GoldenKind::KConstant, GoldenKind::KPlain}, count);
    for (int n2 : {3, 4, 5}) {
      const ForwardCheck canonical = analyze_resonance(n2, 6, Convention::Canonical).forward;
      canonicalConsistent = canonicalConsistent && canonical.consistent;
      const ForwardCheck pub = published_analysis(n2).forward;
      mismatchOrders += " N2=" + std::to_string(n2) + ":" +
                        (pub.consistent ? std::string("consistent") : "eps^" + std::to_string(pub.firstMismatchOrder));
    }
  });
  info("forward-transform check of the published normal forms, first inconsistent order:" + mismatchOrders);
  info("the canonical normal forms (default pipeline) agree with the published K_1 and differ from eps^2 on;"
       " the adjudication is recorded in the README");
  report(3, ok && canonicalConsistent, s, 60,
         std::to_string(count) +
             " published K coefficients reproduced exactly; forward-transform check passes for the canonical"
             " normal form through eps^6 for N2 = 3, 4, 5");
}

void criterion4() {
  bool ok = false;
  int count = 0;
  const double s = timed([&] { ok = goldens_pass({GoldenKind::CharMu1Zero, GoldenKind::CharFree}, count); });
  report(4, ok, s, 60, std::to_string(count) + " characteristic-coefficient values (a, b, d) reproduced exactly");
}

void criterion5() {
  bool ok = false;
  int count = 0;
  const double s = timed([&] {
    ok = goldens_pass({GoldenKind::CurveValues}, count);
    for (int n2 : {3, 4, 5})
      for (const auto& c : published_analysis(n2).bCurves.curves) ok = ok && c.mu.size() > 1 && c.mu[1] && *c.mu[1] == 0;
  });
  report(5, ok, s, 60, std::to_string(count) + " b = 0 curve coefficients reproduced exactly, mu1 = 0 on every branch");
}

void criterion6() {
  bool ok = false;
  int count = 0;
  const double s = timed([&] { ok = goldens_pass({GoldenKind::Thresholds, GoldenKind::Conclusion}, count); });
  report(6, ok, s, 5,
         std::to_string(count) + " threshold/conclusion values: a > 0 violated on every b = 0 branch, d = 0 with a > 0"
                                 " has no real solution");
}

void criterion7() {
  const std::vector<double> eps{0.0125, 0.025, 0.05, 0.1};
  bool ok = true;
  std::string slopes;
  double deviation = INFINITY;
  const double s = timed([&] {
    for (int n2 : {3, 4, 5}) {
      const auto sections = trace_boundary(n2, eps, default_mu_window(n2), 1e-13, 0.0);
      for (const auto& sec : sections) ok = ok && sec.ok;
      const auto canonical = analyze_resonance(n2, 5, Convention::Canonical);
      for (const auto& curve : canonical.boundary().curves) {
        const AgreementReport a = order_of_agreement(curve, sections);
        ok = ok && a.passes;
        slopes += " N2=" + std::to_string(n2) + ":" + fmt("%.2f", a.slope);
        if (n2 == 4) deviation = std::abs(sections[2].lower - curve.evaluate(0.05));
      }
      // Deeper and shallower truncations, for the record.
      const auto four = analyze_resonance(n2, 4, Convention::Canonical);
      std::string line = "order-4 canonical curves, N2=" + std::to_string(n2) + ": slopes";
      bool below = false;
      for (const auto& curve : four.boundary().curves) {
        const AgreementReport a = order_of_agreement(curve, sections);
        below = below || !a.passes;
        line += " " + fmt("%.2f", a.slope) + (a.passes ? "" : " (below " + fmt("%.1f", a.firstOmittedOrder - 0.5) + ")");
      }
      if (below) line += " -- pre-asymptotic: the omitted eps^5 and eps^6 terms are comparable on this grid";
      info(line);
      const auto& pub = published_analysis(n2);
      line = "published b = 0 curves vs oracle, N2=" + std::to_string(n2) + ": residual at eps=0.05";
      for (const auto& curve : pub.bCurves.curves) {
        const double mu = curve.evaluate(0.05);
        line += " " + fmt("%.2e", std::min(std::abs(mu - sections[2].lower), std::abs(mu - sections[2].upper)));
      }
      info(line);
    }
  });
  ok = ok && deviation <= 1e-3;
  report(7, ok, s, 600,
         "Floquet edges vs canonical d2 = 0 curves through eps^5, eps in {0.0125, 0.025, 0.05, 0.1}: slopes" + slopes +
             " >= 5.5; N2=4 deviation at eps=0.05 " + fmt("%.2e", deviation) + " <= 1e-3");
}

// Largest drift of f along 100 periods of the field from z.
template <std::size_t N, class Field, class F>
double drift_along(std::array<double, N> z, const Field& field, const F& f) {
  const double f0 = f(z);
  double dt = 0.01, worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    integrate_controlled(field, z, 2 * pi * k, 2 * pi * (k + 1), 1e-12, dt);
    worst = std::max(worst, std::abs(f(z) - f0));
  }
  return worst;
}

void criterion8() {
  double det = 0.0, identity = 0.0, q = 0.0, h = 0.0, fd = 0.0;
  const double s = timed([&] {
    for (int n2 : {3, 4, 5}) {
      const MuWindow w = default_mu_window(n2);
      for (double e : {0.0, 0.05, 0.1, 0.3, 0.6})
        for (int i = 0; i <= 8; ++i) {
          const double mu = w.lo + (w.hi - w.lo) * i / 8;
          det = std::max(det, integrate_fundamental({mu, e, 1.0}, floquet_period(n2), 1e-12).symplecticDefect);
        }
    }
    identity = (integrate_fundamental({3.0, 0.0, 1.0}, Period::TwoPi, 1e-12).M - Eigen::Matrix4d::Identity())
                   .cwiseAbs()
                   .maxCoeff();

    std::mt19937 rng(8);
    std::uniform_real_distribution<double> u(-0.05, 0.05), th(0.0, 2 * pi);
    const ModelParams full{3.0, 0.2, 1.0};
    const auto fullField = [&](const std::array<double, 6>& z, std::array<double, 6>& dz, double nu) {
      const Vec6 f = full_rhs({Vec3(z[0], z[1], z[2]), Vec3(z[3], z[4], z[5]), nu}, full);
      for (int i = 0; i < 6; ++i) dz[i] = f[i];
    };
    const auto qOf = [](const std::array<double, 6>& z) {
      return first_integral_Q({Vec3(z[0], z[1], z[2]), Vec3(z[3], z[4], z[5]), 0.0});
    };
    for (int trial = 0; trial < 5; ++trial) {
      const FullPhasePoint e = equilibrium_circle(th(rng));
      const std::array<double, 6> z{e.x[0] + u(rng), e.x[1] + u(rng), u(rng), e.y[0] + u(rng), e.y[1] + u(rng), u(rng)};
      q = std::max(q, drift_along(z, fullField, qOf));
    }
    for (double mu : {20.0 / 23.0, 3.0, 12.0}) {
      const ModelParams red{mu, 0.0, 1.0};
      const auto redField = [&](const std::array<double, 4>& z, std::array<double, 4>& dz, double nu) {
        const Eigen::Vector4d f = reduced_rhs({z[0], z[1], z[2], z[3], nu}, red);
        for (int i = 0; i < 4; ++i) dz[i] = f[i];
      };
      const auto hOf = [&](const std::array<double, 4>& z) {
        return reduced_hamiltonian({z[0], z[1], z[2], z[3], 0.0}, red);
      };
      h = std::max(h, drift_along(std::array<double, 4>{1 + u(rng), u(rng), u(rng), u(rng)}, redField, hOf));
    }

    const auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
    std::uniform_real_distribution<double> x(-0.7, 0.7), m(0.05, 20.0), ecc(0.0, 0.9);
    for (int trial = 0; trial < 100; ++trial) {
      const Vec3 p(x(rng), x(rng), x(rng));
      const double mu = m(rng);
      const Vec3 g = grad_W(p, mu);
      for (int i = 0; i < 3; ++i) {
        Vec3 a = p, b = p;
        a[i] += 1e-5;
        b[i] -= 1e-5;
        fd = std::max(fd, rel(g[i], (potential_W(a, mu) - potential_W(b, mu)) / 2e-5));
      }
      const ModelParams prm{mu, ecc(rng), 1.0};
      const ReducedPhasePoint r{1 + x(rng) / 2, x(rng), x(rng), x(rng), th(rng)};
      const Eigen::Vector4d rg = reduced_gradient(r, prm);
      for (int i = 0; i < 4; ++i) {
        ReducedPhasePoint a = r, b = r;
        double* pa[4] = {&a.u1, &a.u3, &a.v1, &a.v3};
        double* pb[4] = {&b.u1, &b.u3, &b.v1, &b.v3};
        *pa[i] += 1e-5;
        *pb[i] -= 1e-5;
        fd = std::max(fd, rel(rg[i], (reduced_hamiltonian(a, prm) - reduced_hamiltonian(b, prm)) / 2e-5));
      }
      const Eigen::Matrix4d hess = quadratic_part_H0(r.nu, prm);
      ReducedPhasePoint star;
      star.nu = r.nu;
      for (int i = 0; i < 4; ++i) {
        ReducedPhasePoint a = star, b = star;
        double* pa[4] = {&a.u1, &a.u3, &a.v1, &a.v3};
        double* pb[4] = {&b.u1, &b.u3, &b.v1, &b.v3};
        *pa[i] += 1e-5;
        *pb[i] -= 1e-5;
        const Eigen::Vector4d col = (reduced_gradient(a, prm) - reduced_gradient(b, prm)) / 2e-5;
        for (int j = 0; j < 4; ++j) fd = std::max(fd, rel(hess(j, i), col[j]));
      }
    }
  });
  const bool ok = det <= 1e-10 && identity <= 1e-10 && q <= 1e-9 && h <= 1e-9 && fd <= 1e-6;
  report(8, ok, s, 120,
         "|det M - 1| " + fmt("%.1e", det) + " <= 1e-10; |M(2pi) - I| " + fmt("%.1e", identity) +
             " <= 1e-10; Q drift " + fmt("%.1e", q) + " <= 1e-9; reduced H drift " + fmt("%.1e", h) +
             " <= 1e-9; finite differences " + fmt("%.1e", fd) + " <= 1e-6");
}

void criterion9() {
  double worst = 0.0;
  long samples = 0;
  const double s = timed([&] {
    for (int a = 0; a < 20; ++a)
      for (int b = 0; b < 20; ++b) {
        FullPhasePoint e = equilibrium_circle(2 * pi * a / 20, 2 * pi * b / 20);
        for (int i = 1; i <= 20; ++i)
          for (double eps : {0.0, 0.2, 0.4, 0.6, 0.9}) {
            worst = std::max(worst, full_rhs(e, {i * 1.0, eps, 1.0}).norm());
            ++samples;
          }
      }
  });
  report(9, worst <= 1e-13, s, 10,
         std::to_string(samples) + " samples of (theta, nu) x mu x eps on the equilibrium circle: max |rhs| " +
             fmt("%.1e", worst) + " <= 1e-13");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
