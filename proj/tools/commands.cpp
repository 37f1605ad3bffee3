#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "isostab/analysis.hpp"
#include "isostab/floquet.hpp"
#include "isostab/golden.hpp"
#include "isostab/integrator.hpp"
#include "isostab/model.hpp"
#include "isostab/serialize.hpp"
#include "isostab/spectral.hpp"

namespace isostab::cli {

namespace {

std::string fmt17(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string fmt_complex(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

// Exact text for sqrt(q) when it is rational, 17 digits otherwise.
std::string sqrt_text(const Rational& q) {
  if (const auto r = exact_sqrt(q)) return to_string(*r);
  return fmt17(std::sqrt(to_double(q)));
}

Convention parse_convention(const std::string& s) {
  if (s == "canonical") return Convention::Canonical;
  if (s == "published") return Convention::Published;
  throw DomainError("convention must be 'canonical' or 'published'");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

}  // namespace

// ---------------------------------------------------------------------------

int cmd_spectrum(const SpectrumOptions& o, std::ostream& out, std::ostream&) {
  const Rational mu = parse_rational(o.mu);
  if (sgn(mu) <= 0) throw DomainError("spectrum: mu must be positive");
  const Rational w2sq = omega2_sq(mu);
  const Rational kappa = Rational(mu + 4) / 4;
  const Rational s = Rational(2 * mu + 1) / kappa;

  out << "mu = " << to_string(mu) << "\n";
  out << "kappa = " << to_string(kappa) << "\n";
  out << "characteristic polynomial: -lambda^2 (lambda^2 + 1) (lambda^2 + " << to_string(s) << ")\n";
  out << "frequencies: omega1 = 1, omega2 = " << sqrt_text(w2sq) << "\n";
  out << "roots: 0, 0, +-1i, +-" << sqrt_text(w2sq) << "i\n";

  ModelParams p;
  p.mu = to_double(mu);
  const LinearizationMatrix lin = linearization_full(o.theta, 0.0, p);
  const ZeroAwareSpectrum zs = spectrum_with_zero_block(lin.A);
  auto ev = zs.eigenvalues;
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) {
    return std::abs(a.imag()) != std::abs(b.imag()) ? std::abs(a.imag()) < std::abs(b.imag()) : a.imag() < b.imag();
  });
  out << "numeric eigenvalues of the linearization (theta = " << fmt17(o.theta) << ", eps = 0):\n";
  for (const auto& z : ev) out << "  " << fmt_complex(z) << "\n";
  out << "zero eigenvalue: algebraic multiplicity " << zs.zeroAlgebraic << ", geometric multiplicity "
      << zs.zeroGeometric << " (rank A = " << numerical_rank(lin.A, 1e-10) << ")\n";
  out << "max distance to the polynomial roots: "
      << fmt17(max_pairing_error(ev, characteristic_roots(p.mu))) << "\n";
  return kOk;
}

int cmd_resonances(const ResonanceOptions& o, std::ostream& out, std::ostream&) {
  MuInterval range;
  range.lo = parse_rational(o.minMu);
  range.loClosed = false;
  range.hiInfinite = o.maxMu.empty();
  if (!range.hiInfinite) {
    range.hi = parse_rational(o.maxMu);
    range.hiClosed = true;
    if (range.hi <= range.lo) throw DomainError("resonances: empty mu range");
  }
  if (sgn(range.lo) < 0) throw DomainError("resonances: range must lie in mu > 0");
  out << "N2,mu_star\n";
  for (const auto& h : kgl_resonance_scan(range)) out << h.n2 << ',' << to_string(h.muStar) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

namespace {

Json analysis_json(const ResonanceAnalysis& r) {
  Json curves = Json::array();
  for (std::size_t i = 0; i < r.boundary().curves.size(); ++i) {
    Json c = to_json(r.boundary().curves[i]);
    c["transition"] = r.transitions[i].summary;
    curves.push_back(c);
  }
  Json bcurves = Json::array();
  for (const auto& c : r.bCurves.curves) bcurves.push_back(to_json(c));
  Json dead = Json::array();
  for (const auto& d : r.boundary().dead) dead.push_back(Json{{"order", d.order}, {"reason", d.reason}});
  return Json{{"n2", r.n2},
              {"order", r.order},
              {"convention", to_string(r.convention)},
              {"mu0", to_json(r.nf.mu0)},
              {"period", r.nf.period == Period::TwoPi ? "2pi" : "4pi"},
              {"K", to_json(r.nf.K)},
              {"W", to_json(r.nf.W)},
              {"a", to_json(r.coeffs.a)},
              {"b", to_json(r.coeffs.b)},
              {"d", to_json(r.coeffs.d)},
              {"a_mu1_zero", to_json(r.coeffsMu1.a)},
              {"b_mu1_zero", to_json(r.coeffsMu1.b)},
              {"d_mu1_zero", to_json(r.coeffsMu1.d)},
              {"b_identically_zero", r.bIdenticallyZero},
              {"boundary_condition", to_string(r.boundary_condition())},
              {"boundary_curves", curves},
              {"b_zero_curves", bcurves},
              {"dead_branches", dead},
              {"d_zero_with_a_positive", Json{{"infeasible", r.dCheck.infeasible}, {"reason", r.dCheck.reason}}},
              {"forward_check", Json{{"consistent", r.forward.consistent},
                                     {"first_mismatch_order", r.forward.firstMismatchOrder},
                                     {"detail", r.forward.detail}}}};
}

void print_series(std::ostream& out, const std::string& name, const ScalarSeries& s) {
  out << name << " (known through eps^" << s.precision() << "):\n";
  bool any = false;
  for (int k = 0; k <= s.precision(); ++k)
    if (!s[k].is_zero()) {
      out << "  eps^" << k << ": " << s[k].to_string() << "\n";
      any = true;
    }
  if (!any) out << "  0\n";
}

}  // namespace

int cmd_normalform(const NormalFormOptions& o, std::ostream& out, std::ostream& err) {
  if (o.n2 < 3 || o.n2 > 5) throw DomainError("normalform: --n2 must be 3, 4 or 5");
  if (o.order < 1 || o.order > kMaxUnknowns)
    throw DomainError("normalform: --order must lie in [1, " + std::to_string(kMaxUnknowns) + "]");
  const std::string conv = o.convention.empty() ? (o.checkPaper ? "published" : "canonical") : o.convention;
  const ResonanceAnalysis r = analyze_resonance(o.n2, o.order, parse_convention(conv));

  if (o.jsonOut == "-") {
    out << canonical_dump(analysis_json(r));
  } else {
    if (!o.jsonOut.empty()) write_file(o.jsonOut, canonical_dump(analysis_json(r)));
    out << "resonance N2 = " << r.n2 << ", mu* = " << to_string(r.nf.mu0) << ", order " << r.order
        << ", convention " << to_string(r.convention) << ", period "
        << (r.nf.period == Period::TwoPi ? "2pi" : "4pi") << "\n";
    out << "K = sum eps^j/j! K_j:\n";
    for (int j = 1; j <= r.nf.K.precision(); ++j) {
      std::string text = r.nf.K[j].to_string();
      std::replace(text.begin(), text.end(), '\n', ';');
      out << "  K" << j << ": " << text << "\n";
    }
    print_series(out, "a", r.coeffs.a);
    print_series(out, "b", r.coeffs.b);
    print_series(out, "d", r.coeffs.d);
    print_series(out, "a at mu1 = 0", r.coeffsMu1.a);
    print_series(out, "b at mu1 = 0", r.coeffsMu1.b);
    out << "forward transform: " << (r.forward.consistent ? "consistent" : "INCONSISTENT") << " ("
        << r.forward.detail << ")\n";
    if (r.bIdenticallyZero)
      out << "b vanishes through eps^" << r.coeffs.b.precision()
          << ": the (X1, Y1) block is parabolic; the tongue is bounded by d2 = 0\n";
    out << "boundary curves (" << to_string(r.boundary_condition()) << "):\n";
    for (std::size_t i = 0; i < r.boundary().curves.size(); ++i) {
      const auto& c = r.boundary().curves[i];
      out << "  " << c.label << ": " << c.to_string() << "\n";
      for (std::size_t k = 1; k < c.mu.size(); ++k)
        if (c.mu[k])
          out << "    mu" << k << " = " << to_string(*c.mu[k]) << " (fixed at eps^" << c.fixedAtOrder[k] << ")\n";
      out << "    " << r.transitions[i].summary << "\n";
    }
    for (const auto& d : r.boundary().dead) out << "  dead branch at eps^" << d.order << ": " << d.reason << "\n";
    out << "d = 0 with a > 0: " << (r.dCheck.infeasible ? "infeasible" : "feasible") << " (" << r.dCheck.reason
        << ")\n";
  }

  if (!o.checkPaper) return kOk;
  bool mismatch = false;
  std::ostream& report = o.jsonOut == "-" ? err : out;
  for (const auto& g : published_goldens()) {
    if (g.n2 != o.n2) continue;
    const GoldenResult res = check_golden(r, g);
    mismatch = mismatch || res.status == GoldenStatus::Fail;
    report << "check-paper " << to_string(res.status) << ": " << g.label << " [" << g.target
           << (g.target.empty() ? "" : " ") << "index " << g.index << "] expected " << g.expected;
    if (!res.got.empty()) report << ", got " << res.got;
    if (!res.detail.empty()) report << " (" << res.detail << ")";
    report << "\n";
  }
  report << "check-paper: " << (mismatch ? "FAIL" : "PASS") << "\n";
  return mismatch ? kGoldenMismatch : kOk;
}

// ---------------------------------------------------------------------------

namespace {

std::string svg_chart(const ChartOptions& o, const std::vector<TongueSection>& secs, const BoundarySolution& sol) {
  const double epsMax = std::max(*std::max_element(o.eps.begin(), o.eps.end()), 1e-3);
  const int samples = 60;
  std::vector<double> lower(samples + 1), upper(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    const double e = epsMax * i / samples;
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& c : sol.curves) {
      const double v = c.evaluate(e);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    lower[i] = lo;
    upper[i] = hi;
  }
  double muLo = *std::min_element(lower.begin(), lower.end()), muHi = *std::max_element(upper.begin(), upper.end());
  for (const auto& s : secs)
    if (s.ok) {
      muLo = std::min(muLo, s.lower);
      muHi = std::max(muHi, s.upper);
    }
  const double pad = std::max(1e-9, 0.05 * (muHi - muLo));
  muLo -= pad;
  muHi += pad;
  const double W = 640, H = 480, m = 60;
  const auto X = [&](double e) { return m + (W - 2 * m) * e / epsMax; };
  const auto Y = [&](double mu) { return H - m - (H - 2 * m) * (mu - muLo) / (muHi - muLo); };

  std::ostringstream os;
  os << std::setprecision(10);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << ' ' << H << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <line x1=\"" << m << "\" y1=\"" << H - m << "\" x2=\"" << W - m << "\" y2=\"" << H - m
     << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << m << "\" y1=\"" << m << "\" x2=\"" << m << "\" y2=\"" << H - m << "\" stroke=\"black\"/>\n";
  os << "  <text x=\"" << W / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">eps (0 to " << epsMax
     << ")</text>\n";
  os << "  <text x=\"15\" y=\"" << H / 2 << "\" transform=\"rotate(-90 15 " << H / 2 << ")\" text-anchor=\"middle\">mu ("
     << muLo << " to " << muHi << ")</text>\n";
  os << "  <text x=\"" << W / 2 << "\" y=\"30\" text-anchor=\"middle\">N2 = " << o.n2
     << ": series edges (lines), oracle edges (markers)</text>\n";
  const auto polyline = [&](const std::vector<double>& v, const char* cls, const char* color) {
    os << "  <polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (int i = 0; i <= samples; ++i) os << (i ? " " : "") << X(epsMax * i / samples) << ',' << Y(v[i]);
    os << "\"/>\n";
  };
  polyline(lower, "series-lower", "steelblue");
  polyline(upper, "series-upper", "firebrick");
  for (const auto& s : secs) {
    if (!s.ok) continue;
    os << "  <circle class=\"oracle-lower\" cx=\"" << X(s.eps) << "\" cy=\"" << Y(s.lower)
       << "\" r=\"4\" fill=\"none\" stroke=\"steelblue\"/>\n";
    os << "  <circle class=\"oracle-upper\" cx=\"" << X(s.eps) << "\" cy=\"" << Y(s.upper)
       << "\" r=\"2.5\" fill=\"firebrick\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

int cmd_floquet_chart(const ChartOptions& o, std::ostream& out, std::ostream& err) {
  if (o.n2 < 3 || o.n2 > 5) throw DomainError("floquet-chart: --n2 must be 3, 4 or 5");
  if (o.eps.empty()) throw DomainError("floquet-chart: empty eps grid");
  for (double e : o.eps)
    if (!(e >= 0.0 && e < 1.0)) throw DomainError("floquet-chart: eps values must lie in [0, 1)");
  if (!(o.tol >= 1e-14 && o.tol <= 1e-6)) throw DomainError("floquet-chart: --tol must lie in [1e-14, 1e-6]");
  if (!(o.bracket >= 0.0 && o.bracket <= 1e-10)) throw DomainError("floquet-chart: --bracket must lie in [0, 1e-10]");
  MuWindow w = default_mu_window(o.n2);
  if (o.muMin) w.lo = *o.muMin;
  if (o.muMax) w.hi = *o.muMax;
  const double muStar = to_double(resonance_mu(o.n2));
  if (!(w.lo > 0.0 && w.lo < muStar && muStar < w.hi)) throw DomainError("floquet-chart: window must bracket mu*");

  const auto secs = trace_boundary(o.n2, o.eps, w, o.tol, o.bracket);
  emit(o.csvOut, tongue_csv(secs), out);
  bool failed = false;
  for (const auto& s : secs)
    if (!s.ok) {
      failed = true;
      err << "floquet-chart: no crossing at eps = " << fmt17(s.eps) << ": " << s.error << "\n";
    }
  if (!o.svgOut.empty()) {
    const ResonanceAnalysis r = analyze_resonance(o.n2, o.order, parse_convention(o.convention));
    write_file(o.svgOut, svg_chart(o, secs, r.boundary()));
  }
  return failed ? kTracingFailure : kOk;
}

// ---------------------------------------------------------------------------

namespace {

using FullState = std::array<double, 6>;
using ReducedState = std::array<double, 4>;

struct FullSystem {
  ModelParams p;
  void operator()(const FullState& z, FullState& dz, double nu) const {
    FullPhasePoint s;
    s.x = Vec3(z[0], z[1], z[2]);
    s.y = Vec3(z[3], z[4], z[5]);
    s.nu = nu;
    const Vec6 f = full_rhs(s, p);
    for (int i = 0; i < 6; ++i) dz[i] = f[i];
  }
};

struct ReducedSystem {
  ModelParams p;
  void operator()(const ReducedState& z, ReducedState& dz, double nu) const {
    const Eigen::Vector4d f = reduced_rhs({z[0], z[1], z[2], z[3], nu}, p);
    for (int i = 0; i < 4; ++i) dz[i] = f[i];
  }
};

}  // namespace

int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
  ModelParams p;
  p.mu = o.mu;
  p.eps = o.eps;
  p.gamma = o.gamma;
  p.validate();
  if (!(o.mu > 0.0)) throw DomainError("simulate: mu must be positive");
  if (!(o.periods > 0.0) || o.samplesPerPeriod < 1) throw DomainError("simulate: need positive periods and samples");
  if (!(o.tol >= 1e-14 && o.tol <= 1e-6)) throw DomainError("simulate: --tol must lie in [1e-14, 1e-6]");
  const bool full = o.system == "full";
  if (!full && o.system != "reduced") throw DomainError("simulate: --system must be 'full' or 'reduced'");

  std::ostringstream csv;
  csv << std::setprecision(17);
  const long n = std::lround(o.periods * o.samplesPerPeriod);
  const double h = 2.0 * std::numbers::pi / o.samplesPerPeriod;
  double nu = o.nu0, dt = 0.05;
  int code = kOk;

  const auto run = [&](auto state, auto sys, auto header, auto row) {
    csv << header << "\n";
    row(state, nu);
    for (long i = 1; i <= n; ++i) {
      const double next = o.nu0 + h * static_cast<double>(i);
      try {
        integrate_controlled(sys, state, nu, next, o.tol, dt);
      } catch (const SingularityError& e) {
        err << "simulate: singularity after last good nu = " << fmt17(nu) << ": " << e.what() << "\n";
        code = kSingularity;
        return;
      } catch (const StepCollapseError& e) {
        err << "simulate: " << e.what() << " (last good nu = " << fmt17(nu) << ")\n";
        code = kSingularity;
        return;
      }
      nu = next;
      row(state, nu);
    }
  };

  if (full) {
    FullState z{};
    if (!o.state.empty()) {
      if (o.state.size() != 6) throw DomainError("simulate: full state needs 6 values x1 x2 x3 y1 y2 y3");
      std::copy(o.state.begin(), o.state.end(), z.begin());
    } else {
      const FullPhasePoint e = equilibrium_circle(o.theta, o.nu0);
      for (int i = 0; i < 3; ++i) {
        z[i] = e.x[i];
        z[i + 3] = e.y[i];
      }
    }
    run(z, FullSystem{p}, "nu,x1,x2,x3,y1,y2,y3,Q", [&](const FullState& s, double t) {
      FullPhasePoint fp;
      fp.x = Vec3(s[0], s[1], s[2]);
      fp.y = Vec3(s[3], s[4], s[5]);
      csv << t;
      for (double v : s) csv << ',' << v;
      csv << ',' << first_integral_Q(fp) << "\n";
    });
  } else {
    ReducedState z{1.0, 0.0, 0.0, 0.0};
    if (!o.state.empty()) {
      if (o.state.size() != 4) throw DomainError("simulate: reduced state needs 4 values u1 u3 v1 v3");
      std::copy(o.state.begin(), o.state.end(), z.begin());
    }
    run(z, ReducedSystem{p}, "nu,u1,u3,v1,v3,H", [&](const ReducedState& s, double t) {
      csv << t;
      for (double v : s) csv << ',' << v;
      csv << ',' << reduced_hamiltonian({s[0], s[1], s[2], s[3], t}, p) << "\n";
    });
  }
  emit(o.out, csv.str(), out);
  return code;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> config_values(const Json& v) {
  std::vector<std::string> out;
  const auto one = [](const Json& x) -> std::string {
    if (x.is_string()) return x.get<std::string>();
    if (x.is_boolean()) return x.get<bool>() ? "true" : "false";
    if (x.is_number()) return x.dump();
    throw DomainError("config: unsupported value " + x.dump());
  };
  if (v.is_array())
    for (const auto& x : v) out.push_back(one(x));
  else
    out.push_back(one(v));
  return out;
}

// Flags win: only options absent from the command line take config values.
void apply_config(const Json& cfg, CLI::App& app, CLI::App* sub) {
  if (!cfg.is_object()) throw DomainError("config: top level must be a JSON object");
  for (const auto& [key, value] : cfg.items()) {
    CLI::Option* opt = nullptr;
    for (CLI::App* a : {sub, &app}) {
      if (!a) continue;
      for (CLI::Option* candidate : a->get_options())
        if (candidate->check_lname(key)) opt = candidate;
      if (opt) break;
    }
    if (!opt || key == "config" || key == "help") throw DomainError("config: unknown key '" + key + "'");
    if (opt->count() > 0) continue;
    for (const auto& s : config_values(value)) opt->add_result(s);
    opt->run_callback();
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear stability of the elliptic restricted isosceles problem near parametric resonance"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string configPath, outPath;
  std::optional<double> tol;
  bool checkPaper = false;
  app.add_option("--config", configPath, "JSON file of option values (flags take precedence)");
  app.add_option("--tol", tol, "integration tolerance");
  app.add_option("--out", outPath, "output path (CSV, or JSON for normalform)");
  app.add_flag("--check-paper", checkPaper, "compare normalform output with the published fractions");

  SpectrumOptions spec;
  auto* s1 = app.add_subcommand("spectrum", "characteristic polynomial, eigenvalues and frequencies at eps = 0");
  s1->add_option("--mu", spec.mu, "mass ratio (exact rational text)")->required();
  s1->add_option("--theta", spec.theta, "position on the equilibrium circle");

  ResonanceOptions res;
  auto* s2 = app.add_subcommand("resonances", "mass ratios with 2 omega2 an integer");
  s2->add_option("--min-mu", res.minMu, "exclusive lower end (default 0)");
  s2->add_option("--max-mu", res.maxMu, "inclusive upper end (default unbounded)");

  NormalFormOptions nfo;
  auto* s3 = app.add_subcommand("normalform", "normal form, characteristic coefficients and boundary curves");
  s3->add_option("--n2", nfo.n2, "resonance 2 omega2 = N2 (3, 4 or 5)");
  s3->add_option("--order", nfo.order, "eps order of the normal form (1..6)");
  s3->add_option("--convention", nfo.convention, "canonical (default) or published");

  ChartOptions ch;
  auto* s4 = app.add_subcommand("floquet-chart", "trace tongue edges with the Floquet oracle");
  s4->add_option("--n2", ch.n2, "resonance (3, 4 or 5)");
  s4->add_option("--eps", ch.eps, "eccentricities, comma separated")->delimiter(',');
  s4->add_option("--mu-min", ch.muMin, "lower end of the mu window");
  s4->add_option("--mu-max", ch.muMax, "upper end of the mu window");
  s4->add_option("--bracket", ch.bracket, "bracket width (0: floating-point resolution)");
  s4->add_option("--order", ch.order, "order of the series curves drawn in the SVG");
  s4->add_option("--convention", ch.convention, "convention of the series curves drawn in the SVG");
  s4->add_option("--svg", ch.svgOut, "write an SVG chart");

  SimulateOptions sim;
  auto* s5 = app.add_subcommand("simulate", "integrate the full or reduced system");
  s5->add_option("--system", sim.system, "full or reduced");
  s5->add_option("--mu", sim.mu, "mass ratio");
  s5->add_option("--eps", sim.eps, "eccentricity");
  s5->add_option("--gamma", sim.gamma, "reduced angular momentum (reduced system)");
  s5->add_option("--theta", sim.theta, "start on the equilibrium circle at this angle (full system)");
  s5->add_option("--state", sim.state, "initial state, comma separated")->delimiter(',');
  s5->add_option("--nu0", sim.nu0, "initial true anomaly");
  s5->add_option("--periods", sim.periods, "number of 2 pi periods");
  s5->add_option("--samples", sim.samplesPerPeriod, "samples per period");

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    if (!configPath.empty()) {
      std::ifstream f(configPath);
      if (!f) throw DomainError("cannot read config " + configPath);
      Json cfg;
      try {
        cfg = Json::parse(f);
      } catch (const Json::exception& e) {
        throw DomainError(std::string("config: ") + e.what());
      }
      apply_config(cfg, app, sub);
    }
    if (sub == s1) {
      std::ostringstream text;
      const int rc = cmd_spectrum(spec, text, err);
      emit(outPath, text.str(), out);
      return rc;
    }
    if (sub == s2) {
      std::ostringstream text;
      const int rc = cmd_resonances(res, text, err);
      emit(outPath, text.str(), out);
      return rc;
    }
    if (sub == s3) {
      nfo.checkPaper = checkPaper;
      nfo.jsonOut = outPath;
      return cmd_normalform(nfo, out, err);
    }
    if (sub == s4) {
      if (tol) ch.tol = *tol;
      ch.csvOut = outPath;
      return cmd_floquet_chart(ch, out, err);
    }
    if (sub == s5) {
      if (tol) sim.tol = *tol;
      sim.out = outPath;
      return cmd_simulate(sim, out, err);
    }
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInvalidInput;
  } catch (const std::invalid_argument& e) {  // DomainError and parse failures
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const SingularityError& e) {
    err << "error: " << e.what() << "\n";
    return kSingularity;
  } catch (const StepCollapseError& e) {
    err << "error: " << e.what() << "\n";
    return kTracingFailure;
  }
  return kInvalidInput;
}

}  // namespace isostab::cli
