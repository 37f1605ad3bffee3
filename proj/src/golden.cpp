#include "isostab/golden.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace isostab {

const std::vector<Golden>& published_goldens() {
  using K = GoldenKind;
  static const std::vector<Golden> table = {
      // N2 = 4, 2 pi-periodic normal form
      {4, K::KCoefficient, "N2=4 K listing", 1, "X2^2", "1/14*mu1"},
      {4, K::KCoefficient, "N2=4 K listing", 1, "Y2^2", "1/14*mu1"},
      {4, K::KCoefficient, "N2=4 K listing", 2, "X1^2", "-3/4"},
      {4, K::KCoefficient, "N2=4 K listing", 2, "Y1^2", "3/4"},
      {4, K::KCoefficient, "N2=4 K listing", 2, "X2^2", "(-5*mu1^2/98 + 2*mu2/7 + 9/10)/2"},
      {4, K::KCoefficient, "N2=4 K listing", 2, "Y2^2", "(-5*mu1^2/98 + 2*mu2/7 + 9/10)/2"},
      {4, K::KCoefficient, "N2=4 K listing", 4, "X1^2", "-45/16"},
      {4, K::KCoefficient, "N2=4 K listing", 4, "Y1^2", "-189/16"},
      {4, K::KConstant, "N2=4 K listing", 4, "X2^2", "2511/1000"},
      {4, K::KConstant, "N2=4 K listing", 4, "Y2^2", "5193/500"},
      {4, K::CharFree, "N2=4 a series", 2, "a", "mu1^2/49"},
      {4, K::CharFree, "N2=4 b series", 6, "b", "-9*mu1^2/784"},
      {4, K::CharFree, "N2=4 d series", 4, "d", "mu1^4/2401"},
      {4, K::CharMu1Zero, "N2=4 a series, mu1=0", 4, "a", "(5*mu2 + 42)*(10*mu2 - 21)/2450"},
      {4, K::CharMu1Zero, "N2=4 a series, mu1=0", 5, "a", "mu3*(20*mu2 + 63)/490"},
      {4, K::CharMu1Zero, "N2=4 b series, mu1=0", 8, "b", "-9*(20*mu2 + 63)^2/313600"},
      {4, K::CharMu1Zero, "N2=4 d series, mu1=0", 8, "d", "(200*mu2^2 + 1260*mu2 + 7497)^2/96040000"},
      {4, K::CurveValues, "N2=4 b=0 curves", 1, "", "0"},
      {4, K::CurveValues, "N2=4 b=0 curves", 2, "", "-63/20"},
      {4, K::CurveValues, "N2=4 b=0 curves", 4, "", "-22197/8000,14553/8000"},
      {4, K::Thresholds, "N2=4 a>0 condition", 2, "", "-42/5,21/10"},
      {4, K::Conclusion, "N2=4 conclusion", 0, "a-violated-on-b-curves", "true"},
      {4, K::Conclusion, "N2=4 conclusion", 0, "d-zero-infeasible", "true"},

      // N2 = 3, 4 pi-periodic normal form
      {3, K::KCoefficient, "N2=3 K listing", 1, "X2^2", "529/2688*mu1"},
      {3, K::KCoefficient, "N2=3 K listing", 1, "Y2^2", "529/2688*mu1"},
      {3, K::CharFree, "N2=3 a series", 2, "a", "279841/1806336*mu1^2"},
      {3, K::CharMu1Zero, "N2=3 a series, mu1=0", 4, "a", "23*(92*mu2 - 119)*(2116*mu2 + 5327)/28901376"},
      {3, K::CharMu1Zero, "N2=3 b series, mu1=0", 8, "b", "-(2116*mu2 + 1295)^2/51380224"},
      {3, K::CharMu1Zero, "N2=3 d series, mu1=0", 8, "d",
       "(4477456*mu2^2 + 5480440*mu2 + 17934049)^2/835289534693376"},
      {3, K::CurveValues, "N2=3 b=0 curves", 1, "", "0"},
      {3, K::CurveValues, "N2=3 b=0 curves", 2, "", "-1295/2116"},
      {3, K::CurveValues, "N2=3 b=0 curves", 3, "", "-5915/16928,5915/16928"},
      {3, K::CurveValues, "N2=3 b=0 curves", 4, "", "-106154825/448524288"},
      {3, K::Thresholds, "N2=3 a>0 condition", 2, "", "-5327/2116,119/92"},
      {3, K::Conclusion, "N2=3 conclusion", 0, "a-violated-on-b-curves", "true"},
      {3, K::Conclusion, "N2=3 conclusion", 0, "d-zero-infeasible", "true"},

      // N2 = 5, 4 pi-periodic normal form; this listing is in plain eps powers
      {5, K::KPlain, "N2=5 K listing", 2, "X2^2", "7*(-107*mu1^2 + 400*(117 + 4*mu2))/512000/2"},
      {5, K::KPlain, "N2=5 K listing", 2, "Y2^2", "7*(-107*mu1^2 + 400*(117 + 4*mu2))/512000/2"},
      {5, K::KPlain, "N2=5 K listing", 3, "X2^2",
       "7*(5749*mu1^3 - 100*mu1*(-5973 + 1712*mu2) + 1280000*mu3)/819200000"},
      {5, K::CharMu1Zero, "N2=5 a series, mu1=0", 4, "a", "(28*mu2 - 141)*(28*mu2 + 1779)/1638400"},
      {5, K::CharMu1Zero, "N2=5 a series, mu1=0", 5, "a", "49*(4*mu2 + 117)*mu3/204800"},
      {5, K::CharMu1Zero, "N2=5 b series, mu1=0", 8, "b", "-441*(4*mu2 + 117)^2/26214400"},
      {5, K::CharMu1Zero, "N2=5 b series, mu1=0", 9, "b", "-441*(4*mu2 + 117)*mu3/3276800"},
      {5, K::CharMu1Zero, "N2=5 d series, mu1=0", 8, "d", "(784*mu2^2 + 45864*mu2 + 1592361)^2/2684354560000"},
      {5, K::CurveValues, "N2=5 b=0 curves", 1, "", "0"},
      {5, K::CurveValues, "N2=5 b=0 curves", 2, "", "-117/4"},
      {5, K::CurveValues, "N2=5 b=0 curves", 4, "", "3541407/102400"},
      {5, K::CurveValues, "N2=5 b=0 curves", 5, "", "-924075/32768,924075/32768"},
      {5, K::CurveValues, "N2=5 b=0 curves", 6, "", "-11716785771/262144000"},
      {5, K::Thresholds, "N2=5 a>0 condition", 2, "", "-1779/28,141/28"},
      {5, K::Conclusion, "N2=5 conclusion", 0, "a-violated-on-b-curves", "true"},
      {5, K::Conclusion, "N2=5 conclusion", 0, "d-zero-infeasible", "true"},
  };
  return table;
}

const char* to_string(GoldenStatus s) {
  switch (s) {
    case GoldenStatus::Pass: return "PASS";
    case GoldenStatus::Fail: return "FAIL";
    case GoldenStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

namespace {

GoldenResult compare(const std::string& got, bool equal) {
  return {equal ? GoldenStatus::Pass : GoldenStatus::Fail, got, {}};
}

GoldenResult skipped(std::string why) { return {GoldenStatus::Skipped, {}, std::move(why)}; }

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out;
}

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  std::sort(out.begin(), out.end());
  return out;
}

const ScalarSeries& char_series(const CharCoeffs& cc, const std::string& which) {
  if (which == "a") return cc.a;
  if (which == "b") return cc.b;
  if (which == "d") return cc.d;
  throw std::invalid_argument("golden: unknown coefficient " + which);
}

}  // namespace

GoldenResult check_golden(const ResonanceAnalysis& r, const Golden& g) {
  if (g.n2 != r.n2) throw std::invalid_argument("check_golden: resonance mismatch");
  switch (g.kind) {
    case GoldenKind::KCoefficient:
    case GoldenKind::KConstant:
    case GoldenKind::KPlain: {
      if (g.index > r.nf.K.precision()) return skipped("K_" + std::to_string(g.index) + " beyond the order");
      const HamiltonianSeries k = g.kind == GoldenKind::KPlain ? r.nf.K.to_plain() : r.nf.K;
      const RationalPoly c = k[g.index].coeff(monomial_index(g.target)).mean();
      if (g.kind == GoldenKind::KConstant) {
        const Rational got = c.constant_term();
        return compare(to_string(got), got == parse_rational(g.expected));
      }
      return compare(c.to_string(), c == parse_poly(g.expected));
    }
    case GoldenKind::CharMu1Zero:
    case GoldenKind::CharFree: {
      const ScalarSeries& s = char_series(g.kind == GoldenKind::CharFree ? r.coeffs : r.coeffsMu1, g.target);
      if (g.index > s.precision())
        return skipped(g.target + " known only through eps^" + std::to_string(s.precision()));
      return compare(s[g.index].to_string(), s[g.index] == parse_poly(g.expected));
    }
    case GoldenKind::CurveValues: {
      std::set<Rational> values;
      for (const auto& c : r.bCurves.curves) {
        if (g.index >= static_cast<int>(c.mu.size()) || !c.mu[g.index])
          return skipped("mu" + std::to_string(g.index) + " not determined at this order");
        values.insert(*c.mu[g.index]);
      }
      if (r.bCurves.curves.empty()) return compare("no b=0 curve", false);
      const std::vector<Rational> got(values.begin(), values.end());
      return compare(join(got), got == parse_list(g.expected));
    }
    case GoldenKind::Thresholds: {
      std::set<Rational> roots;
      for (const auto& t : r.transitions) {
        if (!t.decided) return skipped("transition undecided at this order");
        if (t.thresholdUnknown == g.index) roots.insert(t.thresholdRoots.begin(), t.thresholdRoots.end());
      }
      const std::vector<Rational> got(roots.begin(), roots.end());
      return compare(join(got), got == parse_list(g.expected));
    }
    case GoldenKind::Conclusion: {
      bool value = false;
      if (g.target == "a-violated-on-b-curves") {
        if (r.transitions.empty()) return compare("no curves", false);
        value = true;
        for (const auto& t : r.transitions) {
          if (!t.decided) return skipped("transition undecided at this order");
          value = value && !t.aPositive;
        }
      } else if (g.target == "d-zero-infeasible") {
        value = r.dCheck.infeasible;
      } else {
        throw std::invalid_argument("golden: unknown conclusion " + g.target);
      }
      return compare(value ? "true" : "false", (g.expected == "true") == value);
    }
  }
  return skipped("unknown kind");
}

}  // namespace isostab
