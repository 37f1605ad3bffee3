#include "isostab/normalizer.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace isostab {

const char* to_string(Convention c) { return c == Convention::Canonical ? "canonical" : "published"; }

const char* to_string(Condition c) {
  switch (c) {
    case Condition::B: return "b=0";
    case Condition::D: return "d=0";
    case Condition::A: return "a=0";
    case Condition::Block: return "d2=0";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Deprit triangle

NormalFormResult deprit_hori_normalize(const HamiltonianSeries& h, int order, Period period, Convention convention) {
  if (h.scaling() != Scaling::Plain) throw std::invalid_argument("deprit_hori_normalize: expects plain scaling");
  if (order < 1 || order > h.precision()) throw TruncationError("deprit_hori_normalize: order exceeds input truncation");
  if (!h[0].is_zero()) throw std::invalid_argument("deprit_hori_normalize: eps^0 term must vanish (rotate first)");
  for (int k = 0; k <= order; ++k)
    if (period == Period::TwoPi && h[k].has_odd_harmonics())
      throw std::invalid_argument("deprit_hori_normalize: half-integer harmonics need the 4pi period");

  const Rational sign(convention == Convention::Canonical ? 1 : -1);
  auto lie = [&](const TrigQuadForm& w, const TrigQuadForm& f) { return poisson_bracket(f, w) * sign; };

  // rows[i][m] holds H^{(i)}_m; row 0 is the input in factorial scaling.
  std::vector<std::vector<TrigQuadForm>> rows(order + 1);
  for (int i = 0; i <= order; ++i) rows[i].resize(order + 1 - i);
  for (int m = 0; m <= order; ++m) rows[0][m] = h[m] * factorial(m);

  NormalFormResult r;
  r.input = h.truncated(order);
  r.K = HamiltonianSeries(order, Scaling::Factorial);
  r.W = HamiltonianSeries(order, Scaling::Factorial);
  r.order = order;
  r.period = period;
  r.convention = convention;

  for (int n = 1; n <= order; ++n) {
    // With W_n still zero; its only contribution, -dW_n/dnu, is added below.
    for (int i = 1; i <= n; ++i) {
      const int m = n - i;
      TrigQuadForm acc = rows[i - 1][m + 1];
      for (int j = 0; j <= m; ++j) {
        if (r.W[j + 1].is_zero() || rows[i - 1][m - j].is_zero()) continue;
        acc += lie(r.W[j + 1], rows[i - 1][m - j]) * binomial(m, j);
      }
      rows[i][m] = acc;
    }
    const AverageSplit split = split_average_oscillatory(rows[n][0], period);
    r.K[n] = split.average;
    r.W[n] = antiderivative_zero_mean(split.oscillatory);
    for (int i = 1; i <= n; ++i) rows[i][n - i] -= split.oscillatory;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Linear-flow consistency check

namespace {

using TrigMatrix = std::array<std::array<TrigCoeff, kNumVars>, kNumVars>;

TrigMatrix symmetric_matrix(const TrigQuadForm& f) {
  TrigMatrix s;
  for (int m = 0; m < kNumMonomials; ++m) {
    const auto& mono = kMonomials[m];
    if (mono.i == mono.j)
      s[mono.i][mono.i] = f.coeff(m) * Rational(2);
    else
      s[mono.i][mono.j] = s[mono.j][mono.i] = f.coeff(m);
  }
  return s;
}

// J S with J = diag([[0,1],[-1,0]], [[0,1],[-1,0]]) in (X1,Y1,X2,Y2).
TrigMatrix hamiltonian_matrix(const TrigQuadForm& f) {
  const TrigMatrix s = symmetric_matrix(f);
  TrigMatrix a;
  for (int pair = 0; pair < 2; ++pair) {
    const int x = 2 * pair, y = x + 1;
    for (int c = 0; c < kNumVars; ++c) {
      a[x][c] = s[y][c];
      a[y][c] = -s[x][c];
    }
  }
  return a;
}

TrigMatrix mat_mul(const TrigMatrix& a, const TrigMatrix& b) {
  TrigMatrix c;
  for (int i = 0; i < kNumVars; ++i)
    for (int k = 0; k < kNumVars; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < kNumVars; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

TrigMatrix mat_add(TrigMatrix a, const TrigMatrix& b, const Rational& s = Rational(1)) {
  for (int i = 0; i < kNumVars; ++i)
    for (int j = 0; j < kNumVars; ++j)
      if (!b[i][j].is_zero()) a[i][j] += b[i][j] * s;
  return a;
}

TrigMatrix mat_scale(TrigMatrix a, const Rational& s) {
  for (auto& row : a)
    for (auto& e : row) e = e * s;
  return a;
}

TrigMatrix identity_matrix() {
  TrigMatrix id;
  for (int i = 0; i < kNumVars; ++i) id[i][i] = TrigCoeff(1L);
  return id;
}

}  // namespace

ForwardCheck forward_transform_check(const NormalFormResult& nf) {
  const int J = nf.order;
  // Plain coefficients of A_W(eps) = sum eps^k/k! J S_{W_{k+1}}.
  std::vector<TrigMatrix> aw(J), ah(J + 1), ak(J + 1), p(J + 1);
  for (int k = 0; k < J; ++k) aw[k] = mat_scale(hamiltonian_matrix(nf.W[k + 1]), Rational(Rational(1) / factorial(k)));
  for (int k = 0; k <= J; ++k) {
    ah[k] = hamiltonian_matrix(nf.input[k]);
    ak[k] = mat_scale(hamiltonian_matrix(nf.K[k]), Rational(Rational(1) / factorial(k)));
  }
  p[0] = identity_matrix();
  for (int n = 0; n < J; ++n) {
    TrigMatrix acc;
    for (int k = 0; k <= n; ++k) acc = mat_add(acc, mat_mul(aw[k], p[n - k]));
    p[n + 1] = mat_scale(acc, ratio(1, n + 1));
  }

  ForwardCheck out;
  for (int n = 0; n <= J; ++n) {
    TrigMatrix lhs, rhs;
    for (int k = 0; k <= n; ++k) {
      lhs = mat_add(lhs, mat_mul(p[k], ak[n - k]));
      rhs = mat_add(rhs, mat_mul(ah[k], p[n - k]));
    }
    TrigMatrix dp;
    for (int i = 0; i < kNumVars; ++i)
      for (int j = 0; j < kNumVars; ++j) dp[i][j] = p[n][i][j].derivative();
    rhs = mat_add(rhs, dp, Rational(-1));
    for (int i = 0; i < kNumVars; ++i)
      for (int j = 0; j < kNumVars; ++j)
        if (!(lhs[i][j] == rhs[i][j])) {
          std::ostringstream os;
          os << "order " << n << ", entry (" << i << "," << j << "): P*A_K = " << lhs[i][j].to_string()
             << " but A_H*P - dP/dnu = " << rhs[i][j].to_string();
          out.firstMismatchOrder = n;
          out.detail = os.str();
          return out;
        }
  }
  out.consistent = true;
  out.detail = "P A_K = A_H P - dP/dnu holds exactly through eps^" + std::to_string(J);
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic coefficients

namespace {

bool has_cross_terms(const HamiltonianSeries& h) {
  for (int k = 0; k <= h.precision(); ++k)
    for (int m = 0; m < kNumMonomials; ++m)
      if (kMonomials[m].i / 2 != kMonomials[m].j / 2 && !h[k].coeff(m).is_zero()) return true;
  return false;
}

using SeriesMatrix = std::array<std::array<ScalarSeries, kNumVars>, kNumVars>;

ScalarSeries det2(const ScalarSeries& a, const ScalarSeries& b, const ScalarSeries& c, const ScalarSeries& d) {
  return a * d - b * c;
}

// Leibniz expansion, used only when the blocks are coupled.
ScalarSeries det4(const SeriesMatrix& a) {
  std::array<int, 4> perm{0, 1, 2, 3};
  ScalarSeries sum;
  bool first = true;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    ScalarSeries t = a[0][perm[0]] * a[1][perm[1]] * a[2][perm[2]] * a[3][perm[3]];
    if (inversions % 2) t = scale(t, Rational(-1));
    sum = first ? t : sum + t;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace

CharCoeffs characteristic_coeffs(const NormalFormResult& nf, const Substitution& subs) {
  const HamiltonianSeries kp = nf.K.to_plain();
  const int J = kp.precision();
  SeriesMatrix s;
  for (auto& row : s)
    for (auto& e : row) e = ScalarSeries(J);
  for (int k = 0; k <= J; ++k) {
    if (!kp[k].is_autonomous()) throw std::logic_error("characteristic_coeffs: K is not autonomous");
    for (int m = 0; m < kNumMonomials; ++m) {
      RationalPoly c = kp[k].coeff(m).mean();
      for (const auto& [idx, v] : subs) c = c.substitute(idx, v);
      const auto& mono = kMonomials[m];
      if (mono.i == mono.j)
        s[mono.i][mono.i][k] = c * Rational(2);
      else
        s[mono.i][mono.j][k] = s[mono.j][mono.i][k] = c;
    }
  }

  CharCoeffs cc;
  if (!has_cross_terms(nf.input)) {
    // The input never couples the two degrees of freedom and brackets of
    // uncoupled forms stay uncoupled, so K is block diagonal to every order:
    // lambda^4 + a lambda^2 + b = (lambda^2 + D1)(lambda^2 + D2), D = det S_block.
    const ScalarSeries d1 = det2(s[0][0], s[0][1], s[1][0], s[1][1]);
    const ScalarSeries d2 = det2(s[2][2], s[2][3], s[3][2], s[3][3]);
    cc.a = d1 + d2;
    cc.b = d1 * d2;
    cc.blockDiagonal = true;
    cc.d1 = d1;
    cc.d2 = d2;
  } else {
    SeriesMatrix a;  // A = J S
    for (int pair = 0; pair < 2; ++pair) {
      const int x = 2 * pair, y = x + 1;
      for (int c = 0; c < kNumVars; ++c) {
        a[x][c] = s[y][c];
        a[y][c] = scale(s[x][c], Rational(-1));
      }
    }
    bool first = true;
    for (int i = 0; i < kNumVars; ++i)
      for (int j = i + 1; j < kNumVars; ++j) {
        ScalarSeries minor = det2(a[i][i], a[i][j], a[j][i], a[j][j]);
        cc.a = first ? minor : cc.a + minor;
        first = false;
      }
    cc.b = det4(a);
  }
  cc.d = cc.a * cc.a - scale(cc.b, Rational(4));
  return cc;
}

// ---------------------------------------------------------------------------
// Univariate rational polynomials

namespace {

using UPoly = std::vector<Rational>;  // low to high

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(p[i] * static_cast<long>(i)));
  trim(d);
  return d;
}

// Quotient and remainder of a / b (b nonzero, trimmed).
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  trim(a);
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();  // leading term cancels exactly
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}


// Positive divisors of |n|, or nothing when |n| is too large to factor by trial division.
std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  n = abs(n);
  if (n == 0 || n > mpz_class("1000000000000000000")) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational horner(const UPoly& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

// Removes the rational roots of a squarefree p (rational root theorem) and
// returns the remaining factor; false when the coefficients are too large.
bool deflate_rational_roots(UPoly& p, std::vector<Rational>& roots) {
  while (p.size() > 1 && p[0] == 0) {
    roots.push_back(0);
    p.erase(p.begin());
  }
  if (p.size() <= 3) return true;
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  const auto num = divisors(mpz_class(p.front() * l));
  const auto den = divisors(mpz_class(p.back() * l));
  if (!num || !den) return false;
  for (const auto& a : *num)
    for (const auto& b : *den)
      for (int sign : {-1, 1}) {
        if (p.size() <= 3) return true;
        Rational x(sign * a, b);
        x.canonicalize();
        if (std::find(roots.begin(), roots.end(), x) != roots.end() || horner(p, x) != 0) continue;
        roots.push_back(x);
        p = divmod(p, UPoly{-x, Rational(1)}).first;
        trim(p);
      }
  return true;
}

}  // namespace

RealRoots real_rational_roots(const std::vector<Rational>& coeffs) {
  UPoly p = coeffs;
  trim(p);
  RealRoots out;
  if (p.size() <= 1) return out;
  const UPoly g = gcd(p, derivative(p));
  UPoly q = g.size() > 1 ? divmod(p, g).first : p;
  trim(q);
  if (!deflate_rational_roots(q, out.roots)) {
    out.unsupported = true;
    return out;
  }
  const std::size_t deg = q.size() - 1;
  if (deg == 0) {
  } else if (deg == 1) {
    out.roots.push_back(Rational(-q[0] / q[1]));
  } else if (deg == 2) {
    const Rational disc = q[1] * q[1] - 4 * q[2] * q[0];
    if (sgn(disc) >= 0) {
      if (auto r = exact_sqrt(disc)) {
        Rational r1 = (-q[1] - *r) / (2 * q[2]), r2 = (-q[1] + *r) / (2 * q[2]);
        out.roots.push_back(r1);
        out.roots.push_back(r2);
      } else {
        out.irrational = true;
      }
    }
  } else {
    out.unsupported = true;
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

// ---------------------------------------------------------------------------
// Boundary curves

bool BoundarySolution::no_real_solution() const {
  if (!curves.empty() || dead.empty()) return false;
  return std::all_of(dead.begin(), dead.end(),
                     [](const DeadBranch& d) { return d.reason.find("no real solution") != std::string::npos; });
}

int BoundaryCurve::determined_through() const {
  int m = 0;
  while (m + 1 < static_cast<int>(mu.size()) && mu[m + 1]) ++m;
  return m;
}

double BoundaryCurve::evaluate(double eps) const { return evaluate(eps, determined_through()); }

double BoundaryCurve::evaluate(double eps, int through) const {
  double v = 0.0, p = 1.0;
  for (int i = 0; i <= through && i < static_cast<int>(mu.size()); ++i) {
    if (!mu[i]) break;
    v += mu[i]->get_d() * p;
    p *= eps;
  }
  return v;
}

std::string BoundaryCurve::to_string() const {
  std::ostringstream os;
  os << "mu = " << (mu[0] ? isostab::to_string(*mu[0]) : "?");
  for (std::size_t i = 1; i < mu.size(); ++i) {
    if (!mu[i]) {
      os << " + mu" << i << "*eps^" << i << " (undetermined)";
      break;
    }
    if (sgn(*mu[i]) == 0) continue;
    const bool neg = sgn(*mu[i]) < 0;
    os << (neg ? " - " : " + ") << isostab::to_string(neg ? Rational(-*mu[i]) : *mu[i]) << "*eps";
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

namespace {

const ScalarSeries& pick(const CharCoeffs& cc, Condition c) {
  switch (c) {
    case Condition::A: return cc.a;
    case Condition::B: return cc.b;
    case Condition::D: return cc.d;
    case Condition::Block:
      if (!cc.blockDiagonal) throw std::invalid_argument("d2=0 condition requires a block-diagonal normal form");
      return cc.d2;
  }
  return cc.b;
}

struct Branch {
  Substitution values;
  std::map<int, int> fixedAt;
};

BoundaryCurve make_curve(const NormalFormResult& nf, Condition cond, const Branch& br, int precision,
                         std::string status) {
  BoundaryCurve c;
  c.n2 = nf.n2;
  c.condition = cond;
  c.mu.assign(static_cast<std::size_t>(nf.order) + 1, std::nullopt);
  c.fixedAtOrder.assign(static_cast<std::size_t>(nf.order) + 1, -1);
  c.mu[0] = nf.mu0;
  for (const auto& [i, v] : br.values)
    if (i < static_cast<int>(c.mu.size())) {
      c.mu[i] = v;
      c.fixedAtOrder[i] = br.fixedAt.count(i) ? br.fixedAt.at(i) : -1;
    }
  c.resolvedPrecision = precision;
  c.status = std::move(status);
  return c;
}

}  // namespace

BoundarySolution solve_boundary(const NormalFormResult& nf, Condition condition) {
  BoundarySolution sol;
  std::deque<Branch> work{Branch{}};
  while (!work.empty()) {
    Branch br = work.front();
    work.pop_front();
    for (;;) {
      const ScalarSeries c = pick(characteristic_coeffs(nf, br.values), condition);
      const int k = c.valuation();
      if (k > c.precision()) {
        sol.curves.push_back(make_curve(nf, condition, br, c.precision(),
                                        "condition annihilated through eps^" + std::to_string(c.precision())));
        break;
      }
      const auto vars = c[k].unknowns();
      if (vars.empty()) {
        sol.dead.push_back({br.values, k, "inconsistent: eps^" + std::to_string(k) + " coefficient is a nonzero constant"});
        break;
      }
      if (vars.size() > 1) {
        std::ostringstream os;
        os << "underdetermined: eps^" << k << " coefficient couples";
        for (int v : vars) os << " mu" << v;
        sol.curves.push_back(make_curve(nf, condition, br, k - 1, os.str()));
        break;
      }
      const int v = vars.front();
      const RealRoots roots = real_rational_roots(c[k].as_univariate(v));
      if (roots.roots.empty()) {
        std::string why = roots.irrational    ? "irrational real roots for mu" + std::to_string(v)
                          : roots.unsupported ? "unsupported high-degree condition for mu" + std::to_string(v)
                                              : "no real solution for mu" + std::to_string(v);
        sol.dead.push_back({br.values, k, why + " at eps^" + std::to_string(k)});
        break;
      }
      for (std::size_t r = 1; r < roots.roots.size(); ++r) {
        Branch other = br;
        other.values[v] = roots.roots[r];
        other.fixedAt[v] = k;
        work.push_back(other);
      }
      br.values[v] = roots.roots.front();
      br.fixedAt[v] = k;
    }
  }
  std::sort(sol.curves.begin(), sol.curves.end(), [](const BoundaryCurve& a, const BoundaryCurve& b) {
    for (std::size_t i = 0; i < std::min(a.mu.size(), b.mu.size()); ++i) {
      if (a.mu[i] == b.mu[i]) continue;
      if (!a.mu[i]) return true;
      if (!b.mu[i]) return false;
      return *a.mu[i] < *b.mu[i];
    }
    return false;
  });
  for (std::size_t i = 0; i < sol.curves.size(); ++i)
    sol.curves[i].label = std::string(to_string(condition)) + " branch " + std::to_string(i + 1);
  return sol;
}

// ---------------------------------------------------------------------------
// Transition type

namespace {

std::string describe_positivity(int unknown, const std::vector<Rational>& poly, const RealRoots& roots) {
  const std::string x = "mu" + std::to_string(unknown);
  const int lc = sgn(poly.back());
  if (roots.irrational || roots.unsupported) return "sign change at irrational roots in " + x;
  if (roots.roots.empty()) return lc > 0 ? "all " + x : "no " + x;
  if (poly.size() == 2) {
    const std::string r = to_string(roots.roots[0]);
    return lc > 0 ? x + " > " + r : x + " < " + r;
  }
  if (roots.roots.size() == 2 && poly.size() == 3) {
    const std::string r1 = to_string(roots.roots[0]), r2 = to_string(roots.roots[1]);
    return lc > 0 ? x + " < " + r1 + " or " + x + " > " + r2 : r1 + " < " + x + " < " + r2;
  }
  if (roots.roots.size() == 1 && poly.size() == 3)
    return lc > 0 ? x + " != " + to_string(roots.roots[0]) : "no " + x;
  return "see roots of the leading condition in " + x;
}

}  // namespace

TransitionVerdict check_transition_type(const NormalFormResult& nf, const BoundaryCurve& curve) {
  TransitionVerdict v;
  Substitution subs;
  for (;;) {
    const ScalarSeries a = characteristic_coeffs(nf, subs).a;
    const int k = a.valuation();
    if (k > a.precision()) {
      v.decided = true;
      v.vanishesOnCurve = true;
      v.aPositive = false;
      v.summary = "a>0 violated: a vanishes identically on the curve through eps^" + std::to_string(a.precision());
      return v;
    }
    const RationalPoly& c = a[k];
    if (c.is_constant()) {
      v.decided = true;
      v.leadingOrder = k;
      v.leadingValue = c.constant_term();
      v.aPositive = sgn(v.leadingValue) > 0;
      v.summary = std::string(v.aPositive ? "a>0 holds" : "a>0 violated") + ": leading a coefficient eps^" +
                  std::to_string(k) + " = " + to_string(v.leadingValue);
      if (!v.condition.empty()) v.summary += " (requires " + v.condition + ")";
      return v;
    }
    const auto vars = c.unknowns();
    const int u = vars.front();
    if (u >= static_cast<int>(curve.mu.size()) || !curve.mu[u]) {
      v.summary = "undetermined: a depends on mu" + std::to_string(u) + " which the curve does not fix";
      return v;
    }
    if (vars.size() == 1) {
      const auto poly = c.as_univariate(u);
      const RealRoots roots = real_rational_roots(poly);
      const RationalPoly after = c.substitute(u, *curve.mu[u]);
      if (!after.is_zero()) {
        v.thresholdUnknown = u;
        v.thresholdRoots = roots.roots;
        v.condition = describe_positivity(u, poly, roots);
      }
    }
    subs[u] = *curve.mu[u];
  }
}

DiscriminantVerdict check_d_zero_with_a_positive(const NormalFormResult& nf) {
  DiscriminantVerdict out;
  const BoundarySolution sol = solve_boundary(nf, Condition::D);
  if (sol.curves.empty()) {
    out.infeasible = true;
    std::ostringstream os;
    os << "d=0 has no real solution";
    for (const auto& d : sol.dead) os << "; " << d.reason;
    out.reason = os.str();
    return out;
  }
  for (const auto& c : sol.curves) {
    const TransitionVerdict t = check_transition_type(nf, c);
    if (!t.decided || t.aPositive) {
      out.infeasible = false;
      out.reason = "d=0 curve " + c.to_string() + ": " + t.summary;
      return out;
    }
  }
  out.infeasible = true;
  out.reason = "every d=0 curve violates a>0";
  return out;
}

}  // namespace isostab
