#include "isostab/serialize.hpp"

#include <stdexcept>

namespace isostab {

namespace {

const char* scaling_name(Scaling s) { return s == Scaling::Plain ? "plain" : "factorial"; }

Scaling scaling_from(const std::string& s) {
  if (s == "plain") return Scaling::Plain;
  if (s == "factorial") return Scaling::Factorial;
  throw std::invalid_argument("unknown series scaling: " + s);
}

template <class T, class F>
Json series_to_json(const EpsSeries<T>& s, F&& term) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) terms.push_back(term(t));
  return Json{{"precision", s.precision()}, {"scaling", scaling_name(s.scaling())}, {"terms", terms}};
}

template <class T, class F>
EpsSeries<T> series_from_json(const Json& j, F&& term) {
  const int p = j.at("precision").get<int>();
  const auto& terms = j.at("terms");
  if (!terms.is_array() || static_cast<int>(terms.size()) != p + 1)
    throw std::invalid_argument("series JSON: terms must have precision+1 entries");
  EpsSeries<T> s(p, scaling_from(j.at("scaling").get<std::string>()));
  for (int k = 0; k <= p; ++k) s[k] = term(terms[static_cast<std::size_t>(k)]);
  return s;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RationalPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[monomial_name(e)] = to_string(c);
  return j;
}

Json to_json(const TrigCoeff& c) {
  Json j = Json::object();
  for (const auto& [h, p] : c.terms()) j[harmonic_key(h)] = to_json(p);
  return j;
}

Json to_json(const TrigQuadForm& f) {
  Json j = Json::object();
  for (int m = 0; m < kNumMonomials; ++m)
    if (!f.coeff(m).is_zero()) j[kMonomials[m].name] = to_json(f.coeff(m));
  return j;
}

Json to_json(const ScalarSeries& s) {
  return series_to_json(s, [](const RationalPoly& p) { return to_json(p); });
}

Json to_json(const HamiltonianSeries& s) {
  return series_to_json(s, [](const TrigQuadForm& f) { return to_json(f); });
}

Json to_json(const BoundaryCurve& c) {
  Json mu = Json::array(), fixed = Json::array();
  for (std::size_t i = 0; i < c.mu.size(); ++i) {
    mu.push_back(c.mu[i] ? to_json(*c.mu[i]) : Json(nullptr));
    fixed.push_back(c.fixedAtOrder[i]);
  }
  return Json{{"n2", c.n2},
              {"condition", to_string(c.condition)},
              {"label", c.label},
              {"mu", mu},
              {"fixed_at_order", fixed},
              {"resolved_precision", c.resolvedPrecision},
              {"status", c.status},
              {"text", c.to_string()}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational JSON must be a \"p/q\" string or an integer");
}

RationalPoly poly_from_json(const Json& j) {
  RationalPoly p;
  for (const auto& [k, v] : j.items()) p.add_term(parse_monomial(k), rational_from_json(v));
  return p;
}

TrigCoeff trig_from_json(const Json& j) {
  TrigCoeff c;
  for (const auto& [k, v] : j.items()) {
    const Harmonic h = parse_harmonic_key(k);
    c.add_term(h.half, h.parity, poly_from_json(v));
  }
  return c;
}

TrigQuadForm quadform_from_json(const Json& j) {
  TrigQuadForm f;
  for (const auto& [k, v] : j.items()) f.set(monomial_index(k), trig_from_json(v));
  return f;
}

ScalarSeries scalar_series_from_json(const Json& j) {
  return series_from_json<RationalPoly>(j, poly_from_json);
}

HamiltonianSeries hamiltonian_series_from_json(const Json& j) {
  return series_from_json<TrigQuadForm>(j, quadform_from_json);
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace isostab
