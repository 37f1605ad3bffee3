#pragma once

#include <json.hpp>

#include "isostab/eps_series.hpp"
#include "isostab/normalizer.hpp"
#include "isostab/quadform.hpp"

namespace isostab {

using Json = nlohmann::json;  // std::map-backed: keys come out sorted

// Rationals are "p/q" strings (integers without "/1"); polynomials map
// monomial names ("1", "mu1^2*mu3", ...) to rationals; trigonometric
// coefficients map harmonic keys ("c<h>", "s<h>", h in half-frequencies) to
// polynomials; quadratic forms map monomial names ("X1^2", ...) to trig
// coefficients. Zero entries are omitted.
Json to_json(const Rational& q);
Json to_json(const RationalPoly& p);
Json to_json(const TrigCoeff& c);
Json to_json(const TrigQuadForm& f);
Json to_json(const ScalarSeries& s);
Json to_json(const HamiltonianSeries& s);
Json to_json(const BoundaryCurve& c);

Rational rational_from_json(const Json& j);
RationalPoly poly_from_json(const Json& j);
TrigCoeff trig_from_json(const Json& j);
TrigQuadForm quadform_from_json(const Json& j);
ScalarSeries scalar_series_from_json(const Json& j);
HamiltonianSeries hamiltonian_series_from_json(const Json& j);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace isostab
