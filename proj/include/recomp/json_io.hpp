#pragma once

#include <string>

#include "json.hpp"

#include "recomp/decomp.hpp"
#include "recomp/lattes.hpp"
#include "recomp/modular.hpp"
#include "recomp/spectrum.hpp"

namespace recomp {

using Json = nlohmann::json;

// Encodings: rationals as "p/q" strings, polynomials as ascending arrays of
// rationals, complex values as [re, im], infinity as "inf".

Json to_json(const Rational& r);
Json to_json(const Poly& p);
Json to_json(Complex c);
Json to_json(const Scalar& s);
Json to_json(const PointP1& p);
Json to_json(const RatMap& f);
Json to_json(const Moebius& m);
Json to_json(const MultiplierSpectrum& s);
Json to_json(const Decomposition& d);
Json to_json(const BlockPartition& b);
Json to_json(const LegendreLattes& L);
Json to_json(const PostcriticalSet& p);
Json to_json(const ModularOrbitGraph& g);

/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);
Complex complex_from_json(const Json& j);
Scalar scalar_from_json(const Json& j);
PointP1 point_from_json(const Json& j);
RatMap ratmap_from_json(const Json& j);
Moebius moebius_from_json(const Json& j);
MultiplierSpectrum spectrum_from_json(const Json& j);
Decomposition decomposition_from_json(const Json& j);
ModularOrbitGraph graph_from_json(const Json& j);

/// Graphviz rendering of an orbit graph.
std::string to_dot(const ModularOrbitGraph& g);

}  // namespace recomp
