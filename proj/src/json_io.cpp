#include "recomp/json_io.hpp"

#include <sstream>

namespace recomp {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_json(c));
    return a;
}

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const Scalar& s) { return s.is_exact() ? to_json(s.exact()) : to_json(s.to_complex()); }

Json to_json(const PointP1& p) { return p.is_infinity() ? Json("inf") : to_json(p.value()); }

Json to_json(const RatMap& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const Moebius& m) {
    return {{"a", to_json(m.a())}, {"b", to_json(m.b())}, {"c", to_json(m.c())}, {"d", to_json(m.d())}};
}

Json to_json(const MultiplierSpectrum& s) {
    Json periods = Json::object();
    for (const auto& [period, entries] : s.periods) {
        Json list = Json::array();
        for (const auto& e : entries)
            list.push_back({{"multiplier", to_json(e.multiplier)}, {"mult", e.mult}, {"point", to_json(e.point)}});
        periods[std::to_string(period)] = std::move(list);
    }
    return {{"degree", s.degree}, {"periods", std::move(periods)}};
}

Json to_json(const Decomposition& d) { return {{"U", to_json(d.U())}, {"V", to_json(d.V())}}; }

Json to_json(const BlockPartition& b) {
    Json blocks = Json::array();
    for (const auto& block : b.blocks) {
        Json pts = Json::array();
        for (std::size_t i : block) pts.push_back(to_json(b.fiber[i]));
        blocks.push_back(std::move(pts));
    }
    return blocks;
}

Json to_json(const LegendreLattes& L) { return {{"lambda", to_json(L.lambda)}, {"j", to_json(L.j)}, {"map", to_json(L.map)}}; }

Json to_json(const PostcriticalSet& p) {
    Json pts = Json::array();
    for (const auto& x : p.points) pts.push_back(to_json(x));
    return {{"points", std::move(pts)}, {"closed", p.closed}};
}

Json to_json(const ModularOrbitGraph& g) {
    Json nodes = Json::array();
    for (const auto& n : g.nodes) {
        Json node = {{"j", to_json(n.j.to_complex())}, {"depth", n.depth}};
        if (n.j.is_exact()) node["exact"] = to_json(n.j.exact());
        if (!n.warnings.empty()) node["warnings"] = n.warnings;
        nodes.push_back(std::move(node));
    }
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
    return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"dedup_tol", g.dedup_tol}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<unsigned long long>())));
    throw Error("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw Error("expected a coefficient array, got " + j.dump());
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return Poly(std::move(c));
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error("expected [re, im], got " + j.dump());
    return {j[0].get<double>(), j[1].get<double>()};
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_array()) return Scalar(complex_from_json(j));
    return Scalar(rational_from_json(j));
}

PointP1 point_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return PointP1::infinity();
    return PointP1(scalar_from_json(j));
}

RatMap ratmap_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num")) throw Error("expected {\"num\": [...], \"den\": [...]}");
    const Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly::constant(1);
    return RatMap(poly_from_json(j.at("num")), den);
}

Moebius moebius_from_json(const Json& j) {
    return Moebius(rational_from_json(j.at("a")), rational_from_json(j.at("b")), rational_from_json(j.at("c")),
                   rational_from_json(j.at("d")));
}

MultiplierSpectrum spectrum_from_json(const Json& j) {
    MultiplierSpectrum s;
    s.degree = j.at("degree").get<int>();
    for (const auto& [key, list] : j.at("periods").items()) {
        std::vector<SpectrumEntry> entries;
        for (const auto& e : list) {
            SpectrumEntry entry{complex_from_json(e.at("multiplier")), e.at("mult").get<int>(), PointP1::infinity()};
            if (e.contains("point")) entry.point = point_from_json(e.at("point"));
            entries.push_back(std::move(entry));
        }
        s.periods.emplace(std::stoi(key), std::move(entries));
    }
    return s;
}

Decomposition decomposition_from_json(const Json& j) {
    return Decomposition(ratmap_from_json(j.at("U")), ratmap_from_json(j.at("V")));
}

ModularOrbitGraph graph_from_json(const Json& j) {
    ModularOrbitGraph g;
    g.dedup_tol = j.value("dedup_tol", g.dedup_tol);
    for (const auto& n : j.at("nodes")) {
        OrbitNode node{n.contains("exact") ? Scalar(rational_from_json(n.at("exact"))) : Scalar(complex_from_json(n.at("j"))),
                       n.at("depth").get<int>(),
                       {}};
        if (n.contains("warnings")) node.warnings = n.at("warnings").get<std::vector<std::string>>();
        g.nodes.push_back(std::move(node));
    }
    for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    return g;
}

std::string to_dot(const ModularOrbitGraph& g) {
    std::ostringstream os;
    os << "graph orbit {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << to_string(g.nodes[i].j) << "\\ndepth " << g.nodes[i].depth << "\"];\n";
    for (const auto& [u, v] : g.edges) os << "  n" << u << " -- n" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace recomp
