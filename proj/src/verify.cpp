#include "recomp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "recomp/decomp.hpp"
#include "recomp/lattes.hpp"
#include "recomp/sampling.hpp"
#include "recomp/spectrum.hpp"

namespace recomp {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "?";
}

bool VerifyReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{"all", "lemma", "decomp", "lattes", "modular"};
    return names;
}

double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<char> used(b.size(), 0);
    double worst = 0;
    for (const Complex& x : a) {
        std::size_t best = b.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (used[k]) continue;
            const double d = relative_distance(x, b[k]);
            if (d < best_dist) {
                best_dist = d;
                best = k;
            }
        }
        used[best] = 1;
        worst = std::max(worst, best_dist);
    }
    return worst;
}

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

std::vector<Complex> expand(const std::vector<Partner>& ps) {
    std::vector<Complex> out;
    for (const auto& p : ps) out.insert(out.end(), static_cast<std::size_t>(p.multiplicity), p.value.to_complex());
    return out;
}

/// The check body returns a detail string on success and throws or returns
/// through fail() otherwise.
struct Failure {
    std::string message;
};

[[noreturn]] void fail(std::string message) { throw Failure{std::move(message)}; }

void run(VerifyReport& report, const std::string& id, const std::function<std::string()>& body) {
    CheckResult result{id, CheckStatus::pass, {}};
    try {
        result.detail = body();
    } catch (const Failure& f) {
        result.status = CheckStatus::fail;
        result.detail = f.message;
    } catch (const std::exception& e) {
        result.status = CheckStatus::fail;
        result.detail = std::string("error: ") + e.what();
    }
    report.checks.push_back(std::move(result));
}

void lemma_suite(VerifyReport& report, const VerifyOptions& opts) {
    SpectrumOptions so;
    so.policy = opts.policy;
    so.roots.policy = opts.policy;
    run(report, "lemma.example", [&] {
        const RatMap U(Poly{0, 0, 1}), V(Poly{1, 1});
        const auto r = isospectral(compose(U, V), compose(V, U), 2, 1e-6, so);
        if (!r.isospectral) fail("(z+1)^2 and z^2+1 not isospectral");
        return std::string("(z+1)^2 ~ z^2+1 at s <= 2");
    });
    Rng rng(opts.seed);
    std::vector<std::pair<RatMap, RatMap>> pairs;
    for (int n = 0; n < 100; ++n) {
        RatMap U = random_map(rng, 2 + static_cast<int>(rng() % 2));
        RatMap V = random_map(rng, 2 + static_cast<int>(rng() % 2));
        pairs.emplace_back(std::move(U), std::move(V));
    }
    run(report, "lemma.isospectral", [&] {
        double worst = 0;
        for (const auto& [U, V] : pairs) {
            const auto r = isospectral(compose(U, V), compose(V, U), 2, 1e-6, so);
            if (!r.isospectral) fail("U = " + to_string(U) + ", V = " + to_string(V) + " not isospectral");
            for (const auto& [s, w] : r.worst_residual) worst = std::max(worst, w);
        }
        return std::to_string(pairs.size()) + " random pairs, worst residual " + fmt(worst);
    });
    run(report, "lemma.semiconjugacy", [&] {
        for (const auto& [U, V] : pairs) {
            const RatMap A = compose(U, V), B = compose(V, U);
            if (!semiconjugacy_check(B, A, V) || !semiconjugacy_check(A, B, U))
                fail("identity fails for U = " + to_string(U) + ", V = " + to_string(V));
        }
        return std::to_string(pairs.size()) + " pairs, both identities exact";
    });
}

void decomp_suite(VerifyReport& report, const VerifyOptions& opts) {
    Rng rng(opts.seed + 1);
    std::vector<Rational> lambdas;
    for (int n = 0; n < 20; ++n) lambdas.push_back(random_lambda(rng));
    run(report, "decomp.canonical_exact", [&] {
        for (const auto& l : lambdas) {
            const auto L = legendre_map(l);
            for (const auto& d : canonical_decompositions(L))
                if (!equals_exact(d.composed(), L.map)) fail("lambda = " + to_string(l));
        }
        return std::to_string(lambdas.size()) + " parameters, three exact identities each";
    });
    run(report, "decomp.inequivalent", [&] {
        for (const auto& l : lambdas) {
            const auto ds = canonical_decompositions(legendre_map(l));
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t k = i + 1; k < 3; ++k)
                    if (are_equivalent_decompositions(ds[i], ds[k])) fail("lambda = " + to_string(l));
        }
        return std::string("all pairs inequivalent");
    });
    run(report, "decomp.infinity_blocks", [&] {
        for (const auto& l : lambdas) {
            const auto ds = canonical_decompositions(legendre_map(l));
            const Rational partner[3] = {0, 1, l};
            for (std::size_t i = 0; i < 3; ++i) {
                const auto part = blocks(ds[i], PointP1::infinity());
                const auto& block = part.blocks[block_containing(part, PointP1::infinity())];
                std::vector<PointP1> got;
                for (std::size_t k : block) got.push_back(part.fiber[k]);
                if (got.size() != 2 || !(got[0] == PointP1(partner[i])) || !got[1].is_infinity())
                    fail("lambda = " + to_string(l) + ", decomposition " + std::to_string(i + 1));
            }
        }
        return std::string("blocks {0,inf}, {1,inf}, {lambda,inf}");
    });
    run(report, "decomp.semiconjugacy", [&] {
        for (const auto& l : lambdas)
            for (const auto& d : canonical_decompositions(legendre_map(l))) {
                const RatMap T = elementary_transform(d);
                if (!semiconjugacy_check(T, d.composed(), d.V()) || !semiconjugacy_check(d.composed(), T, d.U()))
                    fail("lambda = " + to_string(l));
            }
        return std::string("both identities exact for every canonical decomposition");
    });
    run(report, "decomp.search", [&] {
        for (const auto& l : lambdas) {
            const auto L = legendre_map(l);
            const auto found = find_degree2_decompositions(L.map, opts.policy);
            if (found.decompositions.size() != 3) fail("lambda = " + to_string(l) + ": " + std::to_string(found.decompositions.size()) + " classes");
            const auto ds = canonical_decompositions(L);
            for (const auto& d : found.decompositions) {
                const auto matches = std::count_if(ds.begin(), ds.end(), [&](const Decomposition& c) {
                    return are_equivalent_decompositions(c, d).has_value();
                });
                if (matches != 1) fail("lambda = " + to_string(l) + ": search result not matched to a canonical class");
            }
        }
        return std::string("3 classes per map, one per canonical decomposition");
    });
    run(report, "decomp.power_map", [&] {
        const auto found = find_degree2_decompositions(RatMap(Poly{0, 0, 0, 0, 1}), opts.policy);
        const Decomposition sq(RatMap(Poly{0, 0, 1}), RatMap(Poly{0, 0, 1}));
        for (const auto& d : found.decompositions)
            if (are_equivalent_decompositions(sq, d)) return std::string("z^4 = z^2 o z^2 found");
        fail("(z^2, z^2) not found");
    });
    run(report, "decomp.elementary_isospectral", [&] {
        SpectrumOptions so;
        so.policy = opts.policy;
        const auto L = legendre_map(lambdas.front());
        for (const auto& d : canonical_decompositions(L))
            if (!isospectral(elementary_transform(d), L.map, 2, 1e-6, so).isospectral) fail("transform not isospectral");
        return std::string("lambda = " + to_string(lambdas.front()) + ", s <= 2");
    });
}

void lattes_suite(VerifyReport& report, const VerifyOptions& opts) {
    Rng rng(opts.seed + 2);
    SpectrumOptions so;
    so.policy = opts.policy;
    run(report, "lattes.j_spot", [&] {
        if (legendre_j(Rational(2)) != 1728) fail("j(2) = " + to_string(legendre_j(Rational(2))));
        if (weierstrass_map(-1, 0).j != 1728 || weierstrass_map(0, 1).j != 0) fail("Weierstrass j");
        return std::string("j(2) = 1728");
    });
    run(report, "lattes.period1", [&] {
        const auto spec = spectrum(legendre_map(2).map, 1, so);
        const std::vector<Complex> expected{4, -2, -2, -2, -2};
        const double d = multiset_distance(spec.flattened(1), expected);
        if (d > 1e-8) fail("distance " + fmt(d));
        const Complex index = holomorphic_index_sum(spec);
        if (std::abs(index - 1.0) > 1e-5) fail("index sum " + fmt(index.real()));
        return std::string("{4, -2 x4}, index sum 1");
    });
    run(report, "lattes.family_isospectral", [&] {
        const auto base = spectrum(legendre_map(2).map, 2, so);
        double worst = 0;
        for (int n = 0; n < 10; ++n) {
            const Rational l = random_lambda(rng);
            const auto r = compare_spectra(base, spectrum(legendre_map(l).map, 2, so), 1e-8);
            if (!r.isospectral || !r.warnings.empty()) fail("lambda = " + to_string(l));
            for (const auto& [s, w] : r.worst_residual) worst = std::max(worst, w);
        }
        return "10 parameters, worst residual " + fmt(worst);
    });
    run(report, "lattes.weierstrass", [&] {
        if (!isospectral(weierstrass_map(-1, 0).map, legendre_map(2).map, 2, 1e-7, so).isospectral) fail("not isospectral");
        return std::string("a = -1, b = 0 matches lambda = 2 at s <= 2");
    });
    run(report, "lattes.postcritical", [&] {
        const auto pc = postcritical_set(legendre_map(2).map);
        const std::vector<PointP1> expected{Rational(0), Rational(1), Rational(2), PointP1::infinity()};
        if (!pc.closed || pc.points.size() != 4) fail("not a closed 4-point set");
        for (const auto& p : expected)
            if (std::find(pc.points.begin(), pc.points.end(), p) == pc.points.end()) fail("missing " + to_string(p));
        return std::string("{0, 1, 2, inf}");
    });
    run(report, "lattes.transform_j", [&] {
        double worst = 0;
        for (int n = 0; n < 10; ++n) {
            const auto L = legendre_map(random_lambda(rng));
            std::vector<Complex> recovered;
            for (const auto& d : canonical_decompositions(L)) {
                const Complex jp = recover_j(elementary_transform(d)).to_complex();
                const double r = opts.phi.normalized_residual(Complex(L.j.get_d()), jp);
                if (r > 1e-6) fail("lambda = " + to_string(L.lambda) + ": residual " + fmt(r));
                recovered.push_back(jp);
            }
            const double m = multiset_distance(recovered, expand(phi2_partners(Scalar(L.j), {}, opts.phi)));
            if (m > 1e-6) fail("lambda = " + to_string(L.lambda) + ": multiset distance " + fmt(m));
            worst = std::max(worst, m);
        }
        return "10 parameters, worst distance " + fmt(worst);
    });
}

void modular_suite(VerifyReport& report, const VerifyOptions& opts) {
    Rng rng(opts.seed + 3);
    const Phi2& phi = opts.phi;
    run(report, "modular.klein_identity", [&] {
        if (!verify_klein_identity(phi)) fail("numerator is not the zero polynomial");
        return std::string("numerator is identically zero");
    });
    run(report, "modular.spot_values", [&] {
        if (phi(Rational(1728), Rational(287496)) != 0) fail("Phi2(1728, 287496) != 0");
        if (phi(Rational(0), Rational(0)) != Rational(mpz_class("-157464000000000"))) fail("Phi2(0, 0)");
        if (!(klein_beta(Scalar(Rational(8))) == Scalar(Rational(1728)))) fail("beta(8)");
        if (!(klein_beta(Scalar(Rational(1, 8))) == Scalar(Rational(287496)))) fail("beta(1/8)");
        return std::string("Phi2(1728, 287496) = 0, beta(8) = 1728, beta(1/8) = 287496");
    });
    run(report, "modular.symmetry", [&] {
        for (int n = 0; n < 50; ++n) {
            const Rational x = random_rational(rng, 3000, 20), y = random_rational(rng, 3000, 20);
            if (phi(x, y) != phi(y, x)) fail("asymmetric at (" + to_string(x) + ", " + to_string(y) + ")");
        }
        return std::string("50 exact pairs");
    });
    run(report, "modular.dual_oracle", [&] {
        double worst = 0;
        for (int n = 0; n < 50; ++n) {
            const Scalar j(random_rational(rng, 2000000, 30));
            const double d = multiset_distance(expand(phi2_partners(j, {}, phi)), expand(klein_partners(j).partners));
            if (d > 1e-6) fail("j = " + to_string(j) + ": distance " + fmt(d));
            worst = std::max(worst, d);
        }
        return "50 values, worst distance " + fmt(worst);
    });
    run(report, "modular.orbit_growth", [&] {
        OrbitOptions oo;
        oo.policy = opts.policy;
        std::string detail;
        for (const Rational& j0 : {Rational(1728), Rational(0), legendre_j(Rational(7))}) {
            const auto g = orbit_bfs(Scalar(j0), 3, oo, phi);
            for (int d = 1; d <= 3; ++d)
                if (g.count_up_to(d) <= g.count_up_to(d - 1)) fail("j0 = " + to_string(j0) + ": no growth at depth " + std::to_string(d));
            double worst = 0;
            for (const auto& [u, v] : g.edges)
                worst = std::max(worst, phi.normalized_residual(g.nodes[u].j.to_complex(), g.nodes[v].j.to_complex()));
            if (worst > 1e-6) fail("j0 = " + to_string(j0) + ": edge residual " + fmt(worst));
            detail += (detail.empty() ? "" : "; ") + to_string(j0) + ": " + std::to_string(g.count_up_to(0)) + "," +
                      std::to_string(g.count_up_to(1)) + "," + std::to_string(g.count_up_to(2)) + "," +
                      std::to_string(g.count_up_to(3));
        }
        return detail;
    });
}

}  // namespace

VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts) {
    VerifyReport report;
    report.suite = suite;
    const bool all = suite == "all";
    if (std::find(verify_suites().begin(), verify_suites().end(), suite) == verify_suites().end())
        throw Error("unknown verify suite '" + suite + "'");
    if (all || suite == "lemma") lemma_suite(report, opts);
    if (all || suite == "decomp") decomp_suite(report, opts);
    if (all || suite == "lattes") lattes_suite(report, opts);
    if (all || suite == "modular") modular_suite(report, opts);
    return report;
}

}  // namespace recomp
