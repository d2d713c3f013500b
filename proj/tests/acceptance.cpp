// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>

#include "recomp/decomp.hpp"
#include "recomp/lattes.hpp"
#include "recomp/modular.hpp"
#include "recomp/sampling.hpp"
#include "recomp/spectrum.hpp"
#include "recomp/verify.hpp"

using namespace recomp;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) {
        out.ok = false;
        char note[48];
        std::snprintf(note, sizeof note, " (over the %g s budget)", budget_s);
        out.detail += note;
    }
    if (!out.ok) ++failures;
    std::printf("[%s] %2d %s: %s [%.3f s]\n", out.ok ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

Complex as_complex(const Rational& r) { return {static_cast<double>(to_long_double(r)), 0.0}; }

std::vector<Rational> lambdas(std::uint64_t seed, int n) {
    Rng rng(seed);
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < n) {
        const Rational l = random_lambda(rng);
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
    return out;
}

}  // namespace

int main() {
    const auto family = lambdas(2024, 20);

    criterion(1, "canonical decompositions compose exactly to L_lambda", 1.0, [&] {
        for (const auto& l : family) {
            const auto L = legendre_map(l);
            for (const auto& d : canonical_decompositions(L))
                if (!equals_exact(compose(d.U(), d.V()), L.map)) return Outcome{false, "lambda = " + to_string(l)};
        }
        return Outcome{true, "20 lambda x 3 decompositions"};
    });

    criterion(2, "pairwise inequivalent, infinity blocks {0,inf} {1,inf} {lambda,inf}", 0, [&] {
        for (const auto& l : family) {
            const auto cd = canonical_decompositions(legendre_map(l));
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t k = i + 1; k < 3; ++k)
                    if (are_equivalent_decompositions(cd[i], cd[k])) return Outcome{false, "equivalent pair at lambda = " + to_string(l)};
            const std::array<Rational, 3> partner{0, 1, l};
            for (std::size_t i = 0; i < 3; ++i) {
                const auto b = blocks(cd[i], PointP1::infinity());
                std::set<std::string> got;
                for (std::size_t k : b.blocks[block_containing(b, PointP1::infinity())]) got.insert(to_string(b.fiber[k]));
                if (got != std::set<std::string>{"inf", to_string(partner[i])})
                    return Outcome{false, "block " + std::to_string(i + 1) + " at lambda = " + to_string(l)};
            }
        }
        return Outcome{true, "20 lambda"};
    });

    criterion(3, "U o V and V o U are isospectral to period 2", 30.0, [&] {
        Rng rng(7);
        double worst = 0;
        for (int n = 0; n < 100; ++n) {
            const RatMap U = random_map(rng, 2 + static_cast<int>(rng() % 2));
            const RatMap V = random_map(rng, 2 + static_cast<int>(rng() % 2));
            const auto r = isospectral(compose(U, V), compose(V, U), 2, 1e-6);
            for (const auto& [s, w] : r.worst_residual) worst = std::max(worst, w);
            if (!r.isospectral) return Outcome{false, "pair " + std::to_string(n) + ", U = " + to_string(U) + ", V = " + to_string(V)};
        }
        return Outcome{true, "100 pairs, worst residual " + fmt(worst)};
    });

    criterion(4, "Lattes spectra agree across lambda; period 1 is {4, -2 x4}; index sum 1", 0, [&] {
        const std::vector<Complex> p1{4.0, -2.0, -2.0, -2.0, -2.0};
        std::optional<MultiplierSpectrum> base;
        double worst = 0, worst_index = 0;
        for (int n = 0; n < 10; ++n) {
            const auto spec = spectrum(legendre_map(family[static_cast<std::size_t>(n)]).map, 2);
            if (multiset_distance(spec.flattened(1), p1) > 1e-8) return Outcome{false, "period 1 at lambda = " + to_string(family[static_cast<std::size_t>(n)])};
            worst_index = std::max(worst_index, std::abs(holomorphic_index_sum(spec) - 1.0));
            if (!base) {
                base = spec;
                continue;
            }
            for (int s = 1; s <= 2; ++s) worst = std::max(worst, multiset_distance(spec.flattened(s), base->flattened(s)));
        }
        const bool ok = worst <= 1e-8 && worst_index <= 1e-5;
        return Outcome{ok, "10 lambda, spread " + fmt(worst) + ", index error " + fmt(worst_index)};
    });

    criterion(5, "Klein identity holds exactly and every single-coefficient mutation breaks it", 0, [&] {
        if (!verify_klein_identity()) return Outcome{false, "identity fails for the standard table"};
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) {
                Phi2 phi;
                phi.set_coeff(i, k, phi.coeff(i, k) + 1);
                if (verify_klein_identity(phi)) return Outcome{false, "mutation of c[" + std::to_string(i) + "][" + std::to_string(k) + "] undetected"};
            }
        return Outcome{true, "16 mutations detected"};
    });

    criterion(6, "j of elementary transforms is a Phi2 partner of j", 0, [&] {
        double worst_match = 0, worst_res = 0;
        for (int n = 0; n < 10; ++n) {
            const auto L = legendre_map(family[static_cast<std::size_t>(n)]);
            const auto partners = phi2_partners(Scalar(L.j));
            for (const auto& d : canonical_decompositions(L)) {
                const Complex j2 = recover_j(elementary_transform(d)).to_complex();
                double best = std::numeric_limits<double>::infinity();
                for (const auto& p : partners) best = std::min(best, relative_distance(p.value.to_complex(), j2));
                worst_match = std::max(worst_match, best);
                worst_res = std::max(worst_res, Phi2::standard().normalized_residual(as_complex(L.j), j2));
            }
        }
        return Outcome{worst_match <= 1e-6 && worst_res <= 1e-6, "30 transforms, match " + fmt(worst_match) + ", residual " + fmt(worst_res)};
    });

    criterion(7, "orbits from 1728 and 0 grow strictly to depth 3 with sound edges", 5.0, [&] {
        std::string counts;
        double worst = 0;
        for (const Rational& j0 : {Rational(1728), Rational(0)}) {
            const auto g = orbit_bfs(Scalar(j0), 3);
            counts += (counts.empty() ? "" : "; ") + to_string(j0) + ":";
            for (int d = 0; d <= 3; ++d) {
                counts += " " + std::to_string(g.count_up_to(d));
                if (d > 0 && g.count_up_to(d) <= g.count_up_to(d - 1)) return Outcome{false, "no growth at depth " + std::to_string(d)};
            }
            for (const auto& [a, b] : g.edges)
                worst = std::max(worst, Phi2::standard().normalized_residual(g.nodes[a].j.to_complex(), g.nodes[b].j.to_complex()));
        }
        return Outcome{worst <= 1e-6, "counts " + counts + ", edge residual " + fmt(worst)};
    });

    criterion(8, "dual partner oracles agree", 0, [&] {
        Rng rng(8);
        double worst = 0;
        for (int n = 0; n < 50;) {
            const Rational j = random_rational(rng, 2000000, 97);
            if (j == 0) continue;
            ++n;
            std::vector<Complex> a, b;
            for (const auto& p : phi2_partners(Scalar(j))) a.insert(a.end(), static_cast<std::size_t>(p.multiplicity), p.value.to_complex());
            for (const auto& p : klein_partners(Scalar(j)).partners)
                b.insert(b.end(), static_cast<std::size_t>(p.multiplicity), p.value.to_complex());
            worst = std::max(worst, multiset_distance(a, b));
        }
        return Outcome{worst <= 1e-6, "50 j, worst " + fmt(worst)};
    });

    criterion(9, "semiconjugacies A o U = U o B and V o A = B o V hold exactly", 0, [&] {
        int n = 0;
        for (const auto& l : family)
            for (const auto& d : canonical_decompositions(legendre_map(l))) {
                const RatMap A = d.composed(), B = elementary_transform(d);
                if (!semiconjugacy_check(A, B, d.U()) || !semiconjugacy_check(B, A, d.V()))
                    return Outcome{false, "lambda = " + to_string(l)};
                ++n;
            }
        return Outcome{true, std::to_string(n) + " decompositions"};
    });

    criterion(10, "spot values", 0, [&] {
        const bool j2 = legendre_j(Rational(2)) == 1728;
        const bool phi = Phi2::standard()(Rational(1728), Rational(287496)) == 0;
        const bool b8 = klein_beta(Scalar(Rational(8))) == Scalar(Rational(1728));
        const bool b18 = klein_beta(Scalar(Rational(1, 8))) == Scalar(Rational(287496));
        std::string detail = std::string("j(2) = 1728 ") + (j2 ? "ok" : "wrong") + ", Phi2(1728, 287496) = 0 " + (phi ? "ok" : "wrong") +
                             ", beta(8) = 1728 " + (b8 ? "ok" : "wrong") + ", beta(1/8) = 287496 " + (b18 ? "ok" : "wrong");
        return Outcome{j2 && phi && b8 && b18, detail};
    });

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
