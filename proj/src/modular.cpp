#include "recomp/modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace recomp {

Phi2::Phi2() {
    for (auto& row : c_)
        for (auto& v : row) v = 0;
    c_[3][0] = c_[0][3] = 1;
    c_[2][2] = -1;
    c_[2][1] = c_[1][2] = 1488;
    c_[1][1] = 40773375;
    c_[2][0] = c_[0][2] = -162000;
    c_[1][0] = c_[0][1] = mpz_class("8748000000");
    c_[0][0] = mpz_class("-157464000000000");
}

const Phi2& Phi2::standard() {
    static const Phi2 phi;
    return phi;
}

Poly Phi2::in_y(const Rational& x) const {
    std::vector<Rational> ys(4, Rational(0));
    for (std::size_t k = 0; k < 4; ++k) {
        Rational acc = 0;
        for (std::size_t i = 4; i-- > 0;) acc = acc * x + Rational(c_[i][k]);
        ys[k] = acc;
    }
    return Poly(std::move(ys));
}

std::array<ComplexLD, 4> Phi2::in_y(ComplexLD x) const {
    std::array<ComplexLD, 4> ys{};
    for (std::size_t k = 0; k < 4; ++k) {
        ComplexLD acc = 0;
        for (std::size_t i = 4; i-- > 0;) acc = acc * x + to_long_double(Rational(c_[i][k]));
        ys[k] = acc;
    }
    return ys;
}

Rational Phi2::operator()(const Rational& x, const Rational& y) const { return in_y(x)(y); }

ComplexLD Phi2::operator()(ComplexLD x, ComplexLD y) const {
    const auto ys = in_y(x);
    ComplexLD acc = 0;
    for (std::size_t k = 4; k-- > 0;) acc = acc * y + ys[k];
    return acc;
}

double Phi2::normalized_residual(Complex x, Complex y) const {
    const ComplexLD xl(x.real(), x.imag()), yl(y.real(), y.imag());
    const long double ax = std::abs(xl), ay = std::abs(yl);
    return static_cast<double>(std::abs((*this)(xl, yl)) / (1 + ax * ax * ax + ay * ay * ay));
}

Scalar phi2_eval(const Scalar& x, const Scalar& y, const Phi2& phi) {
    if (x.is_exact() && y.is_exact()) return Scalar(phi(x.exact(), y.exact()));
    const ComplexLD v = phi(x.to_complex_ld(), y.to_complex_ld());
    return Scalar(Complex(static_cast<double>(v.real()), static_cast<double>(v.imag())));
}

namespace {

std::vector<Partner> exact_roots(const Poly& p, const RootOptions& opts) {
    std::vector<Partner> out;
    for (const Root& r : poly_roots(p, opts)) {
        if (auto q = recognize_rational_root(p, r.value)) out.push_back({Scalar(*q), r.multiplicity});
        else out.push_back({Scalar(r.value), r.multiplicity});
    }
    return out;
}

std::vector<Partner> numeric_roots(std::span<const ComplexLD> coeffs, const RootOptions& opts) {
    std::vector<Partner> out;
    for (const Complex& r : complex_poly_roots(coeffs, opts)) out.push_back({Scalar(r), 1});
    return out;
}

Complex lowered(ComplexLD z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

}  // namespace

std::vector<Partner> phi2_partners(const Scalar& j, const RootOptions& opts, const Phi2& phi) {
    if (j.is_exact()) return exact_roots(phi.in_y(j.exact()), opts);
    const auto c = phi.in_y(j.to_complex_ld());
    return numeric_roots(c, opts);
}

Scalar klein_beta(const Scalar& t) {
    if (t.is_exact()) {
        const Rational& x = t.exact();
        if (x == 0) throw Error("klein_beta: pole at t = 0");
        const Rational s = x + 4;
        return Scalar(Rational(64 * s * s * s / (x * x)));
    }
    const ComplexLD x = t.to_complex_ld();
    if (x == ComplexLD(0)) throw Error("klein_beta: pole at t = 0");
    const ComplexLD s = x + 4.0L;
    return Scalar(lowered(64.0L * s * s * s / (x * x)));
}

std::vector<Partner> beta_preimages(const Scalar& j, const RootOptions& opts) {
    // 64 t^3 + (768 - j) t^2 + 3072 t + 4096
    if (j.is_exact()) return exact_roots(Poly(std::vector<Rational>{4096, 3072, 768 - j.exact(), 64}), opts);
    const ComplexLD jl = j.to_complex_ld();
    const std::array<ComplexLD, 4> c{4096.0L, 3072.0L, 768.0L - jl, 64.0L};
    return numeric_roots(c, opts);
}

KleinPartners klein_partners(const Scalar& j, const RootOptions& opts) {
    KleinPartners out;
    for (const Partner& t : beta_preimages(j, opts)) {
        const bool zero = t.value.is_exact() ? t.value.exact() == 0 : std::abs(t.value.to_complex()) == 0.0;
        if (zero) {
            out.warnings.push_back("preimage t = 0 skipped");
            continue;
        }
        Scalar inv = t.value.is_exact() ? Scalar(Rational(1 / t.value.exact())) : Scalar(1.0 / t.value.to_complex());
        out.partners.push_back({klein_beta(inv), t.multiplicity});
    }
    return out;
}

Poly klein_identity_numerator(const Phi2& phi) {
    // x = X / t^2, y = Y / t with X = 64 (t + 4)^3, Y = 64 (1 + 4t)^3
    const Poly X = Rational(64) * Poly{4, 1}.pow(3);
    const Poly Y = Rational(64) * Poly{1, 4}.pow(3);
    int e = 0;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            if (phi.coeff(i, k) != 0) e = std::max(e, 2 * i + k);
    Poly sum;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (phi.coeff(i, k) == 0) continue;
            const auto shift = static_cast<std::size_t>(e - 2 * i - k);
            sum += Poly::monomial(Rational(phi.coeff(i, k)), shift) * X.pow(static_cast<unsigned>(i)) *
                   Y.pow(static_cast<unsigned>(k));
        }
    return sum;
}

bool verify_klein_identity(const Phi2& phi) { return klein_identity_numerator(phi).is_zero(); }

std::size_t ModularOrbitGraph::count_up_to(int depth) const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [depth](const OrbitNode& n) { return n.depth <= depth; }));
}

namespace {

double node_distance(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.exact() == b.exact() ? 0.0 : std::numeric_limits<double>::infinity();
    return relative_distance(a.to_complex(), b.to_complex());
}

bool partner_less(const Partner& a, const Partner& b) {
    const Complex x = a.value.to_complex(), y = b.value.to_complex();
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
}

}  // namespace

ModularOrbitGraph orbit_bfs(const Scalar& j0, int depth, const OrbitOptions& opts, const Phi2& phi) {
    if (depth < 0) throw Error("orbit_bfs: depth must be non-negative");
    ModularOrbitGraph g;
    g.dedup_tol = opts.dedup_tol;
    g.nodes.push_back({j0, 0, {}});
    std::vector<std::size_t> frontier{0};
    RootOptions inner = opts.roots;
    if (opts.policy == ExecPolicy::parallel) inner.policy = ExecPolicy::serial;
    for (int level = 1; level <= depth && !frontier.empty(); ++level) {
        std::vector<std::vector<Partner>> partners(frontier.size());
        for_each_index(frontier.size(), opts.policy, [&](std::size_t i) {
            partners[i] = phi2_partners(g.nodes[frontier[i]].j, inner, phi);
            std::sort(partners[i].begin(), partners[i].end(), partner_less);
        });
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            const std::size_t u = frontier[i];
            for (const Partner& p : partners[i]) {
                std::size_t match = g.nodes.size();
                double nearest = std::numeric_limits<double>::infinity();
                for (std::size_t v = 0; v < g.nodes.size(); ++v) {
                    const double dist = node_distance(p.value, g.nodes[v].j);
                    if (dist <= opts.dedup_tol) {
                        match = v;
                        break;
                    }
                    nearest = std::min(nearest, dist);
                }
                if (match == g.nodes.size()) {
                    OrbitNode node{p.value, level, {}};
                    if (nearest <= 10 * opts.dedup_tol)
                        node.warnings.push_back("near-collision with an existing node (relative distance " +
                                                std::to_string(nearest) + ")");
                    g.nodes.push_back(std::move(node));
                    next.push_back(match);
                }
                const auto edge = std::minmax(u, match);
                if (std::find(g.edges.begin(), g.edges.end(), std::pair(edge.first, edge.second)) == g.edges.end())
                    g.edges.emplace_back(edge.first, edge.second);
            }
        }
        frontier = std::move(next);
    }
    return g;
}

}  // namespace recomp
