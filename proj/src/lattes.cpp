#include "recomp/lattes.hpp"

#include <algorithm>
#include <cmath>

#include "recomp/roots.hpp"

namespace recomp {

Rational legendre_j(const Rational& l) {
    if (l == 0 || l == 1) throw Error("degenerate Legendre parameter");
    const Rational q = l * l - l + 1;
    Rational j = 256 * q * q * q / (l * l * (l - 1) * (l - 1));
    j.canonicalize();
    return j;
}

Complex legendre_j(Complex l) {
    if (l == Complex(0) || l == Complex(1)) throw Error("degenerate Legendre parameter");
    const Complex q = l * l - l + 1.0;
    return 256.0 * q * q * q / (l * l * (l - 1.0) * (l - 1.0));
}

LegendreLattes legendre_map(const Rational& lambda) {
    if (lambda == 0 || lambda == 1) throw Error("degenerate Legendre parameter");
    const Poly num = Poly(std::vector<Rational>{-lambda, 0, 1}).pow(2);
    const Poly den = Poly(std::vector<Rational>{0, 4}) * Poly{-1, 1} * Poly(std::vector<Rational>{-lambda, 1});
    return {lambda, RatMap(num, den), legendre_j(lambda)};
}

WeierstrassLattes weierstrass_map(const Rational& a, const Rational& b) {
    const Rational disc = 4 * a * a * a + 27 * b * b;
    if (disc == 0) throw Error("singular curve (4a^3 + 27b^2 = 0)");
    const Poly num(std::vector<Rational>{a * a, -8 * b, -2 * a, 0, 1});
    const Poly den(std::vector<Rational>{4 * b, 4 * a, 0, 4});
    Rational j = 1728 * 4 * a * a * a / disc;
    j.canonicalize();
    return {a, b, RatMap(num, den), j};
}

std::array<Decomposition, 3> canonical_decompositions(const LegendreLattes& L) {
    const Rational& l = L.lambda;
    auto linear = [](Rational c0, Rational c1) { return Poly(std::vector<Rational>{std::move(c0), std::move(c1)}); };
    // D_i(z) = z + c / (z - t) for the 2-torsion x-coordinate t in {0, 1, lambda}
    auto translate = [&](const Rational& t, const Rational& c) {
        return RatMap(Poly(std::vector<Rational>{c, -t, 1}), linear(-t, 1));
    };
    std::array<Decomposition, 3> out{
        Decomposition(RatMap(Poly(std::vector<Rational>{-4 * l, 0, 1}), linear(-4 * (l + 1), 4)), translate(0, l)),
        Decomposition(RatMap(Poly{1, 2, 1}, linear(4 - 4 * l, 4)), translate(1, 1 - l)),
        Decomposition(RatMap(Poly(std::vector<Rational>{l * l, 2 * l, 1}), linear(4 * l - 4, 4)), translate(l, l * l - l)),
    };
    for (const auto& d : out)
        if (!equals_exact(d.composed(), L.map)) throw Error("canonical decomposition does not compose to L");
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t k = i + 1; k < out.size(); ++k)
            if (are_equivalent_decompositions(out[i], out[k])) throw Error("canonical decompositions are equivalent");
    return out;
}

namespace {

bool clustered(const PointP1& a, const PointP1& b, double tol) {
    if (a.is_exact() && b.is_exact()) return a == b;
    if (a.is_infinity() || b.is_infinity()) return chordal_distance(a, b) <= tol;
    return relative_distance(a.value().to_complex(), b.value().to_complex()) <= tol;
}

bool too_large(const PointP1& p) {
    if (p.is_infinity() || !p.value().is_exact()) return false;
    const Rational& q = p.exact();
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2) > 4096;
}

/// True when q has fewer than deg F distinct preimages.
bool is_critical_value(const RatMap& F, const PointP1& q) {
    const Poly p = q.is_infinity() ? F.den() : F.num() - q.exact() * F.den();
    if (p.is_zero()) return true;
    if (F.degree() - p.degree() >= 2) return true;
    return p.degree() >= 1 && poly_gcd(p, p.derivative()).degree() > 0;
}

/// Replaces a numeric critical value by an exact one when a nearby
/// small-denominator rational (or infinity) is provably a critical value.
PointP1 snap_critical_value(const RatMap& F, const PointP1& v) {
    if (v.is_exact()) return v;
    if (chordal_distance(v, PointP1::infinity()) <= 1e-6 && is_critical_value(F, PointP1::infinity()))
        return PointP1::infinity();
    const Complex c = v.value().to_complex();
    if (std::abs(c.imag()) > 1e-7 * std::max(1.0, std::abs(c))) return v;
    for (const Rational& q : convergents(c.real(), mpz_class(1000000))) {
        if (relative_distance(Complex(static_cast<double>(to_long_double(q)), 0), c) > 1e-7) continue;
        if (is_critical_value(F, PointP1(q))) return PointP1(q);
    }
    return v;
}

}  // namespace

PostcriticalSet postcritical_set(const RatMap& F, int max_iter, double cluster_tol) {
    if (F.degree() < 2) throw Error("postcritical_set: degree must be at least 2");
    const Poly w = F.num().derivative() * F.den() - F.num() * F.den().derivative();
    std::vector<PointP1> critical;
    if (w.degree() >= 1)
        for (const Root& r : poly_roots(w)) {
            if (auto q = recognize_rational_root(w, r.value)) critical.emplace_back(*q);
            else critical.emplace_back(r.value);
        }
    if (2 * F.degree() - 2 - w.degree() > 0) critical.push_back(PointP1::infinity());

    PostcriticalSet out;
    std::vector<PointP1> frontier;
    auto absorb = [&](PointP1 p, std::vector<PointP1>& into) {
        // a numeric image of a pole is a huge finite value
        if (!p.is_exact() && chordal_distance(p, PointP1::infinity()) <= cluster_tol) p = PointP1::infinity();
        for (const auto& q : out.points)
            if (clustered(p, q, cluster_tol)) return;
        out.points.push_back(p);
        into.push_back(p);
    };
    for (const auto& c : critical) absorb(snap_critical_value(F, F(c)), frontier);
    for (int it = 0; it < max_iter; ++it) {
        std::vector<PointP1> next;
        for (const auto& p : frontier) {
            const PointP1 image = F(p);
            if (too_large(image)) return out;
            absorb(image, next);
        }
        if (next.empty()) {
            out.closed = true;
            return out;
        }
        frontier = std::move(next);
    }
    return out;
}

Scalar j_from_quadruple(const std::array<PointP1, 4>& q) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = i + 1; k < 4; ++k)
            if (q[i].is_exact() && q[k].is_exact() ? q[i] == q[k] : chordal_distance(q[i], q[k]) <= 1e-12)
                throw Error("j_from_quadruple: repeated points");
    // lambda = [q4, q1][q2, q3] / ([q4, q3][q2, q1]) sends q1, q2, q3 to 0, 1, infinity
    if (std::all_of(q.begin(), q.end(), [](const PointP1& p) { return p.is_exact(); })) {
        std::array<std::array<Rational, 2>, 4> h;
        for (std::size_t i = 0; i < 4; ++i) h[i] = q[i].is_infinity() ? std::array<Rational, 2>{1, 0} : std::array<Rational, 2>{q[i].exact(), 1};
        auto det = [&](std::size_t a, std::size_t b) { return Rational(h[a][0] * h[b][1] - h[a][1] * h[b][0]); };
        Rational lambda = det(3, 0) * det(1, 2) / (det(3, 2) * det(1, 0));
        lambda.canonicalize();
        return Scalar(legendre_j(lambda));
    }
    std::array<std::array<ComplexLD, 2>, 4> h;
    for (std::size_t i = 0; i < 4; ++i) h[i] = q[i].homogeneous();
    auto det = [&](std::size_t a, std::size_t b) { return h[a][0] * h[b][1] - h[a][1] * h[b][0]; };
    const ComplexLD lambda = det(3, 0) * det(1, 2) / (det(3, 2) * det(1, 0));
    return Scalar(legendre_j(Complex(static_cast<double>(lambda.real()), static_cast<double>(lambda.imag()))));
}

Scalar recover_j(const RatMap& F) {
    const PostcriticalSet pc = postcritical_set(F);
    if (!pc.closed || pc.points.size() != 4) throw Error("not Lattès-like");
    return j_from_quadruple({pc.points[0], pc.points[1], pc.points[2], pc.points[3]});
}

}  // namespace recomp
