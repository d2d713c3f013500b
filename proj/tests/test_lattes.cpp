#include "doctest.h"

#include <algorithm>
#include <set>

#include "recomp/lattes.hpp"
#include "recomp/modular.hpp"
#include "recomp/sampling.hpp"
#include "recomp/spectrum.hpp"

using namespace recomp;

namespace {

const RatMap square(Poly{0, 0, 1});

std::set<std::string> printed(const std::vector<PointP1>& pts) {
    std::set<std::string> out;
    for (const auto& p : pts) out.insert(to_string(p));
    return out;
}

// sorted multiset comparison after rounding to the expected values
bool matches_multiset(std::vector<Complex> got, std::vector<Complex> want, double tol) {
    if (got.size() != want.size()) return false;
    for (const Complex& w : want) {
        auto it = std::min_element(got.begin(), got.end(), [&](Complex a, Complex b) { return std::abs(a - w) < std::abs(b - w); });
        if (std::abs(*it - w) > tol) return false;
        got.erase(it);
    }
    return true;
}

}  // namespace

TEST_CASE("legendre_j") {
    CHECK(legendre_j(Rational(2)) == 1728);
    CHECK(legendre_j(Rational(-1)) == 1728);
    CHECK(legendre_j(Rational(1, 2)) == 1728);
    // 256 (9 - 3 + 1)^3 / (9 * 4) = 256 * 343 / 36
    CHECK(legendre_j(Rational(3)) == Rational(21952, 9));
    CHECK_THROWS_AS(legendre_j(Rational(0)), Error);
    CHECK_THROWS_AS(legendre_j(Rational(1)), Error);
    // lambda a primitive sixth root of unity gives j = 0
    CHECK(std::abs(legendre_j(Complex(0.5, std::sqrt(3.0) / 2))) < 1e-9);
    CHECK(std::abs(legendre_j(Complex(3, 0)) - 256.0 * 343 / 36) < 1e-9);
}

TEST_CASE("legendre_map") {
    const auto L = legendre_map(2);
    CHECK(L.j == 1728);
    CHECK(L.map.degree() == 4);
    CHECK_THROWS_WITH_AS(legendre_map(0), "degenerate Legendre parameter", Error);
    CHECK_THROWS_WITH_AS(legendre_map(1), "degenerate Legendre parameter", Error);
}

TEST_CASE("Legendre map is the x-coordinate of doubling") {
    // tangent-line doubling on y^2 = x^3 - (1 + l) x^2 + l x: x(2P) = m^2 + (1 + l) - 2x
    for (const Rational& lambda : {Rational(2), Rational(-3, 7), Rational(11, 4)}) {
        const auto L = legendre_map(lambda);
        const double l = static_cast<double>(to_long_double(lambda));
        for (const Complex x : {Complex(0.4, 0.3), Complex(-2.2, 1.0), Complex(3.7, -0.6)}) {
            const Complex fx = x * (x - 1.0) * (x - l);
            const Complex dfx = 3.0 * x * x - 2.0 * (1.0 + l) * x + l;
            const Complex m2 = dfx * dfx / (4.0 * fx);
            const Complex expected = m2 + (1.0 + l) - 2.0 * x;
            const Complex got = L.map(PointP1(x)).value().to_complex();
            CHECK(std::abs(got - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST_CASE("weierstrass_map") {
    const auto W = weierstrass_map(-1, 0);
    CHECK(W.j == 1728);
    CHECK(weierstrass_map(0, 1).j == 0);
    CHECK(W.map.degree() == 4);
    // 2-torsion x-coordinates go to infinity
    for (long x : {-1L, 0L, 1L}) CHECK(W.map(PointP1(Rational(x))).is_infinity());
    CHECK(W.map(PointP1::infinity()).is_infinity());
    CHECK_THROWS_AS(weierstrass_map(-3, 2), Error);
    CHECK_THROWS_AS(weierstrass_map(0, 0), Error);
    // same j as the Legendre form of the same curve: y^2 = x^3 - x = x (x - 1)(x + 1)
    CHECK(legendre_map(-1).j == W.j);
}

TEST_CASE("canonical decompositions") {
    for (const Rational& lambda : {Rational(2), Rational(5), Rational(-3, 7)}) {
        const auto L = legendre_map(lambda);
        const auto cd = canonical_decompositions(L);
        for (const auto& d : cd) {
            CHECK(d.composed() == L.map);
            CHECK(d.U().degree() == 2);
            CHECK(d.V().degree() == 2);
        }
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = i + 1; k < 3; ++k) CHECK_FALSE(are_equivalent_decompositions(cd[i], cd[k]).has_value());
    }
    // the first inner factor for lambda = 5 written by hand: (z^2 + 5) / z
    const auto cd = canonical_decompositions(legendre_map(5));
    CHECK(cd[0].V() == RatMap(Poly{5, 0, 1}, Poly{0, 1}));
}

TEST_CASE("postcritical_set") {
    auto pc = postcritical_set(square);
    CHECK(pc.closed);
    CHECK(printed(pc.points) == std::set<std::string>{"0", "inf"});

    pc = postcritical_set(legendre_map(2).map);
    CHECK(pc.closed);
    CHECK(printed(pc.points) == std::set<std::string>{"0", "1", "2", "inf"});

    // critical orbit of z^2 + 1 escapes and never closes up
    pc = postcritical_set(RatMap(Poly{1, 0, 1}));
    CHECK_FALSE(pc.closed);
    CHECK(pc.points.size() > 4);

    // z^2 - 2: 0 -> -2 -> 2 -> 2
    pc = postcritical_set(RatMap(Poly{-2, 0, 1}));
    CHECK(pc.closed);
    CHECK(printed(pc.points) == std::set<std::string>{"-2", "2", "inf"});
}

TEST_CASE("j_from_quadruple") {
    const Rational lambda(-3, 7);
    std::array<PointP1, 4> q{PointP1(Rational(0)), PointP1(Rational(1)), PointP1::infinity(), PointP1(lambda)};
    const Scalar j = j_from_quadruple(q);
    REQUIRE(j.is_exact());
    CHECK(j.exact() == legendre_j(lambda));
    std::sort(q.begin(), q.end(), [](const PointP1& a, const PointP1& b) { return to_string(a) < to_string(b); });
    do {
        CHECK(j_from_quadruple(q) == j);
    } while (std::next_permutation(q.begin(), q.end(), [](const PointP1& a, const PointP1& b) { return to_string(a) < to_string(b); }));

    const std::array<PointP1, 4> numeric{PointP1(Complex(0, 0)), PointP1(Complex(1, 0)), PointP1::infinity(), PointP1(Complex(-3.0 / 7, 0))};
    CHECK(std::abs(j_from_quadruple(numeric).to_complex() - static_cast<double>(to_long_double(j.exact()))) < 1e-6);
    CHECK_THROWS_AS(j_from_quadruple({PointP1(Rational(0)), PointP1(Rational(0)), PointP1(Rational(1)), PointP1::infinity()}), Error);
}

TEST_CASE("recover_j") {
    CHECK(recover_j(legendre_map(2).map) == Scalar(Rational(1728)));
    CHECK(recover_j(weierstrass_map(-1, 0).map).to_complex().real() == doctest::Approx(1728));
    CHECK_THROWS_WITH_AS(recover_j(compose(square, square)), "not Lattès-like", Error);
    CHECK_THROWS_AS(recover_j(RatMap(Poly{1, 0, 1})), Error);
}

TEST_CASE("transforms of Legendre maps are 2-isogenous") {
    for (const Rational& lambda : {Rational(2), Rational(5), Rational(-3, 7)}) {
        const auto L = legendre_map(lambda);
        for (const auto& d : canonical_decompositions(L)) {
            const Scalar j2 = recover_j(elementary_transform(d));
            const double res = Phi2::standard().normalized_residual(Complex(static_cast<double>(to_long_double(L.j)), 0), j2.to_complex());
            CHECK(res <= 1e-6);
        }
    }
}

TEST_CASE("property: Legendre j is invariant under the anharmonic group") {
    Rng rng(51);
    for (int n = 0; n < 50; ++n) {
        const Rational l = random_lambda(rng);
        const Rational j = legendre_j(l);
        CHECK(legendre_j(Rational(1 / l)) == j);
        CHECK(legendre_j(Rational(1 - l)) == j);
        CHECK(legendre_j(Rational(l / (l - 1))) == j);
        CHECK(legendre_j(Rational(1 / (1 - l))) == j);
        CHECK(legendre_j(Rational((l - 1) / l)) == j);
    }
}

TEST_CASE("property: recover_j inverts the Legendre family and survives conjugation") {
    Rng rng(52);
    for (int n = 0; n < 15; ++n) {
        const auto L = legendre_map(random_lambda(rng));
        CHECK(recover_j(L.map) == Scalar(L.j));
        const RatMap G = conjugate(L.map, random_moebius(rng));
        CHECK(recover_j(G) == Scalar(L.j));
    }
}

TEST_CASE("property: Lattes spectra do not depend on lambda") {
    // period 1: O and the x-coordinates of 3P = O; period 2: O, 3P = O (+4) and 5P = O (-4)
    const std::vector<Complex> p1{4.0, -2.0, -2.0, -2.0, -2.0};
    std::vector<Complex> p2{16.0, 4.0, 4.0, 4.0, 4.0};
    p2.insert(p2.end(), 12, Complex(-4.0));
    Rng rng(53);
    for (int n = 0; n < 20; ++n) {
        const auto spec = spectrum(legendre_map(random_lambda(rng)).map, 2);
        CHECK(matches_multiset(spec.flattened(1), p1, 1e-8));
        CHECK(matches_multiset(spec.flattened(2), p2, 1e-6));
        CHECK(std::abs(holomorphic_index_sum(spec) - 1.0) < 1e-5);
    }
}
