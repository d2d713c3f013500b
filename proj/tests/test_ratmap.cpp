#include "doctest.h"

#include "recomp/lattes.hpp"
#include "recomp/ratmap.hpp"
#include "recomp/sampling.hpp"

using namespace recomp;

namespace {

RatMap L2() { return RatMap(Poly{-2, 0, 1}.pow(2), Poly{0, 4} * Poly{-1, 1} * Poly{-2, 1}); }

}  // namespace

TEST_CASE("ratmap_new normalizes") {
    CHECK(RatMap(Poly{-1, 0, 1}, Poly{-1, 1}) == RatMap(Poly{1, 1}));
    CHECK(L2().degree() == 4);
    CHECK(RatMap(Poly{0, 2}, Poly{2}) == RatMap::identity());
    CHECK_THROWS_WITH_AS(RatMap(Poly{}, Poly{}), "indeterminate map", Error);
    CHECK_THROWS_AS(RatMap(Poly{1}, Poly{}), Error);
    // den monic, scale carried by the numerator
    const RatMap f(Poly{0, 6}, Poly{4, 2});
    CHECK(f.den() == Poly{2, 1});
    CHECK(f.num() == Poly{0, 3});
    CHECK(RatMap(Poly{}, Poly{3, 1}).degree() == 0);
}

TEST_CASE("compose") {
    CHECK(compose(RatMap(Poly{0, 0, 1}), RatMap(Poly{1, 1})) == RatMap(Poly{1, 2, 1}));
    const RatMap F = L2();
    CHECK(compose(F, RatMap::identity()) == F);
    CHECK(compose(RatMap::identity(), F) == F);
    // C1 o D1 for lambda = 2, written out independently of the lattes module
    const RatMap C1(Poly{-8, 0, 1}, Poly{-12, 4});
    const RatMap D1(Poly{2, 0, 1}, Poly{0, 1});
    CHECK(equals_exact(compose(C1, D1), F));
    CHECK(compose(C1, D1) == F);
}

TEST_CASE("eval_p1") {
    const RatMap F = L2();
    CHECK(F(PointP1(Rational(3))) == PointP1(Rational(49, 24)));
    CHECK(F(PointP1::infinity()).is_infinity());
    CHECK(F(PointP1(Rational(0))).is_infinity());
    CHECK(RatMap(Poly{1}, Poly{0, 1})(PointP1::infinity()) == PointP1(Rational(0)));
    CHECK(RatMap(Poly{0, 3}, Poly{1, 2})(PointP1::infinity()) == PointP1(Rational(3, 2)));
    // numeric point near a pole goes to infinity rather than overflowing
    CHECK(RatMap(Poly{1}, Poly{0, 1})(PointP1(Complex(1e-320, 0))).is_infinity());
    const PointP1 v = F(PointP1(Complex(3, 0)));
    CHECK(v.value().to_complex().real() == doctest::Approx(49.0 / 24));
}

TEST_CASE("derivative") {
    CHECK(RatMap(Poly{0, 0, 1}).derivative() == RatMap(Poly{0, 2}));
    CHECK(RatMap(Poly{1}, Poly{0, 1}).derivative() == RatMap(Poly{-1}, Poly{0, 0, 1}));
    // complex-step oracle on the L_2 formula
    const double h = 1e-30;
    const Complex z(5, h);
    const Complex w = (z * z - 2.0) * (z * z - 2.0) / (4.0 * z * (z - 1.0) * (z - 2.0));
    const double oracle = w.imag() / h;
    const Rational exact = L2().derivative()(PointP1(Rational(5))).exact();
    CHECK(std::abs(to_long_double(exact) - oracle) <= 1e-8 * std::max(1.0, std::abs(oracle)));
}

TEST_CASE("conjugate") {
    const Moebius shift(1, 1, 0, 1);
    CHECK(conjugate(RatMap(Poly{0, 0, 1}), shift) == RatMap(Poly{0, 2, 1}));
    const RatMap F = L2();
    CHECK(conjugate(F, Moebius::identity()) == F);
    const Moebius mu(2, -1, 1, 3);
    CHECK(conjugate(conjugate(F, mu), mu.inverse()) == F);
}

TEST_CASE("equals_exact") {
    CHECK(equals_exact(RatMap(Poly{-1, 0, 1}, Poly{-1, 1}), RatMap(Poly{1, 1})));
    CHECK_FALSE(equals_exact(RatMap(Poly{0, 0, 1}), RatMap(Poly{0, 0, 0, 1})));
    const auto L = legendre_map(5);
    const RatMap C2(Poly{1, 2, 1}, Poly{-16, 4});
    const RatMap D2(Poly{-4, -1, 1}, Poly{-1, 1});
    CHECK(equals_exact(compose(C2, D2), L.map));
}

TEST_CASE("Moebius") {
    CHECK_THROWS_AS(Moebius(1, 2, 2, 4), Error);
    const Moebius m(2, 4, 0, 2);
    CHECK(m == Moebius(1, 2, 0, 1));
    CHECK(m * m.inverse() == Moebius::identity());
    CHECK(m(PointP1::infinity()).is_infinity());
    CHECK(Moebius(0, 1, 1, 0)(PointP1(Rational(0))).is_infinity());
}

TEST_CASE("moebius_through") {
    const std::array<PointP1, 3> std_frame{Rational(0), Rational(1), PointP1::infinity()};
    CHECK(moebius_through(std_frame, std_frame) == Moebius::identity());
    CHECK(moebius_through(std_frame, {PointP1::infinity(), Rational(1), Rational(0)}) == Moebius(0, 1, 1, 0));
    CHECK(moebius_through(std_frame, {Rational(1), Rational(2), PointP1::infinity()}) == Moebius(1, 1, 0, 1));
    CHECK_THROWS_AS(moebius_through({Rational(0), Rational(0), Rational(1)}, std_frame), Error);
    CHECK_THROWS_AS(moebius_through(std_frame, {Rational(3), Rational(3), Rational(1)}), Error);
}

TEST_CASE("chordal distance") {
    CHECK(chordal_distance(PointP1(Rational(0)), PointP1::infinity()) == doctest::Approx(2));
    CHECK(chordal_distance(PointP1(Rational(1)), PointP1(Rational(-1))) == doctest::Approx(2));
    CHECK(chordal_distance(PointP1(Rational(7)), PointP1(Rational(7))) == 0);
    CHECK(to_string(PointP1::infinity()) == "inf");
}

TEST_CASE("property: composition is associative") {
    Rng rng(11);
    for (int n = 0; n < 30; ++n) {
        const RatMap f = random_map(rng, 1 + static_cast<int>(rng() % 3));
        const RatMap g = random_map(rng, 1 + static_cast<int>(rng() % 3));
        const RatMap h = random_map(rng, 1 + static_cast<int>(rng() % 2));
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("property: degree law") {
    Rng rng(12);
    for (int n = 0; n < 50; ++n) {
        const RatMap f = random_map(rng, 1 + static_cast<int>(rng() % 3));
        const RatMap g = random_map(rng, 1 + static_cast<int>(rng() % 3));
        CHECK(compose(f, g).degree() == f.degree() * g.degree());
    }
}

TEST_CASE("property: conjugation is inverted by the inverse map") {
    Rng rng(13);
    for (int n = 0; n < 50; ++n) {
        const RatMap f = random_map(rng, 2 + static_cast<int>(rng() % 2));
        const Moebius mu = random_moebius(rng);
        CHECK(conjugate(conjugate(f, mu), mu.inverse()) == f);
    }
}

TEST_CASE("property: evaluation commutes with conjugation") {
    Rng rng(14);
    for (int n = 0; n < 100; ++n) {
        const RatMap f = random_map(rng, 2 + static_cast<int>(rng() % 2));
        const Moebius mu = random_moebius(rng);
        const PointP1 p(random_rational(rng, 20, 9));
        // conj(F, mu)(mu^-1 p) = mu^-1(F(p)), including poles and infinity
        CHECK(conjugate(f, mu)(mu.inverse()(p)) == mu.inverse()(f(p)));
    }
}

TEST_CASE("property: structural and cross-multiplied equality agree") {
    Rng rng(15);
    for (int n = 0; n < 50; ++n) {
        const RatMap f = random_map(rng, 2);
        const RatMap g = rng() % 2 ? f : random_map(rng, 2);
        CHECK((f == g) == equals_exact(f, g));
    }
}
