#include "doctest.h"

#include <random>

#include "recomp/roots.hpp"

using namespace recomp;

namespace {

std::mt19937_64 rng(20240611);

Poly random_poly(int max_degree, long bound = 6) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    return Poly(std::move(c));
}

Poly nonzero_random_poly(int max_degree) {
    for (;;) {
        Poly p = random_poly(max_degree);
        if (!p.is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5e3") == -1500);
    CHECK(parse_rational("2e-2") == Rational(1, 50));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("long double conversion keeps huge and tiny values finite") {
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
    const Rational huge(big * 3, big);
    CHECK(to_long_double(huge) == doctest::Approx(3.0));
    const Rational tiny(1, big);
    CHECK(to_long_double(tiny) > 0);
}

TEST_CASE("convergents of simple values") {
    const auto c = convergents(0.75L, mpz_class(100));
    REQUIRE_FALSE(c.empty());
    CHECK(c.back() == Rational(3, 4));
    const auto pi = convergents(3.14159265358979L, mpz_class(200));
    CHECK(std::find(pi.begin(), pi.end(), Rational(22, 7)) != pi.end());
}

TEST_CASE("poly_arith") {
    CHECK(poly_arith(Poly{1, 1}, Poly{-1, 1}, ArithOp::mul) == Poly{-1, 0, 1});
    CHECK(poly_arith(Poly{0, 0, 1}, Poly{}, ArithOp::add) == Poly{0, 0, 1});
    CHECK(poly_arith(Poly{0, 2}, Poly{0, 0, 3}, ArithOp::mul) == Poly{0, 0, 0, 6});
    CHECK(poly_arith(Poly{1, 2, 3}, Poly{1, 2, 3}, ArithOp::sub).is_zero());
    CHECK(Poly{0, 0, 0}.degree() == -1);
}

TEST_CASE("poly_gcd") {
    CHECK(poly_gcd(Poly{-1, 0, 1}, Poly{-1, 1}) == Poly{-1, 1});
    CHECK(poly_gcd(Poly{0, 0, 1}, Poly{1, 1}) == Poly{1});
    // (z-2)^2 (z+1) = z^3 - 3z^2 + 4 and (z-2)(z-3) = z^2 - 5z + 6, expanded by hand
    CHECK(poly_gcd(Poly{4, 0, -3, 1}, Poly{6, -5, 1}) == Poly{-2, 1});
    CHECK(poly_gcd(Poly{0, 2}, Poly{}) == Poly{0, 1});
    CHECK_THROWS_WITH_AS(poly_gcd(Poly{}, Poly{}), "undefined gcd", Error);
}

TEST_CASE("poly_compose") {
    CHECK(poly_compose(Poly{0, 0, 1}, Poly{1, 1}) == Poly{1, 2, 1});
    const Poly p{3, -1, 4, 1};
    CHECK(poly_compose(Poly{0, 1}, p) == p);
    CHECK(poly_compose(Poly{0, -1, 0, 1}, Poly{0, 2}) == Poly{0, -2, 0, 8});
}

TEST_CASE("division") {
    const auto [q, r] = divmod(Poly{1, 0, 0, 1}, Poly{1, 1});
    CHECK(q == Poly{1, -1, 1});
    CHECK(r.is_zero());
    CHECK_THROWS_AS(divmod(Poly{1}, Poly{}), Error);
    CHECK_THROWS_AS(exact_quotient(Poly{1, 0, 1}, Poly{1, 1}), Error);
}

TEST_CASE("to_string") {
    CHECK(to_string(Poly{1, -2, 1}) == "z^2-2*z+1");
    CHECK(to_string(Poly(std::vector<Rational>{Rational(1, 3), 0, -1})) == "-z^2+1/3");
    CHECK(to_string(Poly{}) == "0");
}

TEST_CASE("property: gcd(a c, b c) is divisible by c") {
    for (int n = 0; n < 200; ++n) {
        const Poly a = nonzero_random_poly(6), b = nonzero_random_poly(6), c = nonzero_random_poly(4);
        const Poly g = poly_gcd(a * c, b * c);
        CHECK(divmod(g, c).second.is_zero());
    }
}

TEST_CASE("property: composition degree law") {
    for (int n = 0; n < 200; ++n) {
        const Poly a = random_poly(5), b = random_poly(5);
        if (a.degree() < 1 || b.degree() < 1) continue;
        CHECK(poly_compose(a, b).degree() == a.degree() * b.degree());
    }
}

TEST_CASE("property: square-free decomposition reconstructs p") {
    for (int n = 0; n < 100; ++n) {
        const Poly a = nonzero_random_poly(3), b = nonzero_random_poly(2);
        const Poly p = a * a * b * b * b * Poly{-1, 1};
        const auto factors = square_free_decomposition(p);
        Poly product = Poly::constant(p.leading());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            product = product * factors[i].first.pow(static_cast<unsigned>(factors[i].second));
            CHECK(poly_gcd(factors[i].first, factors[i].first.derivative()).degree() == 0);
            for (std::size_t k = i + 1; k < factors.size(); ++k) CHECK(poly_gcd(factors[i].first, factors[k].first).degree() == 0);
        }
        CHECK(product == p);
    }
}

TEST_CASE("property: a modular coprimality witness is never wrong") {
    for (int n = 0; n < 200; ++n) {
        const Poly a = nonzero_random_poly(5), b = nonzero_random_poly(5);
        if (coprime_modular_witness(a, b)) CHECK(poly_gcd(a, b).degree() == 0);
    }
}

TEST_CASE("poly_roots examples") {
    auto r = poly_roots(Poly{-1, 0, 1});
    REQUIRE(r.size() == 2);
    CHECK(r[0].value.real() == doctest::Approx(-1));
    CHECK(r[1].value.real() == doctest::Approx(1));
    CHECK(r[0].multiplicity == 1);

    r = poly_roots(Poly{9, -6, 1});
    REQUIRE(r.size() == 1);
    CHECK(r[0].value.real() == doctest::Approx(3));
    CHECK(r[0].multiplicity == 2);

    r = poly_roots(Poly{1, 0, 1});
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0].value - Complex(0, -1)) < 1e-12);
    CHECK(std::abs(r[1].value - Complex(0, 1)) < 1e-12);

    CHECK_THROWS_AS(poly_roots(Poly{5}), Error);
    CHECK_THROWS_AS(poly_roots(Poly{}), Error);
}

TEST_CASE("poly_roots reports unvalidated roots") {
    RootOptions strict;
    strict.eps = 1e-40;
    CHECK_THROWS_WITH_AS(poly_roots(Poly{-2, 0, 0, 1}, strict), "roots not validated", Error);
}

TEST_CASE("property: roots multiply back to p") {
    for (int n = 0; n < 100; ++n) {
        Poly p = nonzero_random_poly(8);
        if (p.degree() < 1) continue;
        p = p * Poly{-2, 1} * Poly{-2, 1};  // force a repeated root
        const auto roots = poly_roots(p);
        // expand lc * prod (z - r)^m in complex long double
        std::vector<ComplexLD> prod{ComplexLD(to_long_double(p.leading()))};
        int total = 0;
        for (const auto& r : roots) {
            total += r.multiplicity;
            for (int m = 0; m < r.multiplicity; ++m) {
                std::vector<ComplexLD> next(prod.size() + 1, ComplexLD(0));
                for (std::size_t k = 0; k < prod.size(); ++k) {
                    next[k + 1] += prod[k];
                    next[k] -= prod[k] * ComplexLD(r.value.real(), r.value.imag());
                }
                prod = std::move(next);
            }
        }
        CHECK(total == p.degree());
        long double norm = 0, err = 0;
        const auto pc = p.to_long_double();
        for (std::size_t k = 0; k < pc.size(); ++k) {
            norm = std::max(norm, std::abs(pc[k]));
            err = std::max(err, std::abs(prod[k] - pc[k]));
        }
        CHECK(static_cast<double>(err / norm) <= 1e3 * 1e-10);
        for (const auto& r : roots) CHECK(root_residual(p, ComplexLD(r.value.real(), r.value.imag())) <= 1e-10);
    }
}

TEST_CASE("poly_roots with large and tiny roots") {
    // (z - 1e6)(z - 1e-6)(z + 3)
    const Poly p = Poly(std::vector<Rational>{-1000000, 1}) * Poly(std::vector<Rational>{Rational(-1, 1000000), 1}) * Poly{3, 1};
    const auto roots = poly_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].value.real() == doctest::Approx(-3));
    CHECK(roots[1].value.real() == doctest::Approx(1e-6).epsilon(1e-9));
    CHECK(roots[2].value.real() == doctest::Approx(1e6).epsilon(1e-12));
}

TEST_CASE("zero roots are split off exactly") {
    const auto roots = poly_roots(Poly{0, 0, 0, -4, 1});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value == Complex(0, 0));
    CHECK(roots[0].multiplicity == 3);
    CHECK(roots[1].value.real() == doctest::Approx(4));
}

TEST_CASE("complex coefficient roots") {
    // (z - i)(z - 2) = z^2 - (2 + i) z + 2i
    const std::vector<ComplexLD> c{{0, 2}, {-2, -1}, {1, 0}};
    const auto roots = complex_poly_roots(c);
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0] - Complex(0, 1)) < 1e-12);
    CHECK(std::abs(roots[1] - Complex(2, 0)) < 1e-12);
}

TEST_CASE("recognize_rational_root") {
    const Poly p = Poly{-3, 4} * Poly{1, 0, 1};  // root 3/4 and +-i
    CHECK(recognize_rational_root(p, Complex(0.75, 1e-14)) == Rational(3, 4));
    CHECK_FALSE(recognize_rational_root(p, Complex(0, 1)).has_value());
    CHECK_FALSE(recognize_rational_root(Poly{-2, 0, 1}, Complex(std::sqrt(2.0), 0)).has_value());
}

TEST_CASE("serial and parallel Aberth kernels agree bit for bit") {
    std::vector<ComplexLD> c;
    std::uniform_real_distribution<double> u(-1, 1);
    for (int k = 0; k < 120; ++k) c.emplace_back(u(rng), 0);
    c.back() = 1;
    const auto a = kernels::aberth_serial(c, 2000);
    const auto b = kernels::aberth_parallel(c, 2000);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
}
