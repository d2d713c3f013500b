#pragma once

#include <initializer_list>
#include <string>
#include <span>
#include <utility>
#include <vector>

#include "recomp/scalar.hpp"

namespace recomp {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree() == -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<long> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t power);
    /// The identity polynomial z.
    static Poly z();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of z^k (zero past the degree).
    Rational coeff(std::size_t k) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    ComplexLD operator()(ComplexLD x) const;

    Poly derivative() const;
    Poly monic() const;
    Poly pow(unsigned n) const;
    /// z^deg * p(1/z) for the given deg >= degree().
    Poly reversed(int deg) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Coefficients as long doubles (each rounded independently).
    std::vector<long double> to_long_double() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

enum class ArithOp { add, sub, mul };

Poly poly_arith(const Poly& a, const Poly& b, ArithOp op);

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// a / b when b divides a exactly; throws otherwise.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Monic gcd. Throws Error("undefined gcd") when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// outer(inner(z)).
Poly poly_compose(const Poly& outer, const Poly& inner);

/// Yun square-free decomposition: p = lc * prod f_k^k with every f_k monic,
/// square-free and pairwise coprime. Only non-constant factors are returned,
/// paired with their multiplicity k.
std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& p);

/// True when gcd(a, b) is certainly 1, decided by a gcd over a word-size
/// prime field. A false result is inconclusive.
bool coprime_modular_witness(const Poly& a, const Poly& b);

/// Infix rendering in the variable z, e.g. "z^2-2*z+1/3".
std::string to_string(const Poly& p);

}  // namespace recomp
