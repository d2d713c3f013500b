#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "recomp/poly.hpp"

namespace recomp {

/// A point of the projective line: a finite scalar (exact or numeric) or
/// the point at infinity.
class PointP1 {
public:
    PointP1(Scalar s) : finite_(std::move(s)) {}
    PointP1(Rational r) : finite_(Scalar(std::move(r))) {}
    PointP1(Complex c) : finite_(Scalar(c)) {}
    PointP1(long v) : finite_(Scalar(v)) {}
    static PointP1 infinity() { return PointP1(); }

    bool is_infinity() const { return !finite_.has_value(); }
    /// Infinity or an exact rational.
    bool is_exact() const { return is_infinity() || finite_->is_exact(); }
    const Scalar& value() const;
    const Rational& exact() const { return value().exact(); }

    /// Homogeneous coordinates [x : y] scaled so max(|x|,|y|) = 1.
    std::array<ComplexLD, 2> homogeneous() const;

    friend bool operator==(const PointP1& a, const PointP1& b) { return a.finite_ == b.finite_; }

private:
    PointP1() = default;
    std::optional<Scalar> finite_;
};

std::string to_string(const PointP1& p);

/// Chordal distance on the Riemann sphere, in [0, 2].
double chordal_distance(const PointP1& a, const PointP1& b);
double chordal_distance(const std::array<ComplexLD, 2>& a, const std::array<ComplexLD, 2>& b);

/// A rational map num/den of P^1 with exact coefficients, kept normalized:
/// gcd(num, den) = 1 and den monic.
class RatMap {
public:
    /// Cancels common factors and rescales. Throws Error("indeterminate map")
    /// for 0/0 and rejects den == 0 (the constant map to infinity).
    RatMap(Poly num, Poly den);
    explicit RatMap(Poly p) : RatMap(std::move(p), Poly::constant(1)) {}

    static RatMap identity() { return RatMap(Poly::z()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    int degree() const { return std::max(num_.degree(), den_.degree()); }

    /// eval_p1: exact for exact points; poles map to infinity.
    PointP1 operator()(const PointP1& p) const;
    /// Numeric evaluation in homogeneous coordinates.
    std::array<ComplexLD, 2> eval_homogeneous(const std::array<ComplexLD, 2>& p) const;

    RatMap derivative() const;

    friend bool operator==(const RatMap& a, const RatMap& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    friend RatMap compose(const RatMap& outer, const RatMap& inner);
    struct Coprime {};
    /// For inputs already known to be coprime: only rescales.
    RatMap(Poly num, Poly den, Coprime);
    void rescale();

    Poly num_;
    Poly den_;
    // homogenized coefficients of degree(), ascending, for numeric evaluation
    std::vector<long double> num_ld_;
    std::vector<long double> den_ld_;
};

/// outer(inner(z)), computed through the homogenized form of outer, which
/// keeps numerator and denominator coprime without a gcd.
RatMap compose(const RatMap& outer, const RatMap& inner);

/// F^{on n}; n = 0 gives the identity.
RatMap iterate(const RatMap& f, int n);

/// numF * denG - numG * denF == 0.
bool equals_exact(const RatMap& f, const RatMap& g);

std::string to_string(const RatMap& f);

/// z -> (az + b) / (cz + d) with ad - bc != 0, scaled so the first nonzero
/// of (a, b, c, d) equals 1.
class Moebius {
public:
    Moebius(Rational a, Rational b, Rational c, Rational d);
    static Moebius identity() { return {1, 0, 0, 1}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    Moebius inverse() const { return {d_, -b_, -c_, a_}; }
    RatMap as_map() const;
    PointP1 operator()(const PointP1& p) const;

    friend bool operator==(const Moebius&, const Moebius&) = default;

private:
    Rational a_, b_, c_, d_;
};

Moebius operator*(const Moebius& outer, const Moebius& inner);

/// mu^{-1} o f o mu.
RatMap conjugate(const RatMap& f, const Moebius& mu);

/// The unique Moebius map sending src[i] to dst[i]. Points must be exact and
/// pairwise distinct within each triple.
Moebius moebius_through(const std::array<PointP1, 3>& src, const std::array<PointP1, 3>& dst);

}  // namespace recomp
