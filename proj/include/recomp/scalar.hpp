#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace recomp {

/// Arbitrary-precision rational. mpq_class keeps numerator and denominator
/// coprime with a positive denominator after every arithmetic operation.
using Rational = mpq_class;

/// Finite double-precision complex value.
using Complex = std::complex<double>;
using ComplexLD = std::complex<long double>;

/// All library errors derive from this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p", "p/q", "-p/q" or a finite decimal such as "0.25" / "-1.5e3"
/// into an exact rational. Throws Error on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

/// Nearest long double (keeps 64 significant bits of numerator and
/// denominator, so huge or tiny values do not overflow to inf/0).
long double to_long_double(const Rational& r);

/// Continued-fraction convergents of x with denominators up to max_den,
/// in order of increasing denominator.
std::vector<Rational> convergents(long double x, const mpz_class& max_den);

/// An exact rational or a numeric complex value.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(Rational r) : value_(std::move(r)) {}
    Scalar(Complex c);
    Scalar(long v) : value_(Rational(v)) {}

    bool is_exact() const { return std::holds_alternative<Rational>(value_); }
    const Rational& exact() const;
    Complex to_complex() const;
    ComplexLD to_complex_ld() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

private:
    std::variant<Rational, Complex> value_;
};

std::string to_string(const Scalar& s);

/// |a - b| / max(1, |a|, |b|)
double relative_distance(Complex a, Complex b);

}  // namespace recomp
