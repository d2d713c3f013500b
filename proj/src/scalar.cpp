#include "recomp/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace recomp {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw Error("malformed integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_text = s.substr(e + 1);
        if (!is_integer_literal(exp_text)) throw Error("malformed number: '" + std::string(text) + "'");
        exponent = std::stol(std::string(exp_text));
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
        exponent -= static_cast<long>(s.size() - dot - 1);
    } else {
        digits = std::string(s);
    }
    if (digits.empty() || !is_integer_literal(digits)) throw Error("malformed number: '" + std::string(text) + "'");
    if (std::abs(exponent) > 10000) throw Error("exponent out of range: '" + std::string(text) + "'");
    Rational r(mpz_class(digits, 10));
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
    if (exponent >= 0) r *= p10;
    else r /= p10;
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw Error("empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    if (is_integer_literal(text)) return Rational(parse_integer(text));
    return parse_decimal(text);
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

// value = mantissa * 2^exp with 64 significant bits
long double mpz_to_ld(const mpz_class& z, long& exp) {
    if (z == 0) {
        exp = 0;
        return 0.0L;
    }
    mpz_class a = abs(z);
    long bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
    long shift = std::max(0L, bits - 64);
    mpz_class top = a >> static_cast<mp_bitcnt_t>(shift);
    long double m = 0.0L;
    // top fits in 64 bits; assemble from two 32-bit halves for portability
    mpz_class hi = top >> 32;
    mpz_class lo = top - (hi << 32);
    m = static_cast<long double>(hi.get_ui()) * 4294967296.0L + static_cast<long double>(lo.get_ui());
    exp = shift;
    return sgn(z) < 0 ? -m : m;
}

}  // namespace

long double to_long_double(const Rational& r) {
    long en = 0, ed = 0;
    long double n = mpz_to_ld(r.get_num(), en);
    long double d = mpz_to_ld(r.get_den(), ed);
    return std::ldexp(n / d, static_cast<int>(en - ed));
}

std::vector<Rational> convergents(long double x, const mpz_class& max_den) {
    std::vector<Rational> out;
    if (!std::isfinite(x) || std::abs(x) > 1e18L) return out;
    mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
    mpz_class k_prev = 0, k = 1;
    long double frac = x - std::floor(x);
    for (int step = 0; step < 64; ++step) {
        Rational q(h, k);
        q.canonicalize();
        out.push_back(q);
        if (frac < 1e-18L) break;
        const long double inv = 1.0L / frac;
        const long double a = std::floor(inv);
        frac = inv - a;
        if (a > 1e18L) break;
        const mpz_class ai = static_cast<long>(a);
        mpz_class h_next = ai * h + h_prev, k_next = ai * k + k_prev;
        if (k_next > max_den) break;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return out;
}

Scalar::Scalar(Complex c) : value_(c) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw Error("non-finite complex value");
}

const Rational& Scalar::exact() const {
    if (!is_exact()) throw Error("scalar is not exact");
    return std::get<Rational>(value_);
}

Complex Scalar::to_complex() const {
    if (is_exact()) return {static_cast<double>(to_long_double(std::get<Rational>(value_))), 0.0};
    return std::get<Complex>(value_);
}

ComplexLD Scalar::to_complex_ld() const {
    if (is_exact()) return {to_long_double(std::get<Rational>(value_)), 0.0L};
    auto c = std::get<Complex>(value_);
    return {c.real(), c.imag()};
}

std::string to_string(const Scalar& s) {
    if (s.is_exact()) return to_string(s.exact());
    std::ostringstream os;
    os.precision(17);
    auto c = s.to_complex();
    os << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    return os.str();
}

double relative_distance(Complex a, Complex b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace recomp
