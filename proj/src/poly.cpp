#include "recomp/poly.hpp"

#include <algorithm>

namespace recomp {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Poly::Poly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1, Rational(0));
    v[power] = c;
    return Poly(std::move(v));
}

Poly Poly::z() { return monomial(Rational(1), 1); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ComplexLD Poly::operator()(ComplexLD x) const {
    ComplexLD acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + recomp::to_long_double(*it);
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Poly r = *this;
    Rational inv = 1 / leading();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly result = constant(1);
    Poly base = *this;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

Poly Poly::reversed(int deg) const {
    if (deg < degree()) throw Error("reversal degree below polynomial degree");
    std::vector<Rational> v(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) v[static_cast<std::size_t>(deg) - k] = coeffs_[k];
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(r));
}

std::vector<long double> Poly::to_long_double() const {
    std::vector<long double> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(recomp::to_long_double(c));
    return v;
}

Poly poly_arith(const Poly& a, const Poly& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    }
    throw Error("unknown polynomial operation");
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const auto& bc = b.coeffs();
    const Rational inv_lead = 1 / b.leading();
    const std::size_t db = bc.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational q = rem[k + db] * inv_lead;
        quo[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
    if (p.empty()) return;
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (p.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Primitive integer polynomial proportional to p.
ZPoly primitive_integer(const Poly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) z.push_back(c.get_num() * (l / c.get_den()));
    make_primitive(z);
    return z;
}

/// Sparse pseudo-remainder of a by b over Z.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        mpz_class la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim(a);
        make_primitive(a);
    }
    return a;
}

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<u64> reduce(const ZPoly& p, u64 m) {
    std::vector<u64> r(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        mpz_class t;
        mpz_fdiv_r_ui(t.get_mpz_t(), p[k].get_mpz_t(), static_cast<unsigned long>(m));
        r[k] = static_cast<u64>(t.get_ui());
    }
    return r;
}

int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 m) {
    auto strip = [](std::vector<u64>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    strip(a);
    strip(b);
    while (!b.empty()) {
        u64 inv = powmod(b.back(), m - 2, m);
        while (a.size() >= b.size()) {
            u64 q = mulmod(a.back(), inv, m);
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + m - mulmod(q, b[j], m)) % m;
            strip(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

}  // namespace

bool coprime_modular_witness(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return false;
    if (a.degree() == 0 || b.degree() == 0) return true;
    const ZPoly za = primitive_integer(a), zb = primitive_integer(b);
    constexpr u64 primes[] = {2305843009213693951ULL, 2147483647ULL, 1000000007ULL};
    for (u64 m : primes) {
        auto ra = reduce(za, m), rb = reduce(zb, m);
        if (ra.back() == 0 || rb.back() == 0) continue;
        return gcd_degree_mod(std::move(ra), std::move(rb), m) == 0;
    }
    return false;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw Error("undefined gcd");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (coprime_modular_witness(a, b)) return Poly::constant(1);
    ZPoly x = primitive_integer(a), y = primitive_integer(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> q;
    q.reserve(x.size());
    for (const auto& c : x) q.emplace_back(c);
    return Poly(std::move(q)).monic();
}

Poly poly_compose(const Poly& outer, const Poly& inner) {
    Poly acc;
    const auto& c = outer.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Poly::constant(*it);
    return acc;
}

std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& p) {
    if (p.degree() < 1) return {};
    Poly f = p.monic();
    Poly df = f.derivative();
    if (coprime_modular_witness(f, df)) return {{f, 1}};
    Poly a = poly_gcd(f, df);
    Poly b = exact_quotient(f, a);
    Poly c = exact_quotient(df, a);
    Poly d = c - b.derivative();
    std::vector<std::pair<Poly, int>> out;
    for (int k = 1; b.degree() > 0; ++k) {
        Poly g = poly_gcd(b, d);
        b = exact_quotient(b, g);
        c = exact_quotient(d, g);
        d = c - b.derivative();
        if (g.degree() > 0) out.emplace_back(std::move(g), k);
    }
    return out;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        Rational mag = abs(c[k]);
        if (sgn(c[k]) < 0) out += "-";
        else if (!out.empty()) out += "+";
        const bool unit = mag == 1 && k > 0;
        if (!unit) {
            out += to_string(mag);
            if (k > 0) out += "*";
        }
        if (k >= 1) out += "z";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace recomp
