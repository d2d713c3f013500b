#include "recomp/ratmap.hpp"

#include <cmath>
#include <limits>

namespace recomp {

const Scalar& PointP1::value() const {
    if (!finite_) throw Error("point at infinity has no finite value");
    return *finite_;
}

std::array<ComplexLD, 2> PointP1::homogeneous() const {
    if (!finite_) return {ComplexLD(1), ComplexLD(0)};
    const ComplexLD v = finite_->to_complex_ld();
    if (std::abs(v) <= 1.0L) return {v, ComplexLD(1)};
    return {ComplexLD(1), 1.0L / v};
}

std::string to_string(const PointP1& p) { return p.is_infinity() ? "inf" : to_string(p.value()); }

double chordal_distance(const std::array<ComplexLD, 2>& a, const std::array<ComplexLD, 2>& b) {
    const long double na = std::hypot(std::abs(a[0]), std::abs(a[1]));
    const long double nb = std::hypot(std::abs(b[0]), std::abs(b[1]));
    return static_cast<double>(2 * std::abs(a[0] * b[1] - a[1] * b[0]) / (na * nb));
}

double chordal_distance(const PointP1& a, const PointP1& b) { return chordal_distance(a.homogeneous(), b.homogeneous()); }

namespace {

std::vector<long double> homogenized(const Poly& p, int degree) {
    std::vector<long double> v(static_cast<std::size_t>(degree) + 1, 0.0L);
    auto ld = p.to_long_double();
    std::copy(ld.begin(), ld.end(), v.begin());
    return v;
}

/// sum c_k x^k y^(n-k), evaluated in whichever affine chart is stable.
ComplexLD eval_form(const std::vector<long double>& c, ComplexLD x, ComplexLD y, bool x_chart) {
    ComplexLD acc = 0;
    if (!x_chart) {
        const ComplexLD z = x / y;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    } else {
        const ComplexLD w = y / x;
        for (const long double ck : c) acc = acc * w + ck;
    }
    return acc;
}

}  // namespace

RatMap::RatMap(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero() && den_.is_zero()) throw Error("indeterminate map");
    if (den_.is_zero()) throw Error("constant map to infinity is not representable");
    if (!num_.is_zero() && den_.degree() > 0) {
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    rescale();
}

RatMap::RatMap(Poly num, Poly den, Coprime) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("constant map to infinity is not representable");
    rescale();
}

void RatMap::rescale() {
    if (num_.is_zero()) den_ = Poly::constant(1);
    const Rational inv = 1 / den_.leading();
    if (inv != 1) {
        num_ *= inv;
        den_ *= inv;
    }
    num_ld_ = homogenized(num_, degree());
    den_ld_ = homogenized(den_, degree());
}

PointP1 RatMap::operator()(const PointP1& p) const {
    if (p.is_infinity()) {
        if (num_.degree() > den_.degree()) return PointP1::infinity();
        if (num_.degree() < den_.degree()) return PointP1(Rational(0));
        return PointP1(Rational(num_.leading() / den_.leading()));
    }
    if (p.value().is_exact()) {
        const Rational& x = p.exact();
        Rational d = den_(x);
        if (d == 0) return PointP1::infinity();
        return PointP1(Rational(num_(x) / d));
    }
    auto h = eval_homogeneous(p.homogeneous());
    if (h[1] == ComplexLD(0)) return PointP1::infinity();
    const ComplexLD v = h[0] / h[1];
    // beyond double range the value is indistinguishable from a pole
    if (std::abs(v) > static_cast<long double>(std::numeric_limits<double>::max())) return PointP1::infinity();
    return PointP1(Complex(static_cast<double>(v.real()), static_cast<double>(v.imag())));
}

std::array<ComplexLD, 2> RatMap::eval_homogeneous(const std::array<ComplexLD, 2>& p) const {
    const bool x_chart = std::abs(p[0]) > std::abs(p[1]);
    ComplexLD n = eval_form(num_ld_, p[0], p[1], x_chart);
    ComplexLD d = eval_form(den_ld_, p[0], p[1], x_chart);
    const long double scale = std::max(std::abs(n), std::abs(d));
    if (scale > 0) {
        n /= scale;
        d /= scale;
    }
    return {n, d};
}

RatMap RatMap::derivative() const {
    if (den_.degree() == 0) return RatMap(num_.derivative());
    return RatMap(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatMap compose(const RatMap& outer, const RatMap& inner) {
    const int d = outer.degree();
    const Poly& r = inner.num();
    const Poly& s = inner.den();
    std::vector<Poly> rp{Poly::constant(1)}, sp{Poly::constant(1)};
    for (int k = 1; k <= d; ++k) {
        rp.push_back(rp.back() * r);
        sp.push_back(sp.back() * s);
    }
    Poly num, den;
    for (int k = 0; k <= d; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const Poly term = rp[i] * sp[static_cast<std::size_t>(d - k)];
        num += outer.num().coeff(i) * term;
        den += outer.den().coeff(i) * term;
    }
    return RatMap(std::move(num), std::move(den), RatMap::Coprime{});
}

RatMap iterate(const RatMap& f, int n) {
    if (n < 0) throw Error("negative iteration count");
    RatMap acc = RatMap::identity();
    for (int k = 0; k < n; ++k) acc = compose(f, acc);
    return acc;
}

bool equals_exact(const RatMap& f, const RatMap& g) { return (f.num() * g.den() - g.num() * f.den()).is_zero(); }

std::string to_string(const RatMap& f) {
    if (f.den().degree() == 0) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

Moebius::Moebius(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ == 0) throw Error("degenerate Moebius map (ad - bc = 0)");
    const Rational& first = a_ != 0 ? a_ : (b_ != 0 ? b_ : c_);
    if (first != 1) {
        const Rational inv = 1 / first;
        a_ *= inv;
        b_ *= inv;
        c_ *= inv;
        d_ *= inv;
    }
}

RatMap Moebius::as_map() const {
    return RatMap(Poly(std::vector<Rational>{b_, a_}), Poly(std::vector<Rational>{d_, c_}));
}

PointP1 Moebius::operator()(const PointP1& p) const {
    if (p.is_infinity()) {
        if (c_ == 0) return PointP1::infinity();
        return PointP1(Rational(a_ / c_));
    }
    if (p.value().is_exact()) {
        const Rational& x = p.exact();
        Rational den = c_ * x + d_;
        if (den == 0) return PointP1::infinity();
        return PointP1(Rational((a_ * x + b_) / den));
    }
    const ComplexLD x = p.value().to_complex_ld();
    const ComplexLD den = to_long_double(c_) * x + to_long_double(d_);
    if (den == ComplexLD(0)) return PointP1::infinity();
    const ComplexLD v = (to_long_double(a_) * x + to_long_double(b_)) / den;
    return PointP1(Complex(static_cast<double>(v.real()), static_cast<double>(v.imag())));
}

Moebius operator*(const Moebius& f, const Moebius& g) {
    return {f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(), f.c() * g.a() + f.d() * g.c(),
            f.c() * g.b() + f.d() * g.d()};
}

RatMap conjugate(const RatMap& f, const Moebius& mu) {
    return compose(mu.inverse().as_map(), compose(f, mu.as_map()));
}

namespace {

struct H {
    Rational x, y;
};

H exact_homogeneous(const PointP1& p) {
    if (p.is_infinity()) return {1, 0};
    if (!p.value().is_exact()) throw Error("moebius_through requires exact points");
    return {p.exact(), 1};
}

/// Matrix [[a, b], [c, d]] sending 0 -> p1, 1 -> p2, infinity -> p3.
std::array<Rational, 4> standard_frame(const std::array<PointP1, 3>& pts) {
    const H p1 = exact_homogeneous(pts[0]), p2 = exact_homogeneous(pts[1]), p3 = exact_homogeneous(pts[2]);
    // alpha * p3 + beta * p1 = p2
    const Rational det = p3.x * p1.y - p1.x * p3.y;
    if (det == 0) throw Error("moebius_through: repeated points");
    const Rational alpha = (p2.x * p1.y - p1.x * p2.y) / det;
    const Rational beta = (p3.x * p2.y - p2.x * p3.y) / det;
    if (alpha == 0 || beta == 0) throw Error("moebius_through: repeated points");
    return {alpha * p3.x, beta * p1.x, alpha * p3.y, beta * p1.y};
}

}  // namespace

Moebius moebius_through(const std::array<PointP1, 3>& src, const std::array<PointP1, 3>& dst) {
    const auto s = standard_frame(src);
    const auto t = standard_frame(dst);
    const Moebius from_src(s[0], s[1], s[2], s[3]);
    const Moebius to_dst(t[0], t[1], t[2], t[3]);
    return to_dst * from_src.inverse();
}

}  // namespace recomp
