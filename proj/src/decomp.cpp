#include "recomp/decomp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "recomp/roots.hpp"

namespace recomp {

Decomposition::Decomposition(RatMap u, RatMap v) : u_(std::move(u)), v_(std::move(v)), composed_(compose(u_, v_)) {
    if (u_.degree() < 1 || v_.degree() < 1) throw Error("decomposition factors must be non-constant");
}

RatMap elementary_transform(const Decomposition& d) { return compose(d.V(), d.U()); }

bool semiconjugacy_check(const RatMap& A, const RatMap& B, const RatMap& X) {
    return equals_exact(compose(A, X), compose(X, B));
}

namespace {

/// 0, 1, -1, 2, -2, ... then 1/2, -1/2, 1/3, ... : small exact sample points.
std::vector<Rational> sample_points(std::size_t count) {
    std::vector<Rational> out;
    out.emplace_back(0);
    for (long k = 1; out.size() < count && k <= 64; ++k) {
        out.emplace_back(k);
        out.emplace_back(-k);
    }
    for (long k = 2; out.size() < count; ++k) {
        out.emplace_back(1, k);
        out.emplace_back(-1, k);
    }
    out.resize(count);
    return out;
}

bool same_point(const PointP1& a, const PointP1& b) {
    if (a.is_exact() && b.is_exact()) return a == b;
    return chordal_distance(a, b) <= 1e-9;
}

bool point_less(const PointP1& a, const PointP1& b) {
    if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
    if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
    const Complex x = a.value().to_complex(), y = b.value().to_complex();
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
}

PointP1 recognize(const Poly& p, Complex r) {
    if (auto q = recognize_rational_root(p, r)) return PointP1(*q);
    return PointP1(r);
}

}  // namespace

std::optional<Moebius> are_equivalent_decompositions(const Decomposition& d1, const Decomposition& d2) {
    if (!equals_exact(d1.composed(), d2.composed()))
        throw Error("are_equivalent_decompositions: decompositions of different maps");
    if (d1.V().degree() != d2.V().degree()) throw Error("are_equivalent_decompositions: deg V differs");
    // mu sends V2(z_i) to V1(z_i) for three samples with distinct V2-images
    std::vector<PointP1> src, dst;
    for (const Rational& z : sample_points(48)) {
        const PointP1 a = d2.V()(PointP1(z));
        if (std::any_of(src.begin(), src.end(), [&](const PointP1& s) { return s == a; })) continue;
        src.push_back(a);
        dst.push_back(d1.V()(PointP1(z)));
        if (src.size() == 3) break;
    }
    if (src.size() < 3) throw Error("are_equivalent_decompositions: degenerate sampling");
    if (dst[0] == dst[1] || dst[0] == dst[2] || dst[1] == dst[2]) return std::nullopt;
    const Moebius mu = moebius_through({src[0], src[1], src[2]}, {dst[0], dst[1], dst[2]});
    const RatMap m = mu.as_map();
    if (!equals_exact(d1.V(), compose(m, d2.V()))) return std::nullopt;
    if (!equals_exact(d2.U(), compose(d1.U(), m))) return std::nullopt;
    return mu;
}

std::vector<PointP1> fiber(const RatMap& f, const PointP1& value) {
    const int d = f.degree();
    if (d < 1) throw Error("fiber degenerate");
    std::vector<PointP1> out;
    if (value.is_exact()) {
        const Poly p = value.is_infinity() ? f.den() : f.num() - value.exact() * f.den();
        if (p.is_zero()) throw Error("fiber degenerate");
        const int at_infinity = d - p.degree();
        if (at_infinity > 1) throw Error("fiber degenerate");
        if (p.degree() >= 1) {
            if (poly_gcd(p, p.derivative()).degree() > 0) throw Error("fiber degenerate");
            for (const Root& r : poly_roots(p)) out.push_back(recognize(p, r.value));
        }
        if (at_infinity == 1) out.push_back(PointP1::infinity());
    } else {
        const ComplexLD c = value.value().to_complex_ld();
        auto num = f.num().to_long_double(), den = f.den().to_long_double();
        std::vector<ComplexLD> p(static_cast<std::size_t>(d) + 1, ComplexLD(0));
        long double norm = 0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (k < num.size()) p[k] += num[k];
            if (k < den.size()) p[k] -= c * den[k];
            norm = std::max(norm, std::abs(p[k]));
        }
        while (!p.empty() && std::abs(p.back()) <= 1e-14L * norm) p.pop_back();
        const int at_infinity = d + 1 - static_cast<int>(p.size());
        if (at_infinity > 1 || p.empty()) throw Error("fiber degenerate");
        if (p.size() >= 2)
            for (const Complex& r : complex_poly_roots(p)) out.emplace_back(r);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                if (relative_distance(out[i].value().to_complex(), out[j].value().to_complex()) <= 1e-8)
                    throw Error("fiber degenerate");
        if (at_infinity == 1) out.push_back(PointP1::infinity());
    }
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

BlockPartition blocks(const Decomposition& d, const PointP1& basepoint) {
    BlockPartition part;
    part.basepoint = basepoint;
    part.fiber = fiber(d.composed(), basepoint);
    const auto targets = fiber(d.U(), basepoint);
    part.blocks.assign(targets.size(), {});
    for (std::size_t i = 0; i < part.fiber.size(); ++i) {
        const PointP1 w = d.V()(part.fiber[i]);
        std::size_t best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < targets.size(); ++t) {
            const double dist = w.is_exact() && targets[t].is_exact() ? (w == targets[t] ? 0.0 : 2.0)
                                                                      : chordal_distance(w, targets[t]);
            if (dist < best_dist) {
                best_dist = dist;
                best = t;
            }
        }
        part.blocks[best].push_back(i);
    }
    const auto size = static_cast<std::size_t>(d.V().degree());
    for (const auto& b : part.blocks)
        if (b.size() != size) throw Error("blocks: inconsistent block sizes");
    return part;
}

std::size_t block_containing(const BlockPartition& p, const PointP1& point) {
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (std::size_t i : p.blocks[b])
            if (same_point(p.fiber[i], point)) return b;
    throw Error("point is not in the fiber");
}

namespace {

/// Basis of the right nullspace of an exact matrix.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t r = row;
        while (r < m.size() && m[r][c] == 0) ++r;
        if (r == m.size()) continue;
        std::swap(m[r], m[row]);
        const Rational inv = 1 / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (k == row || m[k][c] == 0) continue;
            const Rational factor = m[k][c];
            for (std::size_t j = 0; j < cols; ++j) m[k][j] -= factor * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// The degree-2 U with U o V == F, from U(V(z_i)) = F(z_i) at exact samples.
std::optional<RatMap> recover_outer(const RatMap& F, const RatMap& V) {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> seen;
    for (const Rational& z : sample_points(64)) {
        const PointP1 w = V(PointP1(z));
        if (w.is_infinity()) continue;
        const Rational& wv = w.exact();
        if (std::find(seen.begin(), seen.end(), wv) != seen.end()) continue;
        seen.push_back(wv);
        const PointP1 f = F(PointP1(z));
        const Rational w2 = wv * wv;
        if (f.is_infinity()) {
            rows.push_back({0, 0, 0, 1, wv, w2});
        } else {
            const Rational& fv = f.exact();
            rows.push_back({1, wv, w2, -fv, -fv * wv, -fv * w2});
        }
        if (rows.size() == 9) break;
    }
    const auto basis = nullspace(std::move(rows), 6);
    if (basis.empty()) return std::nullopt;
    if (basis.size() > 1) throw Error("find_degree2_decompositions: rank-deficient interpolation system");
    const auto& v = basis.front();
    return RatMap(Poly(std::vector<Rational>{v[0], v[1], v[2]}), Poly(std::vector<Rational>{v[3], v[4], v[5]}));
}

using CMatrix = std::array<ComplexLD, 4>;

CMatrix frame(const std::array<std::array<ComplexLD, 2>, 3>& p) {
    // alpha * p3 + beta * p1 = p2
    const ComplexLD det = p[2][0] * p[0][1] - p[0][0] * p[2][1];
    const ComplexLD alpha = (p[1][0] * p[0][1] - p[0][0] * p[1][1]) / det;
    const ComplexLD beta = (p[2][0] * p[1][1] - p[1][0] * p[2][1]) / det;
    return {alpha * p[2][0], beta * p[0][0], alpha * p[2][1], beta * p[0][1]};
}

CMatrix times(const CMatrix& f, const CMatrix& g) {
    return {f[0] * g[0] + f[1] * g[2], f[0] * g[1] + f[1] * g[3], f[2] * g[0] + f[3] * g[2], f[2] * g[1] + f[3] * g[3]};
}

/// Numeric Moebius through three pairs, rescaled so its largest entry is 1
/// and rounded to small-denominator rationals. nullopt when the matrix is
/// not a multiple of a rational one.
std::optional<Moebius> rationalized_moebius(const std::array<PointP1, 3>& src, const std::array<PointP1, 3>& dst) {
    const CMatrix s = frame({src[0].homogeneous(), src[1].homogeneous(), src[2].homogeneous()});
    const CMatrix t = frame({dst[0].homogeneous(), dst[1].homogeneous(), dst[2].homogeneous()});
    const CMatrix s_inv = {s[3], -s[1], -s[2], s[0]};
    CMatrix m = times(t, s_inv);
    const auto big = *std::max_element(m.begin(), m.end(), [](ComplexLD a, ComplexLD b) { return std::abs(a) < std::abs(b); });
    std::array<Rational, 4> q;
    for (std::size_t k = 0; k < 4; ++k) {
        const ComplexLD x = m[k] / big;
        if (std::abs(x.imag()) > 1e-8L) return std::nullopt;
        if (std::abs(x.real()) < 1e-12L) {
            q[k] = 0;
            continue;
        }
        bool found = false;
        for (const Rational& c : convergents(x.real(), mpz_class(1000000))) {
            if (std::abs(to_long_double(c) - x.real()) <= 1e-9L) {
                q[k] = c;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    try {
        return Moebius(q[0], q[1], q[2], q[3]);
    } catch (const Error&) {
        return std::nullopt;
    }
}

/// A degree-2 map invariant under the involution: z * sigma(z), or
/// z + sigma(z) when the product degenerates.
RatMap invariant_quotient(const Moebius& s) {
    RatMap product(Poly(std::vector<Rational>{0, s.b(), s.a()}), Poly(std::vector<Rational>{s.d(), s.c()}));
    if (product.degree() == 2) return product;
    return RatMap(Poly(std::vector<Rational>{s.b(), s.a() + s.d(), s.c()}), Poly(std::vector<Rational>{s.d(), s.c()}));
}

/// inf, 0, 1, -1, 2, -2, ..., 1/2, -1/2, ...
std::vector<PointP1> candidate_basepoints() {
    std::vector<PointP1> out{PointP1::infinity()};
    for (const Rational& r : sample_points(40)) out.emplace_back(r);
    return out;
}

}  // namespace

Degree2Search find_degree2_decompositions(const RatMap& F, ExecPolicy policy) {
    if (F.degree() != 4) throw Error("find_degree2_decompositions: degree must be 4");
    Degree2Search result;
    std::optional<std::vector<PointP1>> numeric_fiber;
    std::optional<PointP1> numeric_base;
    std::vector<PointP1> zs;
    for (const PointP1& b : candidate_basepoints()) {
        std::vector<PointP1> fb;
        try {
            fb = fiber(F, b);
        } catch (const Error&) {
            continue;
        }
        if (std::all_of(fb.begin(), fb.end(), [](const PointP1& p) { return p.is_exact(); })) {
            zs = std::move(fb);
            result.basepoint = b;
            break;
        }
        if (!numeric_fiber) {
            numeric_fiber = std::move(fb);
            numeric_base = b;
        }
    }
    if (zs.empty()) {
        if (!numeric_fiber) throw Error("find_degree2_decompositions: no regular fiber among candidate basepoints");
        zs = std::move(*numeric_fiber);
        result.basepoint = *numeric_base;
        result.exact_fiber = false;
        result.notes.push_back("no fully rational fiber found; involutions rationalized from the numeric fiber over " +
                               to_string(result.basepoint));
    }

    // pairings {z0, zk} | {zi, zj}
    static constexpr std::array<std::array<std::size_t, 3>, 3> pairings{{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}}};
    std::array<std::optional<Decomposition>, 3> found;
    std::array<std::string, 3> notes;
    for_each_index(pairings.size(), policy, [&](std::size_t n) {
        const auto [k, i, j] = pairings[n];
        const std::array<PointP1, 3> src{zs[0], zs[k], zs[i]}, dst{zs[k], zs[0], zs[j]};
        std::optional<Moebius> sigma;
        if (result.exact_fiber) sigma = moebius_through(src, dst);
        else sigma = rationalized_moebius(src, dst);
        const std::string label = "pairing {" + to_string(zs[0]) + ", " + to_string(zs[k]) + "} | {" + to_string(zs[i]) +
                                  ", " + to_string(zs[j]) + "}: ";
        if (!sigma) {
            notes[n] = label + "involution not defined over Q";
            return;
        }
        if (!(*sigma * *sigma == Moebius::identity()) || !equals_exact(compose(F, sigma->as_map()), F)) {
            notes[n] = label + "F is not invariant under the involution";
            return;
        }
        const RatMap V = invariant_quotient(*sigma);
        const auto U = recover_outer(F, V);
        if (!U || !equals_exact(compose(*U, V), F)) {
            notes[n] = label + "no outer factor found";
            return;
        }
        found[n].emplace(*U, V);
    });
    for (std::size_t n = 0; n < found.size(); ++n) {
        if (!notes[n].empty()) result.notes.push_back(notes[n]);
        if (!found[n]) continue;
        const bool duplicate = std::any_of(result.decompositions.begin(), result.decompositions.end(),
                                           [&](const Decomposition& d) { return are_equivalent_decompositions(d, *found[n]).has_value(); });
        if (!duplicate) result.decompositions.push_back(std::move(*found[n]));
    }
    return result;
}

}  // namespace recomp
