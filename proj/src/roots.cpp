#include "recomp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace recomp {

namespace kernels {

namespace {

constexpr long double kUnitRoundoff = std::numeric_limits<long double>::epsilon();

NewtonStep horner_ratio(std::span<const ComplexLD> c, ComplexLD z) {
    const std::size_t n = c.size() - 1;
    if (std::abs(z) <= 1.0L) {
        ComplexLD p = c[n], dp = 0;
        long double bound = std::abs(c[n]);
        const long double az = std::abs(z);
        for (std::size_t k = n; k-- > 0;) {
            dp = dp * z + p;
            p = p * z + c[k];
            bound = bound * az + std::abs(c[k]);
        }
        return {p / dp, std::abs(p) <= 16 * kUnitRoundoff * bound};
    }
    // p(z) = z^n q(w), p'(z) = z^(n-1) (n q(w) - w q'(w)) with w = 1/z
    const ComplexLD w = 1.0L / z;
    const long double aw = std::abs(w);
    ComplexLD q = c[0], dq = 0;
    long double bound = std::abs(c[0]);
    for (std::size_t k = 1; k <= n; ++k) {
        dq = dq * w + q;
        q = q * w + c[k];
        bound = bound * aw + std::abs(c[k]);
    }
    const ComplexLD denom = static_cast<long double>(n) * q - w * dq;
    return {z * q / denom, std::abs(q) <= 16 * kUnitRoundoff * bound};
}

struct Update {
    ComplexLD correction;
    long double size;
    bool converged;
};

Update aberth_update(const NewtonRatio& ratio, const std::vector<ComplexLD>& z, std::size_t i, long double previous) {
    const NewtonStep s = ratio(z[i]);
    if (s.at_noise_floor || s.ratio == ComplexLD(0)) return {ComplexLD(0), 0, true};
    ComplexLD sum = 0;
    for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
    const ComplexLD w = s.ratio / (1.0L - s.ratio * sum);
    const long double size = std::abs(w);
    const long double scale = std::abs(z[i]);
    // converged at full precision, or stagnating at the evaluation noise level
    const bool converged = size <= 4 * kUnitRoundoff * scale ||
                           (size <= 1e-12L * std::max(scale, 1e-12L) && size >= 0.5L * previous);
    return {w, size, converged};
}

template <ExecPolicy Policy>
std::vector<ComplexLD> aberth(std::vector<ComplexLD> z, const NewtonRatio& ratio, int max_iterations) {
    const std::size_t n = z.size();
    std::vector<char> done(n, 0);
    std::vector<long double> last(n, std::numeric_limits<long double>::infinity());
    std::vector<ComplexLD> next(n);
    auto sweep = [&](std::size_t k) {
        if (done[k]) {
            next[k] = z[k];
            return;
        }
        const Update u = aberth_update(ratio, z, k, last[k]);
        next[k] = z[k] - u.correction;
        last[k] = u.size;
        done[k] = u.converged;
    };
    for (int it = 0; it < max_iterations; ++it) {
        const long count = static_cast<long>(n);
        if constexpr (Policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(static)
            for (long i = 0; i < count; ++i) sweep(static_cast<std::size_t>(i));
        } else {
            for (long i = 0; i < count; ++i) sweep(static_cast<std::size_t>(i));
        }
        z.swap(next);
        if (std::all_of(done.begin(), done.end(), [](char d) { return d != 0; })) break;
    }
    return z;
}

}  // namespace

NewtonRatio coefficient_ratio(std::span<const ComplexLD> coeffs) {
    std::vector<ComplexLD> c(coeffs.begin(), coeffs.end());
    return [c = std::move(c)](ComplexLD z) { return horner_ratio(c, z); };
}

std::vector<ComplexLD> initial_approximations(std::span<const ComplexLD> c) {
    const std::size_t n = c.size() - 1;
    std::vector<std::pair<long double, long double>> pts;  // (k, log|c_k|)
    for (std::size_t k = 0; k <= n; ++k)
        if (std::abs(c[k]) > 0) pts.emplace_back(static_cast<long double>(k), std::log(std::abs(c[k])));
    // upper convex hull, monotone chain
    std::vector<std::pair<long double, long double>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            const long double cross = (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
            if (cross >= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    std::vector<ComplexLD> z;
    z.reserve(n);
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        const auto m = static_cast<std::size_t>(hull[h + 1].first - hull[h].first);
        const long double radius = std::exp((hull[h].second - hull[h + 1].second) / static_cast<long double>(m));
        const long double offset = two_pi * static_cast<long double>(h) / static_cast<long double>(n) + 0.4L;
        for (std::size_t j = 0; j < m; ++j) {
            const long double angle = two_pi * static_cast<long double>(j) / static_cast<long double>(m) + offset;
            z.push_back(std::polar(radius, angle));
        }
    }
    return z;
}

std::vector<ComplexLD> aberth_serial(std::vector<ComplexLD> initial, const NewtonRatio& ratio, int max_iterations) {
    return aberth<ExecPolicy::serial>(std::move(initial), ratio, max_iterations);
}

std::vector<ComplexLD> aberth_parallel(std::vector<ComplexLD> initial, const NewtonRatio& ratio, int max_iterations) {
    return aberth<ExecPolicy::parallel>(std::move(initial), ratio, max_iterations);
}

std::vector<ComplexLD> aberth_serial(std::span<const ComplexLD> coeffs, int max_iterations) {
    return aberth_serial(initial_approximations(coeffs), coefficient_ratio(coeffs), max_iterations);
}

std::vector<ComplexLD> aberth_parallel(std::span<const ComplexLD> coeffs, int max_iterations) {
    return aberth_parallel(initial_approximations(coeffs), coefficient_ratio(coeffs), max_iterations);
}

}  // namespace kernels

double root_residual(std::span<const ComplexLD> c, ComplexLD r) {
    if (c.empty()) return 0.0;
    const std::size_t n = c.size() - 1;
    long double norm = 0;
    for (const auto& x : c) norm = std::max(norm, std::abs(x));
    const long double ar = std::abs(r);
    if (ar <= 1.0L) {
        ComplexLD p = 0;
        for (std::size_t k = c.size(); k-- > 0;) p = p * r + c[k];
        return static_cast<double>(std::abs(p) / (1.0L + norm));
    }
    // |p(r)| / (1 + norm |r|^n) = |p(r) / r^n| / (|r|^-n + norm)
    const ComplexLD w = 1.0L / r;
    ComplexLD q = 0;
    for (std::size_t k = 0; k <= n; ++k) q = q * w + c[k];
    return static_cast<double>(std::abs(q) / (std::pow(std::abs(w), static_cast<long double>(n)) + norm));
}

double root_residual(const Poly& p, ComplexLD r) {
    std::vector<ComplexLD> c;
    for (long double x : p.to_long_double()) c.emplace_back(x, 0.0L);
    return root_residual(c, r);
}

namespace {

bool lex_less(Complex a, Complex b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); }

std::vector<ComplexLD> solve_nonzero_constant(std::span<const ComplexLD> c, const RootOptions& opts) {
    if (c.size() == 2) return {-c[0] / c[1]};
    return opts.policy == ExecPolicy::parallel ? kernels::aberth_parallel(c, opts.max_iterations)
                                               : kernels::aberth_serial(c, opts.max_iterations);
}

/// Roots with repetition; zero roots split off exactly.
std::vector<ComplexLD> solve(std::span<const ComplexLD> c, const RootOptions& opts) {
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros] == ComplexLD(0)) ++zeros;
    std::vector<ComplexLD> roots(zeros, ComplexLD(0));
    auto rest = c.subspan(zeros);
    if (rest.size() > 1) {
        auto r = solve_nonzero_constant(rest, opts);
        roots.insert(roots.end(), r.begin(), r.end());
    }
    return roots;
}

}  // namespace

std::vector<Root> poly_roots(const Poly& p, const RootOptions& opts, const kernels::NewtonRatio* ratio) {
    if (p.degree() < 1) throw Error("poly_roots: constant polynomial has no roots");
    std::vector<ComplexLD> pc;
    for (long double x : p.to_long_double()) pc.emplace_back(x, 0.0L);
    const auto factors = square_free_decomposition(p);
    std::vector<Root> out;
    for (const auto& [factor, mult] : factors) {
        std::vector<ComplexLD> fc;
        for (long double x : factor.to_long_double()) fc.emplace_back(x, 0.0L);
        std::vector<ComplexLD> roots;
        if (ratio && factors.size() == 1 && mult == 1 && fc.size() > 2) {
            // square-free, so at most a simple root at 0; deflate it from the ratio
            kernels::NewtonRatio deflated = *ratio;
            std::span<const ComplexLD> rest(fc);
            if (fc.front() == ComplexLD(0)) {
                roots.push_back(ComplexLD(0));
                rest = rest.subspan(1);
                deflated = [ratio](ComplexLD z) {
                    const kernels::NewtonStep s = (*ratio)(z);
                    if (s.at_noise_floor || s.ratio == ComplexLD(0)) return s;
                    return kernels::NewtonStep{1.0L / (1.0L / s.ratio - 1.0L / z), false};
                };
            }
            if (rest.size() > 2) {
                auto init = kernels::initial_approximations(rest);
                auto r = opts.policy == ExecPolicy::parallel ? kernels::aberth_parallel(std::move(init), deflated, opts.max_iterations)
                                                             : kernels::aberth_serial(std::move(init), deflated, opts.max_iterations);
                roots.insert(roots.end(), r.begin(), r.end());
            } else {
                roots.push_back(-rest[0] / rest[1]);
            }
        } else {
            roots = solve(fc, opts);
        }
        for (const auto& r : roots) {
            if (root_residual(pc, r) > opts.eps || root_residual(fc, r) > opts.eps) throw Error("roots not validated");
            Complex v(static_cast<double>(r.real()), static_cast<double>(r.imag()));
            out.push_back({v, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return lex_less(a.value, b.value); });
    return out;
}

std::vector<Complex> complex_poly_roots(std::span<const ComplexLD> coeffs, const RootOptions& opts) {
    std::size_t n = coeffs.size();
    while (n > 0 && coeffs[n - 1] == ComplexLD(0)) --n;
    if (n < 2) throw Error("complex_poly_roots: constant polynomial has no roots");
    auto c = coeffs.first(n);
    std::vector<Complex> out;
    for (const auto& r : solve(c, opts)) {
        if (root_residual(c, r) > opts.eps) throw Error("roots not validated");
        out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::optional<Rational> recognize_rational_root(const Poly& p, Complex r) {
    const double x = r.real();
    if (!std::isfinite(x) || std::abs(x) > 1e15 || std::abs(r.imag()) > 1e-7 * std::max(1.0, std::abs(x))) return std::nullopt;
    if (p(Rational(0)) == 0 && std::abs(x) < 1e-9) return Rational(0);
    for (const Rational& q : convergents(x, mpz_class("1000000000000")))
        if (std::abs(static_cast<double>(to_long_double(q)) - x) <= 1e-6 * std::max(1.0, std::abs(x)) && p(q) == 0) return q;
    return std::nullopt;
}

}  // namespace recomp
