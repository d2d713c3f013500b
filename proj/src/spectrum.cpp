#include "recomp/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace recomp {

namespace {

using CPoly = std::vector<ComplexLD>;

ComplexLD horner(const CPoly& c, ComplexLD z) {
    ComplexLD acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

CPoly lift(const Poly& p, int degree, bool reverse) {
    CPoly c(static_cast<std::size_t>(degree) + 1, ComplexLD(0));
    auto ld = p.to_long_double();
    for (std::size_t k = 0; k < ld.size(); ++k) c[reverse ? static_cast<std::size_t>(degree) - k : k] = ld[k];
    return c;
}

CPoly differentiate(const CPoly& c) {
    CPoly d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<long double>(k));
    return d;
}

/// Derivatives of F written in the two affine charts of P^1 (chart 0: z,
/// chart 1: w = 1/z) on both source and target side.
class ChartMaps {
public:
    explicit ChartMaps(const RatMap& f) {
        const int d = f.degree();
        num_[0] = lift(f.num(), d, false);
        den_[0] = lift(f.den(), d, false);
        num_[1] = lift(f.num(), d, true);
        den_[1] = lift(f.den(), d, true);
        for (int c = 0; c < 2; ++c) {
            dnum_[c] = differentiate(num_[c]);
            dden_[c] = differentiate(den_[c]);
        }
    }

    /// d/dt of (target chart) o F o (source chart)^{-1} at coordinate t.
    ComplexLD derivative(int source, int target, ComplexLD t) const {
        ComplexLD a = horner(num_[source], t), da = horner(dnum_[source], t);
        ComplexLD b = horner(den_[source], t), db = horner(dden_[source], t);
        if (target == 1) {
            std::swap(a, b);
            std::swap(da, db);
        }
        return (da * b - a * db) / (b * b);
    }

private:
    CPoly num_[2], den_[2], dnum_[2], dden_[2];
};

int chart_of(const std::array<ComplexLD, 2>& h) { return std::abs(h[0]) > std::abs(h[1]) ? 1 : 0; }

ComplexLD coordinate(const std::array<ComplexLD, 2>& h, int chart) { return chart == 0 ? h[0] / h[1] : h[1] / h[0]; }

Complex multiplier_impl(const RatMap& f, const ChartMaps& charts, int s, const PointP1& p, double fixed_tol) {
    const auto start = p.homogeneous();
    const int start_chart = chart_of(start);
    auto h = start;
    int chart = start_chart;
    ComplexLD product = 1;
    for (int k = 0; k < s; ++k) {
        const auto image = f.eval_homogeneous(h);
        const int next_chart = k + 1 == s ? start_chart : chart_of(image);
        product *= charts.derivative(chart, next_chart, coordinate(h, chart));
        h = image;
        chart = next_chart;
    }
    if (chordal_distance(h, start) > fixed_tol) throw Error("multiplier: point is not fixed by the iterate");
    return {static_cast<double>(product.real()), static_cast<double>(product.imag())};
}

struct Dual {
    ComplexLD v, d;
};

Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }

bool lex_less(Complex a, Complex b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); }

}  // namespace

/// p/p' for p = num(F^s) - z den(F^s), evaluated by iterating the homogeneous
/// form of F on (z : 1) with forward-mode derivatives. Each step rescales the
/// pair by a constant, which leaves p/p' unchanged.
kernels::NewtonRatio periodic_newton_ratio(const RatMap& f, int s) {
    const int d = f.degree();
    std::vector<long double> n(static_cast<std::size_t>(d) + 1, 0.0L), m(n);
    auto nl = f.num().to_long_double(), dl = f.den().to_long_double();
    std::copy(nl.begin(), nl.end(), n.begin());
    std::copy(dl.begin(), dl.end(), m.begin());
    return [n, m, d, s](ComplexLD z) {
        constexpr long double u = std::numeric_limits<long double>::epsilon();
        Dual a{z, 1}, b{1, 0};
        std::vector<Dual> ap(static_cast<std::size_t>(d) + 1), bp(ap.size());
        for (int step = 0; step < s; ++step) {
            const long double scale = 1.0L / std::max(std::abs(a.v), std::abs(b.v));
            a = {a.v * scale, a.d * scale};
            b = {b.v * scale, b.d * scale};
            ap[0] = bp[0] = {1, 0};
            for (std::size_t k = 1; k < ap.size(); ++k) {
                ap[k] = ap[k - 1] * a;
                bp[k] = bp[k - 1] * b;
            }
            Dual na{0, 0}, nb{0, 0};
            for (std::size_t k = 0; k < ap.size(); ++k) {
                const Dual t = ap[k] * bp[ap.size() - 1 - k];
                na = {na.v + n[k] * t.v, na.d + n[k] * t.d};
                nb = {nb.v + m[k] * t.v, nb.d + m[k] * t.d};
            }
            a = na;
            b = nb;
        }
        const ComplexLD p = a.v - z * b.v;
        const ComplexLD dp = a.d - b.v - z * b.d;
        const bool floor = std::abs(p) <= 32 * u * (std::abs(a.v) + std::abs(z) * std::abs(b.v));
        return kernels::NewtonStep{p / dp, floor};
    };
}

std::vector<Complex> MultiplierSpectrum::flattened(int s) const {
    std::vector<Complex> out;
    auto it = periods.find(s);
    if (it == periods.end()) return out;
    for (const auto& e : it->second) out.insert(out.end(), static_cast<std::size_t>(e.mult), e.multiplier);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

PeriodicDivisor periodic_divisor(const RatMap& f, int s) {
    if (f.degree() < 2) throw Error("periodic_divisor: degree must be at least 2");
    if (s < 1) throw Error("periodic_divisor: period must be positive");
    const RatMap fs = iterate(f, s);
    PeriodicDivisor div;
    div.period = s;
    div.finite_part = fs.num() - Poly::z() * fs.den();
    long total = 1;
    for (int k = 0; k < s; ++k) total *= f.degree();
    div.infinity_multiplicity = static_cast<int>(total + 1) - div.finite_part.degree();
    return div;
}

Complex multiplier(const RatMap& f, int s, const PointP1& p, double fixed_tol) {
    if (s < 1) throw Error("multiplier: period must be positive");
    return multiplier_impl(f, ChartMaps(f), s, p, fixed_tol);
}

MultiplierSpectrum spectrum(const RatMap& f, int s_max, const SpectrumOptions& opts) {
    if (f.degree() < 2) throw Error("spectrum: degree must be at least 2");
    MultiplierSpectrum spec;
    spec.degree = f.degree();
    const ChartMaps charts(f);
    for (int s = 1; s <= s_max; ++s) {
        const PeriodicDivisor div = periodic_divisor(f, s);
        std::vector<SpectrumEntry> entries;
        if (div.finite_part.degree() >= 1) {
            const auto ratio = periodic_newton_ratio(f, s);
            for (const auto& r : poly_roots(div.finite_part, opts.roots, &ratio)) entries.push_back({Complex(), r.multiplicity, PointP1(r.value)});
        }
        for_each_index(entries.size(), opts.policy, [&](std::size_t i) {
            entries[i].multiplier = multiplier_impl(f, charts, s, entries[i].point, opts.fixed_tol);
        });
        if (div.infinity_multiplicity > 0)
            entries.push_back({multiplier_impl(f, charts, s, PointP1::infinity(), opts.fixed_tol), div.infinity_multiplicity,
                               PointP1::infinity()});
        spec.periods.emplace(s, std::move(entries));
    }
    return spec;
}

IsospectralReport compare_spectra(const MultiplierSpectrum& a, const MultiplierSpectrum& b, double tol) {
    IsospectralReport report;
    report.isospectral = true;
    for (const auto& [s, unused] : a.periods) {
        (void)unused;
        if (!b.periods.count(s)) {
            report.isospectral = false;
            report.warnings.push_back("period " + std::to_string(s) + " missing from second spectrum");
            continue;
        }
        const auto xs = a.flattened(s);
        const auto ys = b.flattened(s);
        if (xs.size() != ys.size()) {
            report.isospectral = false;
            report.worst_residual[s] = std::numeric_limits<double>::infinity();
            continue;
        }
        std::vector<char> used(ys.size(), 0);
        double worst = 0;
        for (const Complex& x : xs) {
            std::size_t best = ys.size();
            double best_dist = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < ys.size(); ++j) {
                if (used[j]) continue;
                const double dist = std::abs(x - ys[j]);
                if (dist < best_dist) {
                    best_dist = dist;
                    best = j;
                }
            }
            used[best] = 1;
            worst = std::max(worst, best_dist / std::max(1.0, std::abs(x)));
        }
        report.worst_residual[s] = worst;
        if (worst > 10 * tol) {
            report.isospectral = false;
        } else if (worst > tol) {
            report.warnings.push_back("period " + std::to_string(s) + " matched only at 10*tol (residual " +
                                      std::to_string(worst) + ")");
        }
    }
    return report;
}

IsospectralReport isospectral(const RatMap& f, const RatMap& g, int s_max, double tol, const SpectrumOptions& opts) {
    if (f.degree() != g.degree()) throw Error("isospectral: degree mismatch");
    if (f.degree() < 2) throw Error("isospectral: degree must be at least 2");
    return compare_spectra(spectrum(f, s_max, opts), spectrum(g, s_max, opts), tol);
}

Complex holomorphic_index_sum(const MultiplierSpectrum& spec) {
    Complex sum = 0;
    auto it = spec.periods.find(1);
    if (it == spec.periods.end()) throw Error("holomorphic_index_sum: period 1 not computed");
    for (const auto& e : it->second) sum += static_cast<double>(e.mult) / (1.0 - e.multiplier);
    return sum;
}

}  // namespace recomp
