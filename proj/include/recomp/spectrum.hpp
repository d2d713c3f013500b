#pragma once

#include <map>
#include <string>
#include <vector>

#include "recomp/ratmap.hpp"
#include "recomp/roots.hpp"

namespace recomp {

/// Fixed points of F^{on s}: the finite ones are the roots of
/// num(F^s) - z * den(F^s); infinity carries the remaining multiplicity.
struct PeriodicDivisor {
    int period = 1;
    Poly finite_part;
    int infinity_multiplicity = 0;
};

struct SpectrumEntry {
    Complex multiplier;
    int mult = 1;
    /// The fixed point of F^s the multiplier belongs to.
    PointP1 point = PointP1::infinity();
};

struct MultiplierSpectrum {
    int degree = 0;
    std::map<int, std::vector<SpectrumEntry>> periods;

    /// Multipliers of period s repeated by multiplicity, sorted by (re, im).
    std::vector<Complex> flattened(int s) const;
};

struct SpectrumOptions {
    RootOptions roots;
    /// Chordal tolerance for accepting a point as fixed by F^s.
    double fixed_tol = 1e-6;
    ExecPolicy policy = ExecPolicy::parallel;
};

PeriodicDivisor periodic_divisor(const RatMap& f, int s);

/// p/p' for p = num(F^s) - z den(F^s), evaluated by iterating the homogeneous
/// form of F on (z : 1) with forward-mode derivatives instead of expanding
/// F^s. Far better conditioned than the monomial coefficients for s >= 2.
kernels::NewtonRatio periodic_newton_ratio(const RatMap& f, int s);

/// (F^s)'(p) as the product of chart derivatives along the orbit of p, with
/// w = 1/z as the chart near infinity. Throws if p is not fixed by F^s.
Complex multiplier(const RatMap& f, int s, const PointP1& p, double fixed_tol = 1e-6);

MultiplierSpectrum spectrum(const RatMap& f, int s_max, const SpectrumOptions& opts = {});

struct IsospectralReport {
    bool isospectral = false;
    /// Worst pairing residual |a - b| / max(1, |a|) per period.
    std::map<int, double> worst_residual;
    std::vector<std::string> warnings;
};

/// Sorted greedy multiset matching with relative tolerance tol; a period that
/// only matches at 10 * tol passes with a warning.
IsospectralReport compare_spectra(const MultiplierSpectrum& a, const MultiplierSpectrum& b, double tol);

/// Throws on degree mismatch or degree < 2.
IsospectralReport isospectral(const RatMap& f, const RatMap& g, int s_max, double tol = 1e-7,
                              const SpectrumOptions& opts = {});

/// sum mult / (1 - lambda) over the period-1 multipliers. Equals 1 for every
/// map without a multiplier equal to 1.
Complex holomorphic_index_sum(const MultiplierSpectrum& spec);

}  // namespace recomp
