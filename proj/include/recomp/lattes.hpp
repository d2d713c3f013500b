#pragma once

#include <array>
#include <vector>

#include "recomp/decomp.hpp"
#include "recomp/ratmap.hpp"

namespace recomp {

/// L(z) = (z^2 - lambda)^2 / (4 z (z - 1)(z - lambda)) on the Legendre curve
/// y^2 = x (x - 1)(x - lambda).
struct LegendreLattes {
    Rational lambda;
    RatMap map;
    Rational j;
};

/// z -> (z^4 - 2a z^2 - 8b z + a^2) / (4z^3 + 4a z + 4b) on y^2 = x^3 + a x + b.
struct WeierstrassLattes {
    Rational a, b;
    RatMap map;
    Rational j;
};

/// 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2). Throws for lambda in {0, 1}.
Rational legendre_j(const Rational& lambda);
/// Complex version for cross-ratios that are not rational.
Complex legendre_j(Complex lambda);

/// Throws Error("degenerate Legendre parameter") for lambda in {0, 1}.
LegendreLattes legendre_map(const Rational& lambda);

/// Throws when 4a^3 + 27b^2 = 0.
WeierstrassLattes weierstrass_map(const Rational& a, const Rational& b);

/// The three decompositions C_i o D_i of L into degree-2 factors, one for
/// each 2-torsion subgroup; D_i identifies z with its translate by one of the
/// points 0, 1, lambda. Each is checked to compose to L and to be
/// inequivalent to the others.
std::array<Decomposition, 3> canonical_decompositions(const LegendreLattes& L);

struct PostcriticalSet {
    std::vector<PointP1> points;
    bool closed = false;
};

/// Forward orbits of the critical values, clustered: finite points within
/// cluster_tol relative distance, infinity within cluster_tol chordally.
/// Exact points are iterated exactly; an exact orbit that outgrows the
/// precision budget is reported as not closed.
PostcriticalSet postcritical_set(const RatMap& F, int max_iter = 64, double cluster_tol = 1e-8);

/// j of the elliptic curve branched over the four points: the cross-ratio
/// sending three of them to 0, 1, infinity gives lambda, then legendre_j.
/// Exact when all points are exact. Throws on repeated points.
Scalar j_from_quadruple(const std::array<PointP1, 4>& q);

/// j of a Lattes-like map from its postcritical quadruple. Throws
/// Error("not Lattes-like") unless the postcritical set is closed with four
/// points.
Scalar recover_j(const RatMap& F);

}  // namespace recomp
