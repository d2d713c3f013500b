#pragma once

#include <random>

#include "recomp/ratmap.hpp"

namespace recomp {

using Rng = std::mt19937_64;

/// p/q with |p| <= max_num, 1 <= q <= max_den.
Rational random_rational(Rng& rng, long max_num = 9, long max_den = 5);

/// A random exact Legendre parameter outside {0, 1}.
Rational random_lambda(Rng& rng);

/// Random map of exactly the given degree with small integer coefficients.
RatMap random_map(Rng& rng, int degree, long coeff_bound = 4);

/// Random invertible Moebius map with small integer entries.
Moebius random_moebius(Rng& rng, long bound = 3);

}  // namespace recomp
