#include "recomp/sampling.hpp"

namespace recomp {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

Rational random_rational(Rng& rng, long max_num, long max_den) {
    Rational r(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
    r.canonicalize();
    return r;
}

Rational random_lambda(Rng& rng) {
    for (;;) {
        Rational l = random_rational(rng, 12, 7);
        if (l != 0 && l != 1) return l;
    }
}

RatMap random_map(Rng& rng, int degree, long coeff_bound) {
    for (;;) {
        const int den_degree = static_cast<int>(uniform(rng, 0, degree));
        const bool num_leads = den_degree < degree || uniform(rng, 0, 1) == 0;
        auto draw = [&](int deg, bool leading_nonzero) {
            std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
            for (auto& x : c) x = uniform(rng, -coeff_bound, coeff_bound);
            if (leading_nonzero && c.back() == 0) c.back() = uniform(rng, 0, 1) ? 1 : -1;
            return Poly(std::move(c));
        };
        Poly num = draw(degree, num_leads);
        Poly den = draw(den_degree, true);
        if (num.is_zero()) continue;
        RatMap f(std::move(num), std::move(den));
        if (f.degree() == degree) return f;
    }
}

Moebius random_moebius(Rng& rng, long bound) {
    for (;;) {
        const long a = uniform(rng, -bound, bound), b = uniform(rng, -bound, bound);
        const long c = uniform(rng, -bound, bound), d = uniform(rng, -bound, bound);
        if (a * d - b * c != 0) return Moebius(a, b, c, d);
    }
}

}  // namespace recomp
