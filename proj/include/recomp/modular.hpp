#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "recomp/parallel.hpp"
#include "recomp/poly.hpp"
#include "recomp/roots.hpp"

namespace recomp {

/// The level-2 modular polynomial as a table of integer coefficients c[i][k]
/// of x^i y^k. The default instance holds the classical values; the table is
/// mutable so transcription checks can be exercised against perturbed copies.
class Phi2 {
public:
    Phi2();
    static const Phi2& standard();

    const mpz_class& coeff(int i, int k) const { return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]; }
    void set_coeff(int i, int k, mpz_class value) { c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = std::move(value); }

    Rational operator()(const Rational& x, const Rational& y) const;
    ComplexLD operator()(ComplexLD x, ComplexLD y) const;

    /// Phi2(x, y) as a polynomial in y.
    Poly in_y(const Rational& x) const;
    std::array<ComplexLD, 4> in_y(ComplexLD x) const;

    /// |Phi2(x, y)| / (1 + |x|^3 + |y|^3).
    double normalized_residual(Complex x, Complex y) const;

    friend bool operator==(const Phi2&, const Phi2&) = default;

private:
    std::array<std::array<mpz_class, 4>, 4> c_;
};

/// Exact when both arguments are exact.
Scalar phi2_eval(const Scalar& x, const Scalar& y, const Phi2& phi = Phi2::standard());

struct Partner {
    Scalar value;
    int multiplicity = 1;
};

/// The three roots y of Phi2(j, y). For exact j multiplicities are exact and
/// rational roots are returned exactly.
std::vector<Partner> phi2_partners(const Scalar& j, const RootOptions& opts = {}, const Phi2& phi = Phi2::standard());

/// 64 (t + 4)^3 / t^2. Throws at t = 0.
Scalar klein_beta(const Scalar& t);

/// Roots t of 64 (t + 4)^3 - j t^2.
std::vector<Partner> beta_preimages(const Scalar& j, const RootOptions& opts = {});

struct KleinPartners {
    std::vector<Partner> partners;
    std::vector<std::string> warnings;
};

/// beta(1/t) over the beta-preimages t of j.
KleinPartners klein_partners(const Scalar& j, const RootOptions& opts = {});

/// t^e Phi2(beta(t), beta(1/t)) with e the smallest power clearing all
/// denominators.
Poly klein_identity_numerator(const Phi2& phi = Phi2::standard());

/// The numerator above is the zero polynomial.
bool verify_klein_identity(const Phi2& phi = Phi2::standard());

struct OrbitNode {
    Scalar j;
    int depth = 0;
    std::vector<std::string> warnings;
};

struct ModularOrbitGraph {
    std::vector<OrbitNode> nodes;
    /// Undirected, stored with first <= second; (u, u) is a self-loop.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    double dedup_tol = 1e-6;

    /// Number of nodes with depth <= d.
    std::size_t count_up_to(int depth) const;
};

struct OrbitOptions {
    double dedup_tol = 1e-6;
    RootOptions roots;
    ExecPolicy policy = ExecPolicy::parallel;
};

/// Breadth-first exploration of the Phi2 correspondence from j0. Partners
/// of each frontier node are computed independently; merging into the graph
/// happens in frontier order, so the result does not depend on the policy.
ModularOrbitGraph orbit_bfs(const Scalar& j0, int depth, const OrbitOptions& opts = {}, const Phi2& phi = Phi2::standard());

}  // namespace recomp
