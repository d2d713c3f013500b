#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "recomp/parallel.hpp"
#include "recomp/poly.hpp"

namespace recomp {

struct RootOptions {
    /// Bound on |p(r)| / (1 + ||p|| * max(1, |r|)^deg), ||p|| the max-abs coefficient.
    double eps = 1e-10;
    int max_iterations = 2000;
    ExecPolicy policy = ExecPolicy::parallel;
};

struct Root {
    Complex value;
    int multiplicity = 1;
};

namespace kernels {

struct NewtonStep {
    ComplexLD ratio;  // p(z) / p'(z)
    bool at_noise_floor = false;
};

/// Evaluates p/p' for the polynomial whose roots are sought. Must be safe to
/// call concurrently.
using NewtonRatio = std::function<NewtonStep(ComplexLD)>;

/// p/p' by Horner on the coefficients (reversed Horner for |z| > 1).
NewtonRatio coefficient_ratio(std::span<const ComplexLD> coeffs);

/// Aberth-Ehrlich simultaneous iteration in Jacobi form: every sweep updates
/// all approximations from the previous sweep, so the result does not depend
/// on the order in which roots are updated.
std::vector<ComplexLD> aberth_serial(std::vector<ComplexLD> initial, const NewtonRatio& ratio, int max_iterations);
/// Same sweep as aberth_serial with the per-root update distributed over
/// OpenMP threads. Bit-identical to the serial kernel.
std::vector<ComplexLD> aberth_parallel(std::vector<ComplexLD> initial, const NewtonRatio& ratio, int max_iterations);

/// Coefficient-driven convenience forms. Leading and constant coefficient
/// must be nonzero.
std::vector<ComplexLD> aberth_serial(std::span<const ComplexLD> coeffs, int max_iterations);
std::vector<ComplexLD> aberth_parallel(std::span<const ComplexLD> coeffs, int max_iterations);

/// Initial approximations on circles whose radii come from the Newton
/// polygon of log|c_k|.
std::vector<ComplexLD> initial_approximations(std::span<const ComplexLD> coeffs);

}  // namespace kernels

/// |p(r)| / (1 + ||p|| * max(1,|r|)^deg), evaluated without overflow.
double root_residual(std::span<const ComplexLD> coeffs, ComplexLD r);
double root_residual(const Poly& p, ComplexLD r);

/// Roots of an exact polynomial with exact multiplicities. Multiplicities
/// come from the square-free decomposition over Q; each square-free factor
/// is then solved numerically and every root is residual-checked against p.
/// Throws on constant input and with "roots not validated" when a residual
/// exceeds eps. Output is sorted by (re, im).
///
/// When `ratio` is given and p is square-free, the iteration evaluates p/p'
/// through it instead of the expanded coefficients; callers use this when p
/// has a better-conditioned evaluation than its monomial form.
std::vector<Root> poly_roots(const Poly& p, const RootOptions& opts = {}, const kernels::NewtonRatio* ratio = nullptr);

/// Numeric roots (with repetition) of a complex-coefficient polynomial,
/// residual-validated like poly_roots. Sorted by (re, im).
std::vector<Complex> complex_poly_roots(std::span<const ComplexLD> coeffs, const RootOptions& opts = {});

/// If r is numerically real and a short continued-fraction convergent q of
/// Re r satisfies p(q) == 0 exactly, returns q.
std::optional<Rational> recognize_rational_root(const Poly& p, Complex r);

}  // namespace recomp
