#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recomp/parallel.hpp"
#include "recomp/ratmap.hpp"

namespace recomp {

/// A = U o V with the composition cached.
class Decomposition {
public:
    /// Throws if U or V is constant.
    Decomposition(RatMap u, RatMap v);

    const RatMap& U() const { return u_; }
    const RatMap& V() const { return v_; }
    const RatMap& composed() const { return composed_; }

private:
    RatMap u_, v_, composed_;
};

/// V o U.
RatMap elementary_transform(const Decomposition& d);

/// A o X == X o B exactly.
bool semiconjugacy_check(const RatMap& A, const RatMap& B, const RatMap& X);

/// A Moebius mu with U2 = U1 o mu and V2 = mu^-1 o V1, verified exactly, or
/// nullopt. Throws when the two decompositions do not compose to the same
/// map or deg V differs.
std::optional<Moebius> are_equivalent_decompositions(const Decomposition& d1, const Decomposition& d2);

/// Preimage of a point: the distinct points z with f(z) = value. Rational
/// roots are returned exactly. Sorted with finite points by (re, im) first
/// and infinity last. Throws Error("fiber degenerate") when value is a
/// critical value.
std::vector<PointP1> fiber(const RatMap& f, const PointP1& value);

struct BlockPartition {
    PointP1 basepoint = PointP1::infinity();
    std::vector<PointP1> fiber;
    /// Indices into fiber, one block per point of U^-1{basepoint}.
    std::vector<std::vector<std::size_t>> blocks;
};

/// Fiber of d.composed over the basepoint split by the V-image of each point.
BlockPartition blocks(const Decomposition& d, const PointP1& basepoint);

/// Index of the block of p.blocks containing the given fiber point.
std::size_t block_containing(const BlockPartition& p, const PointP1& point);

struct Degree2Search {
    std::vector<Decomposition> decompositions;
    /// False when no basepoint with a fully rational fiber was found and the
    /// involutions were built from a numeric fiber and rationalized.
    bool exact_fiber = true;
    PointP1 basepoint = PointP1::infinity();
    std::vector<std::string> notes;
};

/// All decompositions F = U o V with deg U = deg V = 2 defined over Q, one
/// per equivalence class. Requires deg F = 4.
Degree2Search find_degree2_decompositions(const RatMap& F, ExecPolicy policy = ExecPolicy::parallel);

}  // namespace recomp
