#pragma once

#include "momoa/halfspace.hpp"

#include <cstdint>
#include <vector>

namespace momoa {

/// Double description of an outer approximation S: the vertex list, the halfspace
/// list, and the p recession rays e_1..e_p (fixed, never updated). A value is
/// immutable once built; add_halfspaces returns the refined copy, so snapshots
/// are plain copies and reads are safe from any thread.
class OuterApprox {
public:
    /// S = ideal + nonnegative orthant: one vertex, halfspaces {y_i >= ideal_i}.
    static OuterApprox from_ideal_point(const ObjPoint& ideal);

    /// Intersect with a batch of cuts (each w >= 0, w != 0) and return the updated
    /// double description. Implied cuts are discarded, redundant halfspaces removed.
    /// Throws EmptyPolyhedron if the result has no vertex -- impossible for cuts
    /// produced by a correct oracle, so it signals an internal inconsistency.
    OuterApprox add_halfspaces(const std::vector<Halfspace>& cuts) const;

    /// Lexicographically ordered.
    const std::vector<ObjPoint>& vertices() const { return verts_; }

    /// Canonical (coprime integer) form, in insertion order.
    const std::vector<Halfspace>& halfspaces() const { return hs_; }

    int dim() const { return dim_; }

    /// Exact containment against every stored halfspace.
    bool contains(const ObjPoint& y) const;

    /// Structural checks (vertex feasibility/tightness, ray validity, dedup);
    /// throws InternalError on violation. Test hook.
    void check_invariants() const;

private:
    OuterApprox() = default;

    using Bits = std::vector<std::uint64_t>;

    void insert_cut(Halfspace cut);
    void remove_redundant();
    void rebuild_tight_sets();
    bool adjacent(const Bits& a, const Bits& b, int skip_v1, int skip_v2, int skip_ray) const;

    int dim_ = 0;
    std::vector<ObjPoint> verts_;
    std::vector<Halfspace> hs_;
    std::vector<Bits> vert_tight_; // [vertex] -> bitset over halfspace indices
    std::vector<Bits> ray_tight_;  // [ray i]  -> bitset over halfspace indices
};

} // namespace momoa
