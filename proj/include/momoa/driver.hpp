#pragma once

#include "momoa/oracles.hpp"
#include "momoa/polyhedron.hpp"
#include "momoa/separation.hpp"
#include "momoa/stats.hpp"

#include <optional>
#include <set>

namespace momoa {

struct RunConfig {
    OracleKind oracle = OracleKind::Sep;
    ArithmeticMode mode = ArithmeticMode::Exact;
    std::optional<double> time_limit_seconds;
    Rational violation_eps = Rational(1, 1000);   // float mode row-violation tolerance
    Rational inside_match_eps = Rational(1, 1000); // float mode insideVertices matching
    long long scale_factor = 1000000000;          // float mode cut integerization
    std::optional<long long> max_iterations;      // sweep cap
    bool use_relaxation = false;                  // knapsack: separate against the LP relaxation
    bool record_snapshots = false;
    int snapshot_cadence = 1; // record every k-th sweep
    bool check_lemma = true;
};

/// A valid lower bound set: every point of Q satisfies every halfspace.
struct LowerBoundSet {
    long long iteration = 0;
    std::vector<ObjPoint> vertices;
    std::vector<Halfspace> halfspaces;
};

struct RunResult {
    bool solved = false;
    std::vector<ObjPoint> extreme_points; // lexicographic
    std::vector<Halfspace> facets;        // canonical integer form
    RunStats stats;
    std::vector<LowerBoundSet> snapshots;
    OracleKind oracle = OracleKind::Sep;
    ArithmeticMode mode = ArithmeticMode::Exact;
};

struct RunState {
    OuterApprox approx;
    std::set<ObjPoint, LexLess> inside_vertices;
    MasterLP master;
    long long iteration = 0;
    RunStats stats;
};

/// The outer-approximation main loop: sweep all unmatched vertices of the current
/// approximation, collect the separating hyperplanes, add them as one batch, and
/// repeat until a sweep yields no cut (solved) or a time/iteration limit is hit
/// (solved = false, with the current approximation as a valid partial result).
RunResult run(const Instance& inst, const RunConfig& cfg);

/// Copy of the current (vertices, halfspaces); contains Q+ at any time.
LowerBoundSet snapshot(const RunState& state);

/// True iff some cached inside point is within eps in every coordinate
/// (exact equality when eps is zero).
bool match_inside(const ObjPoint& y, const RunState& state, const Rational& eps);

} // namespace momoa
