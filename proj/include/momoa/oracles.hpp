#pragma once

#include "momoa/instance.hpp"
#include "momoa/rational.hpp"

#include <functional>
#include <variant>
#include <vector>

namespace momoa {

/// Decision-space witness for a weighted-sum optimum: a permutation (assignment),
/// chosen item indices (knapsack), or fractional item amounts (knapsack relaxation).
using Witness = std::variant<std::monostate, std::vector<int>, std::vector<Rational>>;

struct WsResult {
    Rational value; // = w·point, exact
    ObjPoint point; // a point of Q attaining min w·y, lexicographically smallest among ties
    Witness witness;
};

/// min {w·y : y in Q}, dispatched on the instance kind. Requires w >= 0, w != 0.
WsResult ws_solve(const Instance& inst, const Weight& w);

/// Hungarian algorithm on the aggregated cost matrix, with exact lexicographic
/// tie-breaking on the objective vector.
WsResult ws_assignment(const Instance& inst, const Weight& w);

/// Dynamic program over capacity; returns the negated profit vector (minimization
/// convention), lexicographically smallest among ties.
WsResult ws_knapsack(const Instance& inst, const Weight& w);

/// Fractional (LP-relaxation) knapsack, solved greedily by profit/weight ratio.
/// The returned point belongs to the relaxed Q, so outer approximations built from
/// it are valid lower bound sets for the integer problem.
WsResult ws_knapsack_relax(const Instance& inst, const Weight& w);

struct IdealPoint {
    ObjPoint point;                   // componentwise minimum over Q
    std::vector<ObjPoint> minimizers; // the p per-objective minimizers, in objective order
};

using WeightedSumFn = std::function<WsResult(const Weight&)>;

IdealPoint ideal_point(const Instance& inst);
IdealPoint ideal_point(const WeightedSumFn& oracle, int p);

} // namespace momoa
