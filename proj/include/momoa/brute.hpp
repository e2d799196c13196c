#pragma once

#include "momoa/halfspace.hpp"
#include "momoa/instance.hpp"

#include <vector>

namespace momoa {

/// Hull description computed by exhaustive enumeration. Deliberately naive and
/// independent of the solver modules -- this is the verification oracle.
struct BruteHull {
    std::vector<ObjPoint> extreme_points; // lex sorted
    std::vector<Halfspace> facets;        // canonical, lex sorted
};

/// Full enumeration of Q (all permutations / all subsets / the listed points),
/// deduplicated and lex sorted. Throws TooLarge beyond assignment n <= 8 /
/// knapsack n <= 20.
std::vector<ObjPoint> brute_force_Q(const Instance& inst);

/// conv(points) + nonnegative orthant, by testing every p-subset of
/// (points + rays) as a candidate facet. Points must be integral;
/// limits: <= 5000 points, p <= 5.
BruteHull brute_force_hull(const std::vector<ObjPoint>& points);

/// Membership of y in conv(points) + R^p_>= decided by the feasibility of the
/// target-cut dual (max sum lambda s.t. sum lambda_i y_i <= y, lambda >= 0,
/// optimum >= 1 after shifting everything positive). Test oracle.
bool dtsep_member(const std::vector<ObjPoint>& points, const ObjPoint& y);

} // namespace momoa
