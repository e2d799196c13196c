#pragma once

#include "momoa/rational.hpp"

#include <vector>

namespace momoa {

enum class RowSense { Ge, Le, Eq };

/// min c·x subject to rows; variables are >= 0 unless flagged free.
template <typename T>
struct BasicLinearProgram {
    struct Row {
        std::vector<T> coeffs;
        RowSense sense = RowSense::Ge;
        T rhs{};
    };
    std::vector<T> objective;
    std::vector<Row> rows;
    std::vector<bool> free_vars; // empty means all variables >= 0
};

template <typename T>
struct BasicLpSolution {
    T objective{};
    std::vector<T> variables;
    std::vector<int> basis_tight_rows; // rows active at the returned basic solution
    long pivots = 0;
};

using LinearProgram = BasicLinearProgram<Rational>;
using LpSolution = BasicLpSolution<Rational>;
using LinearProgramD = BasicLinearProgram<double>;
using LpSolutionD = BasicLpSolution<double>;

/// Exact two-phase primal simplex with Bland's rule; returns an optimal basic
/// solution (an extreme point of the feasible region).
/// Throws LpInfeasible / LpUnbounded.
LpSolution lp_solve(const LinearProgram& lp);

/// Floating twin used in float mode, 1e-9 zero tolerance (the tightest setting
/// of the solvers the published experiments used).
LpSolutionD lp_solve(const LinearProgramD& lp);

LinearProgramD to_double(const LinearProgram& lp);

} // namespace momoa
