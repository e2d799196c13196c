#include "momoa/lp.hpp"

#include "momoa/errors.hpp"

#include <algorithm>

namespace momoa {
namespace {

template <typename T>
struct Num {
    static int sign(const T& x) { return sgn(x); }
};

template <>
struct Num<double> {
    static constexpr double eps = 1e-9;
    static int sign(double x) { return x > eps ? 1 : (x < -eps ? -1 : 0); }
};

// Dense two-phase primal simplex. Bland's rule on both phases, so it terminates
// without any lexicographic machinery; the LPs here are small enough that the
// slow-but-safe rule wins.
template <typename T>
class Simplex {
public:
    explicit Simplex(const BasicLinearProgram<T>& lp) : lp_(lp) { build(); }

    BasicLpSolution<T> solve() {
        if (has_artificials_)
            phase1();
        phase2();
        return extract();
    }

private:
    void build() {
        const int n_orig = static_cast<int>(lp_.objective.size());
        if (!lp_.free_vars.empty() && static_cast<int>(lp_.free_vars.size()) != n_orig)
            throw InternalError("lp: free_vars size mismatch");
        for (const auto& row : lp_.rows)
            if (static_cast<int>(row.coeffs.size()) != n_orig)
                throw InternalError("lp: row width mismatch");

        pos_col_.resize(n_orig);
        neg_col_.assign(n_orig, -1);
        n_struct_ = 0;
        for (int j = 0; j < n_orig; ++j)
            pos_col_[j] = n_struct_++;
        for (int j = 0; j < n_orig; ++j)
            if (!lp_.free_vars.empty() && lp_.free_vars[j])
                neg_col_[j] = n_struct_++;

        const int m = static_cast<int>(lp_.rows.size());
        struct NRow {
            std::vector<T> a;
            T b{};
            RowSense sense = RowSense::Eq;
        };
        std::vector<NRow> rows(m);
        for (int i = 0; i < m; ++i) {
            NRow& r = rows[i];
            r.a.assign(n_struct_, T{});
            for (int j = 0; j < n_orig; ++j) {
                r.a[pos_col_[j]] = lp_.rows[i].coeffs[j];
                if (neg_col_[j] >= 0)
                    r.a[neg_col_[j]] = -lp_.rows[i].coeffs[j];
            }
            r.b = lp_.rows[i].rhs;
            r.sense = lp_.rows[i].sense;
            if (Num<T>::sign(r.b) < 0) {
                for (T& c : r.a)
                    c = -c;
                r.b = -r.b;
                if (r.sense == RowSense::Ge)
                    r.sense = RowSense::Le;
                else if (r.sense == RowSense::Le)
                    r.sense = RowSense::Ge;
            }
            // A >= row with zero rhs is the same constraint as <= after negation,
            // which seats a plain slack in the initial basis.
            if (r.sense == RowSense::Ge && Num<T>::sign(r.b) == 0) {
                for (T& c : r.a)
                    c = -c;
                r.sense = RowSense::Le;
            }
        }

        int n_cols = n_struct_;
        std::vector<int> slack_col(m, -1);
        for (int i = 0; i < m; ++i)
            if (rows[i].sense != RowSense::Eq)
                slack_col[i] = n_cols++;
        first_artif_ = n_cols;
        std::vector<int> artif_col(m, -1);
        for (int i = 0; i < m; ++i)
            if (rows[i].sense != RowSense::Le)
                artif_col[i] = n_cols++;
        n_cols_ = n_cols;
        has_artificials_ = n_cols_ > first_artif_;

        tab_.assign(m, std::vector<T>(n_cols_ + 1, T{}));
        basis_.assign(m, -1);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n_struct_; ++j)
                tab_[i][j] = rows[i].a[j];
            if (slack_col[i] >= 0)
                tab_[i][slack_col[i]] = rows[i].sense == RowSense::Le ? T{1} : T{-1};
            if (artif_col[i] >= 0)
                tab_[i][artif_col[i]] = T{1};
            tab_[i][n_cols_] = rows[i].b;
            basis_[i] = rows[i].sense == RowSense::Le ? slack_col[i] : artif_col[i];
        }

        cost2_.assign(n_cols_, T{});
        for (int j = 0; j < n_orig; ++j) {
            cost2_[pos_col_[j]] = lp_.objective[j];
            if (neg_col_[j] >= 0)
                cost2_[neg_col_[j]] = -lp_.objective[j];
        }
    }

    T reduced_cost(const std::vector<T>& cost, int j) const {
        T d = cost[j];
        for (std::size_t i = 0; i < tab_.size(); ++i) {
            const T& a = tab_[i][j];
            if (Num<T>::sign(a) != 0 && Num<T>::sign(cost[basis_[i]]) != 0)
                d -= cost[basis_[i]] * a;
        }
        return d;
    }

    void pivot(int row, int col) {
        ++pivots_;
        std::vector<T>& pr = tab_[row];
        const T piv = pr[col];
        for (T& c : pr)
            c /= piv;
        for (std::size_t i = 0; i < tab_.size(); ++i) {
            if (static_cast<int>(i) == row)
                continue;
            const T factor = tab_[i][col];
            if (Num<T>::sign(factor) == 0)
                continue;
            std::vector<T>& ri = tab_[i];
            for (int j = 0; j <= n_cols_; ++j)
                if (Num<T>::sign(pr[j]) != 0)
                    ri[j] -= factor * pr[j];
        }
        basis_[row] = col;
    }

    // Bland: entering = lowest-index improving column; leaving = lowest basis
    // index among the minimum-ratio rows.
    bool iterate(const std::vector<T>& cost, int max_col) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < max_col; ++j) {
                if (banned_[j])
                    continue;
                if (Num<T>::sign(reduced_cost(cost, j)) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0)
                return true; // optimal
            int leave = -1;
            T best_ratio{};
            for (std::size_t i = 0; i < tab_.size(); ++i) {
                if (Num<T>::sign(tab_[i][enter]) <= 0)
                    continue;
                T ratio = tab_[i][n_cols_] / tab_[i][enter];
                if (leave < 0 || Num<T>::sign(ratio - best_ratio) < 0 ||
                    (Num<T>::sign(ratio - best_ratio) == 0 &&
                     basis_[i] < basis_[leave])) {
                    leave = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leave < 0)
                return false; // unbounded
            const int left = basis_[leave];
            pivot(leave, enter);
            if (left >= first_artif_)
                banned_[left] = true; // artificials never re-enter
        }
    }

    void phase1() {
        banned_.assign(n_cols_, false);
        std::vector<T> cost1(n_cols_, T{});
        for (int j = first_artif_; j < n_cols_; ++j)
            cost1[j] = T{1};
        iterate(cost1, n_cols_); // bounded below by zero, cannot be unbounded
        T value{};
        for (std::size_t i = 0; i < tab_.size(); ++i)
            if (basis_[i] >= first_artif_)
                value += tab_[i][n_cols_];
        if (Num<T>::sign(value) > 0)
            throw LpInfeasible("lp has no feasible point");
        // Degenerate artificials: pivot them out, or drop rows that became 0 = 0.
        for (int i = static_cast<int>(tab_.size()) - 1; i >= 0; --i) {
            if (basis_[i] < first_artif_)
                continue;
            int col = -1;
            for (int j = 0; j < first_artif_; ++j)
                if (Num<T>::sign(tab_[i][j]) != 0) {
                    col = j;
                    break;
                }
            if (col >= 0) {
                pivot(i, col);
            } else {
                tab_.erase(tab_.begin() + i);
                basis_.erase(basis_.begin() + i);
            }
        }
    }

    void phase2() {
        banned_.assign(n_cols_, false);
        for (int j = first_artif_; j < n_cols_; ++j)
            banned_[j] = true;
        if (!iterate(cost2_, first_artif_))
            throw LpUnbounded("lp objective is unbounded below");
    }

    BasicLpSolution<T> extract() const {
        const int n_orig = static_cast<int>(lp_.objective.size());
        std::vector<T> xs(n_struct_, T{});
        for (std::size_t i = 0; i < tab_.size(); ++i)
            if (basis_[i] < n_struct_)
                xs[basis_[i]] = tab_[i][n_cols_];
        BasicLpSolution<T> sol;
        sol.variables.assign(n_orig, T{});
        for (int j = 0; j < n_orig; ++j) {
            sol.variables[j] = xs[pos_col_[j]];
            if (neg_col_[j] >= 0)
                sol.variables[j] -= xs[neg_col_[j]];
        }
        sol.objective = T{};
        for (int j = 0; j < n_orig; ++j)
            sol.objective += lp_.objective[j] * sol.variables[j];
        for (std::size_t i = 0; i < lp_.rows.size(); ++i) {
            T activity{};
            for (int j = 0; j < n_orig; ++j)
                activity += lp_.rows[i].coeffs[j] * sol.variables[j];
            if (Num<T>::sign(activity - lp_.rows[i].rhs) == 0)
                sol.basis_tight_rows.push_back(static_cast<int>(i));
        }
        sol.pivots = pivots_;
        return sol;
    }

    const BasicLinearProgram<T>& lp_;
    std::vector<std::vector<T>> tab_;
    std::vector<int> basis_;
    std::vector<int> pos_col_, neg_col_;
    std::vector<T> cost2_;
    std::vector<bool> banned_;
    int n_struct_ = 0;
    int first_artif_ = 0;
    int n_cols_ = 0;
    bool has_artificials_ = false;
    long pivots_ = 0;
};

} // namespace

LpSolution lp_solve(const LinearProgram& lp) {
    return Simplex<Rational>(lp).solve();
}

LpSolutionD lp_solve(const LinearProgramD& lp) {
    return Simplex<double>(lp).solve();
}

LinearProgramD to_double(const LinearProgram& lp) {
    LinearProgramD out;
    out.objective.reserve(lp.objective.size());
    for (const Rational& c : lp.objective)
        out.objective.push_back(to_double(c));
    out.rows.reserve(lp.rows.size());
    for (const auto& row : lp.rows) {
        LinearProgramD::Row r;
        r.coeffs.reserve(row.coeffs.size());
        for (const Rational& c : row.coeffs)
            r.coeffs.push_back(to_double(c));
        r.sense = row.sense;
        r.rhs = to_double(row.rhs);
        out.rows.push_back(std::move(r));
    }
    out.free_vars = lp.free_vars;
    return out;
}

} // namespace momoa
