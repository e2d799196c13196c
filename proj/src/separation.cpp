#include "momoa/separation.hpp"

#include "momoa/errors.hpp"

#include <algorithm>

namespace momoa {
namespace {

struct MasterSolution {
    std::vector<Rational> w;
    Rational alpha; // Sep only
    long pivots = 0;
};

LinearProgram build_sep_lp(const ObjPoint& y_star, const std::vector<ObjPoint>& pool, int p) {
    // min y*.w - alpha  s.t.  y.w - alpha >= 0 for pooled y, sum w = 1, w >= 0, alpha free.
    LinearProgram lp;
    lp.objective = y_star;
    lp.objective.push_back(Rational(-1));
    lp.free_vars.assign(static_cast<std::size_t>(p) + 1, false);
    lp.free_vars[p] = true;
    for (const ObjPoint& y : pool) {
        LinearProgram::Row row;
        row.coeffs = y;
        row.coeffs.push_back(Rational(-1));
        row.sense = RowSense::Ge;
        row.rhs = 0;
        lp.rows.push_back(std::move(row));
    }
    LinearProgram::Row norm;
    norm.coeffs.assign(static_cast<std::size_t>(p) + 1, Rational(1));
    norm.coeffs[p] = 0;
    norm.sense = RowSense::Eq;
    norm.rhs = 1;
    lp.rows.push_back(std::move(norm));
    return lp;
}

LinearProgram build_tsep_lp(const ObjPoint& y_star_shifted,
                            const std::vector<ObjPoint>& pool,
                            const std::vector<Rational>& offset, const Rational& rhs) {
    // min y*'.w  s.t.  y'.w >= rhs for pooled (shifted) y, w >= 0.
    LinearProgram lp;
    lp.objective = y_star_shifted;
    const int p = static_cast<int>(y_star_shifted.size());
    for (const ObjPoint& y : pool) {
        LinearProgram::Row row;
        row.coeffs.resize(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i)
            row.coeffs[i] = y[i] + offset[i];
        row.sense = RowSense::Ge;
        row.rhs = rhs;
        lp.rows.push_back(std::move(row));
    }
    return lp;
}

MasterSolution solve_master(const LinearProgram& lp, ArithmeticMode mode, bool has_alpha) {
    MasterSolution out;
    const std::size_t nw = lp.objective.size() - (has_alpha ? 1 : 0);
    if (mode == ArithmeticMode::Exact) {
        LpSolution sol = lp_solve(lp);
        out.w.assign(sol.variables.begin(), sol.variables.begin() + nw);
        if (has_alpha)
            out.alpha = sol.variables[nw];
        out.pivots = sol.pivots;
    } else {
        LpSolutionD sol = lp_solve(to_double(lp));
        out.w.reserve(nw);
        for (std::size_t i = 0; i < nw; ++i)
            out.w.push_back(rational_from_double(sol.variables[i]));
        if (has_alpha)
            out.alpha = rational_from_double(sol.variables[nw]);
        out.pivots = sol.pivots;
    }
    return out;
}

void note_discovered(OracleAnswer& ans, std::set<ObjPoint, LexLess>& seen, const ObjPoint& y) {
    if (seen.insert(y).second)
        ans.discovered.push_back(y);
}

} // namespace

ShiftInfo shift_for_tsep(const Instance& inst, ArithmeticMode mode) {
    const int p = inst.objectives();
    std::vector<Rational> lower(static_cast<std::size_t>(p), Rational(0));
    Integer coeff_sum = 0;
    switch (inst.kind()) {
    case InstanceKind::Assignment: {
        const auto& a = inst.assignment();
        for (int k = 0; k < p; ++k) {
            long long bound = 0;
            for (int i = 0; i < a.n; ++i) {
                long long row_min = a.costs[k][static_cast<std::size_t>(i) * a.n];
                for (int j = 1; j < a.n; ++j)
                    row_min = std::min(row_min, a.costs[k][static_cast<std::size_t>(i) * a.n + j]);
                bound += row_min;
            }
            lower[k] = rat(bound);
            for (const long long c : a.costs[k])
                coeff_sum += make_int(c < 0 ? -c : c);
        }
        break;
    }
    case InstanceKind::Knapsack: {
        const auto& kd = inst.knapsack();
        for (int k = 0; k < p; ++k) {
            long long total = 0;
            for (long long pj : kd.profits[k])
                total += pj;
            lower[k] = rat(-total); // profits are negated inside the oracles
            coeff_sum += make_int(total);
        }
        break;
    }
    case InstanceKind::ExplicitSet: {
        const auto& e = inst.explicit_set();
        for (int k = 0; k < p; ++k) {
            long long mn = e.points[0][k];
            for (const auto& y : e.points)
                mn = std::min(mn, y[k]);
            lower[k] = rat(mn);
            for (const auto& y : e.points)
                coeff_sum += make_int(y[k] < 0 ? -y[k] : y[k]);
        }
        break;
    }
    }
    ShiftInfo out;
    out.offset.assign(static_cast<std::size_t>(p), Rational(0));
    for (int k = 0; k < p; ++k)
        if (lower[k] < 1)
            out.offset[k] = 1 - lower[k];
    out.rhs_scale = 1;
    if (mode == ArithmeticMode::Float && coeff_sum > 1)
        out.rhs_scale = Rational(coeff_sum);
    return out;
}

MasterLP::MasterLP(OracleKind kind, int p, ShiftInfo shift, SeparationSettings settings)
    : kind_(kind), p_(p), shift_(std::move(shift)), settings_(std::move(settings)) {
    if (p_ < 1)
        throw ValidationError("master LP needs a positive dimension");
    if (static_cast<int>(shift_.offset.size()) != p_)
        throw InternalError("shift offset length differs from dimension");
    if (sgn(shift_.rhs_scale) <= 0)
        throw InternalError("rhs scale must be positive");
}

void MasterLP::seed(const std::vector<ObjPoint>& points) {
    for (const ObjPoint& y : points)
        add_to_pool(y);
    if (pool_.empty())
        throw InternalError("master pool is empty after seeding");
}

bool MasterLP::pool_contains(const ObjPoint& y) const {
    return pool_index_.count(y) != 0;
}

bool MasterLP::add_to_pool(const ObjPoint& y) {
    if (static_cast<int>(y.size()) != p_)
        throw ValidationError("pooled point has wrong dimension");
    if (!pool_index_.insert(y).second)
        return false;
    pool_.push_back(y);
    return true;
}

OracleAnswer sep_point(const ObjPoint& y_star, MasterLP& master, const WeightedSumFn& oracle) {
    if (master.kind() != OracleKind::Sep)
        throw InternalError("sep_point called on a TSep master");
    if (static_cast<int>(y_star.size()) != master.dim())
        throw ValidationError("query point has wrong dimension");

    OracleAnswer ans;
    if (master.pool_contains(y_star))
        return ans; // a pooled point of Q is trivially inside

    const SeparationSettings& cfg = master.settings();
    const bool fl = cfg.mode == ArithmeticMode::Float;
    const long long cap = 10 * static_cast<long long>(master.pool().size()) + cfg.iteration_cap_base;
    std::set<ObjPoint, LexLess> seen;

    for (long long iter = 0;; ++iter) {
        if (iter > cap)
            throw IterationLimit("separation row generation exceeded its cap");
        const LinearProgram lp = build_sep_lp(y_star, master.pool(), master.dim());
        const MasterSolution ms = solve_master(lp, cfg.mode, /*has_alpha=*/true);
        if (cfg.stats) {
            ++cfg.stats->lp_solves;
            cfg.stats->lp_pivots += ms.pivots;
        }
        const WsResult r = oracle(ms.w);
        note_discovered(ans, seen, r.point);

        const bool violated =
            fl ? r.value < ms.alpha - cfg.violation_eps : r.value < ms.alpha;
        if (violated) {
            if (master.add_to_pool(r.point))
                continue;
            // The LP claims this row holds, the oracle claims it is violated;
            // impossible with exact arithmetic, tolerance noise in float mode.
            if (!fl)
                throw InternalError("separation: pooled row reported as violated");
        } else if (!fl && cfg.check_lemma) {
            // On termination alpha must equal the weighted-sum optimum exactly.
            if (r.value != ms.alpha)
                throw InternalError("Lemma 1 violated: alpha differs from the ws optimum");
            if (cfg.stats)
                ++cfg.stats->lemma_checks;
        }

        const Rational gap = dot(ms.w, y_star) - ms.alpha;
        const bool outside = fl ? gap < -cfg.violation_eps : sgn(gap) < 0;
        if (outside) {
            ans.status = OracleAnswer::Status::Outside;
            ans.cut = Halfspace{ms.w, ms.alpha};
        }
        return ans;
    }
}

OracleAnswer tsep_point(const ObjPoint& y_star, MasterLP& master, const WeightedSumFn& oracle) {
    if (master.kind() != OracleKind::TSep)
        throw InternalError("tsep_point called on a Sep master");
    if (static_cast<int>(y_star.size()) != master.dim())
        throw ValidationError("query point has wrong dimension");

    OracleAnswer ans;
    if (master.pool_contains(y_star))
        return ans;

    const SeparationSettings& cfg = master.settings();
    const bool fl = cfg.mode == ArithmeticMode::Float;
    const std::vector<Rational>& s = master.shift().offset;
    const Rational& rhs = master.shift().rhs_scale;
    const long long cap = 10 * static_cast<long long>(master.pool().size()) + cfg.iteration_cap_base;

    ObjPoint y_shifted = y_star;
    for (int i = 0; i < master.dim(); ++i)
        y_shifted[i] += s[i];

    std::set<ObjPoint, LexLess> seen;
    for (long long iter = 0;; ++iter) {
        if (iter > cap)
            throw IterationLimit("separation row generation exceeded its cap");
        const LinearProgram lp = build_tsep_lp(y_shifted, master.pool(), s, rhs);
        const MasterSolution ms = solve_master(lp, cfg.mode, /*has_alpha=*/false);
        if (cfg.stats) {
            ++cfg.stats->lp_solves;
            cfg.stats->lp_pivots += ms.pivots;
        }
        const WsResult r = oracle(ms.w);
        note_discovered(ans, seen, r.point);

        const Rational shifted_value = r.value + dot(ms.w, s);
        const bool violated =
            fl ? shifted_value < rhs - cfg.violation_eps : shifted_value < rhs;
        if (violated) {
            if (master.add_to_pool(r.point))
                continue;
            if (!fl)
                throw InternalError("separation: pooled row reported as violated");
        }

        const Rational value_at_query = dot(ms.w, y_shifted);
        const bool outside =
            fl ? value_at_query < rhs - cfg.violation_eps : value_at_query < rhs;
        if (outside) {
            ans.status = OracleAnswer::Status::Outside;
            // w.y' >= rhs in shifted coordinates is w.y >= rhs - w.s in the original ones.
            ans.cut = Halfspace{ms.w, rhs - dot(ms.w, s)};
        }
        return ans;
    }
}

Halfspace integerize_cut(const Halfspace& h, long long factor) {
    if (factor < 1)
        throw ValidationError("scale factor must be at least 1");
    const Integer f(static_cast<long>(factor));
    Halfspace out;
    out.w.reserve(h.w.size());
    auto truncate = [&](const Rational& x) {
        Integer q;
        const Integer num = x.get_num() * f;
        mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
        return Rational(q);
    };
    bool any = false;
    for (const Rational& c : h.w) {
        out.w.push_back(truncate(c));
        any = any || sgn(out.w.back()) != 0;
    }
    out.alpha = truncate(h.alpha);
    if (!any)
        throw InternalError("cut normal vanished under integer scaling");
    return out;
}

} // namespace momoa
