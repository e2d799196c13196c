#include "momoa/oracles.hpp"

#include "momoa/errors.hpp"

#include <algorithm>
#include <numeric>

namespace momoa {
namespace {

void check_weight(const Weight& w, int p) {
    if (static_cast<int>(w.size()) != p)
        throw ValidationError("weight length differs from objective count");
    bool any_positive = false;
    for (const Rational& c : w) {
        if (sgn(c) < 0)
            throw ValidationError("weights must be nonnegative");
        if (sgn(c) > 0)
            any_positive = true;
    }
    if (!any_positive)
        throw ValidationError("weight vector is zero");
}

// Integer weight numerators after clearing denominators; scaling the objective
// by the (positive) common denominator does not change the argmin.
std::vector<Integer> scaled_weights(const Weight& w) {
    Integer den = 1;
    for (const Rational& c : w)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> nums;
    nums.reserve(w.size());
    for (const Rational& c : w)
        nums.push_back(c.get_num() * (den / c.get_den()));
    return nums;
}

// Value in a totally ordered group: (scaled weighted sum, y_1, ..., y_p)
// compared lexicographically. Minimizing it yields the weighted-sum optimum
// tie-broken to the lexicographically smallest objective vector.
struct LexVal {
    std::vector<Integer> v;

    LexVal() = default;
    explicit LexVal(std::size_t n) : v(n, 0) {}

    LexVal& operator+=(const LexVal& o) {
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += o.v[i];
        return *this;
    }
    LexVal& operator-=(const LexVal& o) {
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] -= o.v[i];
        return *this;
    }
    friend LexVal operator-(LexVal a, const LexVal& b) { return a -= b; }
    friend bool operator<(const LexVal& a, const LexVal& b) {
        for (std::size_t i = 0; i < a.v.size(); ++i) {
            const int c = cmp(a.v[i], b.v[i]);
            if (c != 0)
                return c < 0;
        }
        return false;
    }
};

struct MaybeVal {
    bool inf = true;
    LexVal val;
};

// Jonker-Volgenant style O(n^3) assignment over the ordered group above.
// cost is row-major n*n; returns row_of[j] = row assigned to column j.
std::vector<int> hungarian(int n, const std::vector<LexVal>& cost) {
    const int none = 0;
    std::vector<int> row_of(n + 1, none), way(n + 1, 0);
    std::vector<LexVal> u(n + 1), v(n + 1);
    // Potentials start at zero with the right tuple width.
    {
        LexVal zero = cost[0];
        for (Integer& x : zero.v)
            x = 0;
        u.assign(n + 1, zero);
        v.assign(n + 1, zero);
    }
    for (int i = 1; i <= n; ++i) {
        row_of[0] = i;
        int j0 = 0;
        std::vector<MaybeVal> minv(n + 1);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const int i0 = row_of[j0];
            int j1 = -1;
            MaybeVal delta;
            for (int j = 1; j <= n; ++j) {
                if (used[j])
                    continue;
                LexVal cur = cost[static_cast<std::size_t>(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (minv[j].inf || cur < minv[j].val) {
                    minv[j].inf = false;
                    minv[j].val = cur;
                    way[j] = j0;
                }
                if (delta.inf || minv[j].val < delta.val) {
                    delta.inf = false;
                    delta.val = minv[j].val;
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[row_of[j]] += delta.val;
                    v[j] -= delta.val;
                } else if (!minv[j].inf) {
                    minv[j].val -= delta.val;
                }
            }
            j0 = j1;
        } while (row_of[j0] != none);
        do {
            const int j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    return row_of;
}

WsResult ws_explicit(const Instance& inst, const Weight& w) {
    const auto& e = inst.explicit_set();
    int best = -1;
    Rational best_value;
    ObjPoint best_point;
    for (std::size_t idx = 0; idx < e.points.size(); ++idx) {
        ObjPoint y = point_from_ints(e.points[idx]);
        Rational value = dot(w, y);
        if (best < 0 || value < best_value ||
            (value == best_value && lex_less(y, best_point))) {
            best = static_cast<int>(idx);
            best_value = value;
            best_point = std::move(y);
        }
    }
    return {best_value, best_point, Witness(std::vector<int>{best})};
}

} // namespace

WsResult ws_assignment(const Instance& inst, const Weight& w) {
    const auto& a = inst.assignment();
    const int n = a.n;
    const int p = a.p;
    const std::vector<Integer> wn = scaled_weights(w);
    std::vector<LexVal> cost;
    cost.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            LexVal c(static_cast<std::size_t>(p) + 1);
            for (int k = 0; k < p; ++k) {
                const long long e = a.costs[k][static_cast<std::size_t>(i) * n + j];
                c.v[0] += wn[k] * make_int(e);
                c.v[k + 1] = make_int(e);
            }
            cost.push_back(std::move(c));
        }
    }
    const std::vector<int> row_of = hungarian(n, cost);
    std::vector<int> perm(n, -1); // task assigned to each agent
    for (int j = 1; j <= n; ++j)
        perm[row_of[j] - 1] = j - 1;
    ObjPoint point(p, Rational(0));
    for (int k = 0; k < p; ++k) {
        long long total = 0;
        for (int i = 0; i < n; ++i)
            total += a.costs[k][static_cast<std::size_t>(i) * n + perm[i]];
        point[k] = rat(total);
    }
    return {dot(w, point), point, Witness(perm)};
}

WsResult ws_knapsack(const Instance& inst, const Weight& w) {
    const auto& k = inst.knapsack();
    if (k.capacity < 0)
        throw InfeasibleInstance("knapsack capacity is negative");
    const int n = k.n;
    const int p = k.p;

    long long weight_sum = 0;
    for (long long wt : k.weights)
        weight_sum += wt;
    const long long cap = std::min(k.capacity, weight_sum);
    if (static_cast<unsigned long long>(cap + 1) * (n + 1) > 200000000ULL)
        throw TooLarge("knapsack DP table would exceed the supported size");

    // Encode (scaled aggregated profit, profit_1, ..., profit_p) into one integer,
    // base B > any per-objective profit total, so integer comparison is the
    // lexicographic maximization that yields the lex-minimal negated point.
    Integer base = 0;
    for (int kk = 0; kk < p; ++kk) {
        Integer total = 0;
        for (int j = 0; j < n; ++j)
            total += make_int(k.profits[kk][j]);
        if (total > base)
            base = total;
    }
    base += 1;
    const std::vector<Integer> wn = scaled_weights(w);
    std::vector<Integer> enc(n);
    for (int j = 0; j < n; ++j) {
        Integer agg = 0;
        for (int kk = 0; kk < p; ++kk)
            agg += wn[kk] * make_int(k.profits[kk][j]);
        Integer e = agg;
        for (int kk = 0; kk < p; ++kk) {
            e *= base;
            e += make_int(k.profits[kk][j]);
        }
        enc[j] = e;
    }

    std::vector<Integer> dp(static_cast<std::size_t>(cap) + 1, Integer(0));
    std::vector<std::vector<bool>> take(n, std::vector<bool>(static_cast<std::size_t>(cap) + 1, false));
    for (int j = 0; j < n; ++j) {
        const long long wt = k.weights[j];
        for (long long c = cap; c >= wt; --c) {
            Integer cand = dp[c - wt] + enc[j];
            if (cand > dp[c]) {
                dp[c] = std::move(cand);
                take[j][c] = true;
            }
        }
    }
    std::vector<int> chosen;
    long long c = cap;
    for (int j = n - 1; j >= 0; --j) {
        if (take[j][c]) {
            chosen.push_back(j);
            c -= k.weights[j];
        }
    }
    std::reverse(chosen.begin(), chosen.end());

    ObjPoint point(p, Rational(0));
    for (int kk = 0; kk < p; ++kk) {
        long long total = 0;
        for (int j : chosen)
            total += k.profits[kk][j];
        point[kk] = rat(-total);
    }
    return {dot(w, point), point, Witness(chosen)};
}

WsResult ws_knapsack_relax(const Instance& inst, const Weight& w) {
    const auto& k = inst.knapsack();
    if (k.capacity < 0)
        throw InfeasibleInstance("knapsack capacity is negative");
    const int n = k.n;
    const int p = k.p;

    std::vector<Rational> agg(n, Rational(0));
    for (int j = 0; j < n; ++j)
        for (int kk = 0; kk < p; ++kk)
            agg[j] += w[kk] * rat(k.profits[kk][j]);

    // Greedy by profit/weight ratio, ties by item index; zero-profit items are skipped.
    std::vector<int> order;
    for (int j = 0; j < n; ++j)
        if (sgn(agg[j]) > 0)
            order.push_back(j);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int c = cmp(agg[a] * rat(k.weights[b]), agg[b] * rat(k.weights[a]));
        if (c != 0)
            return c > 0;
        return a < b;
    });

    std::vector<Rational> amount(n, Rational(0));
    Rational remaining = rat(k.capacity);
    for (int j : order) {
        if (sgn(remaining) <= 0)
            break;
        const Rational wt = rat(k.weights[j]);
        if (wt <= remaining) {
            amount[j] = 1;
            remaining -= wt;
        } else {
            amount[j] = remaining / wt;
            remaining = 0;
        }
    }

    ObjPoint point(p, Rational(0));
    for (int kk = 0; kk < p; ++kk) {
        Rational total = 0;
        for (int j = 0; j < n; ++j)
            if (sgn(amount[j]) != 0)
                total += amount[j] * rat(k.profits[kk][j]);
        point[kk] = -total;
    }
    return {dot(w, point), point, Witness(amount)};
}

WsResult ws_solve(const Instance& inst, const Weight& w) {
    check_weight(w, inst.objectives());
    switch (inst.kind()) {
    case InstanceKind::Assignment: return ws_assignment(inst, w);
    case InstanceKind::Knapsack: return ws_knapsack(inst, w);
    case InstanceKind::ExplicitSet: return ws_explicit(inst, w);
    }
    throw InternalError("unknown instance kind");
}

IdealPoint ideal_point(const WeightedSumFn& oracle, int p) {
    IdealPoint out;
    out.point.assign(p, Rational(0));
    out.minimizers.reserve(p);
    for (int i = 0; i < p; ++i) {
        Weight e(p, Rational(0));
        e[i] = 1;
        WsResult r = oracle(e);
        out.point[i] = r.value;
        out.minimizers.push_back(std::move(r.point));
    }
    return out;
}

IdealPoint ideal_point(const Instance& inst) {
    return ideal_point([&](const Weight& w) { return ws_solve(inst, w); }, inst.objectives());
}

} // namespace momoa
