#include "momoa/brute.hpp"

#include "momoa/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

// Everything here is deliberately naive: full enumeration, candidate facets from
// every p-subset of generators, and a tiny local simplex. Slow is fine -- this
// module exists to be obviously correct, independently of the solver path.

namespace momoa {
namespace {

using I128 = __int128;

constexpr long long kCoordLimit = 100000; // keeps every determinant within __int128

Integer integer_from_i128(I128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(u >> 64));
    Integer lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    Integer out = (hi << 64) | lo;
    return neg ? Integer(-out) : out;
}

I128 det_i128(std::vector<std::vector<I128>> m) {
    const std::size_t k = m.size();
    if (k == 0)
        return 1;
    if (k == 1)
        return m[0][0];
    I128 acc = 0;
    std::vector<std::vector<I128>> sub(k - 1, std::vector<I128>(k - 1));
    for (std::size_t c = 0; c < k; ++c) {
        if (m[0][c] == 0)
            continue;
        for (std::size_t i = 1; i < k; ++i) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < k; ++j) {
                if (j == c)
                    continue;
                sub[i - 1][cc++] = m[i][j];
            }
        }
        const I128 minor = det_i128(sub);
        acc += (c % 2 == 0 ? m[0][c] : -m[0][c]) * minor;
    }
    return acc;
}

int rank_rational(std::vector<std::vector<Rational>> m) {
    if (m.empty())
        return 0;
    const int cols = static_cast<int>(m[0].size());
    const int rows = static_cast<int>(m.size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (sgn(m[r][c]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            if (sgn(m[r][c]) == 0)
                continue;
            const Rational f = m[r][c] / m[rank][c];
            for (int cc = c; cc < cols; ++cc)
                m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

// max sum(lambda) s.t. sum lambda_i * col_i <= bound, lambda >= 0, all data >= 0.
// Plain tableau simplex with a slack start and Bland's rule.
Rational packed_combination_max(const std::vector<ObjPoint>& cols, const ObjPoint& bound) {
    const int m = static_cast<int>(bound.size());
    const int n = static_cast<int>(cols.size());
    std::vector<std::vector<Rational>> tab(
        m, std::vector<Rational>(static_cast<std::size_t>(n) + m + 1, Rational(0)));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j)
            tab[i][j] = cols[j][i];
        tab[i][n + i] = 1;
        tab[i][n + m] = bound[i];
        basis[i] = n + i;
    }
    // Reduced cost of column j for the objective min -sum(lambda).
    auto reduced = [&](int j) {
        Rational d = j < n ? Rational(-1) : Rational(0);
        for (int i = 0; i < m; ++i)
            if (basis[i] < n)
                d += tab[i][j];
        return d;
    };
    for (;;) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (sgn(reduced(j)) < 0) {
                enter = j;
                break;
            }
        if (enter < 0)
            break;
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (sgn(tab[i][enter]) <= 0)
                continue;
            const Rational ratio = tab[i][n + m] / tab[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0)
            throw InternalError("membership LP is unbounded; shifted data must be positive");
        const Rational piv = tab[leave][enter];
        for (Rational& x : tab[leave])
            x /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || sgn(tab[i][enter]) == 0)
                continue;
            const Rational f = tab[i][enter];
            for (int j = 0; j <= n + m; ++j)
                tab[i][j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }
    Rational total = 0;
    for (int i = 0; i < m; ++i)
        if (basis[i] < n)
            total += tab[i][n + m];
    return total;
}

bool member_of_upper_set(const std::vector<ObjPoint>& points, const ObjPoint& y) {
    const std::size_t p = y.size();
    // Shift everything so all coordinates are >= 1; membership is translation-invariant.
    std::vector<Rational> shift(p, Rational(0));
    for (std::size_t k = 0; k < p; ++k) {
        Rational mn = y[k];
        for (const ObjPoint& pt : points)
            if (pt[k] < mn)
                mn = pt[k];
        if (mn < 1)
            shift[k] = 1 - mn;
    }
    std::vector<ObjPoint> cols;
    cols.reserve(points.size());
    for (const ObjPoint& pt : points) {
        ObjPoint c(p);
        for (std::size_t k = 0; k < p; ++k)
            c[k] = pt[k] + shift[k];
        cols.push_back(std::move(c));
    }
    ObjPoint bound(p);
    for (std::size_t k = 0; k < p; ++k)
        bound[k] = y[k] + shift[k];
    return packed_combination_max(cols, bound) >= 1;
}

std::vector<ObjPoint> sorted_unique(std::set<std::vector<long long>>&& raw) {
    std::vector<ObjPoint> out;
    out.reserve(raw.size());
    for (const auto& v : raw)
        out.push_back(point_from_ints(v));
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

} // namespace

std::vector<ObjPoint> brute_force_Q(const Instance& inst) {
    const int p = inst.objectives();
    std::set<std::vector<long long>> raw;
    switch (inst.kind()) {
    case InstanceKind::Assignment: {
        const auto& a = inst.assignment();
        if (a.n > 8)
            throw TooLarge("assignment enumeration supports n <= 8");
        std::vector<int> perm(a.n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<long long> y(p, 0);
            for (int k = 0; k < p; ++k)
                for (int i = 0; i < a.n; ++i)
                    y[k] += a.costs[k][static_cast<std::size_t>(i) * a.n + perm[i]];
            raw.insert(std::move(y));
        } while (std::next_permutation(perm.begin(), perm.end()));
        break;
    }
    case InstanceKind::Knapsack: {
        const auto& kd = inst.knapsack();
        if (kd.n > 20)
            throw TooLarge("knapsack enumeration supports n <= 20");
        if (kd.capacity < 0)
            throw InfeasibleInstance("knapsack capacity is negative");
        for (unsigned long mask = 0; mask < (1UL << kd.n); ++mask) {
            long long weight = 0;
            for (int j = 0; j < kd.n; ++j)
                if (mask >> j & 1)
                    weight += kd.weights[j];
            if (weight > kd.capacity)
                continue;
            std::vector<long long> y(p, 0);
            for (int k = 0; k < p; ++k)
                for (int j = 0; j < kd.n; ++j)
                    if (mask >> j & 1)
                        y[k] -= kd.profits[k][j];
            raw.insert(std::move(y));
        }
        break;
    }
    case InstanceKind::ExplicitSet: {
        for (const auto& y : inst.explicit_set().points)
            raw.insert(y);
        break;
    }
    }
    return sorted_unique(std::move(raw));
}

BruteHull brute_force_hull(const std::vector<ObjPoint>& points) {
    if (points.empty())
        throw ValidationError("hull of an empty point set");
    const int p = static_cast<int>(points[0].size());
    if (p < 1 || p > 5)
        throw TooLarge("hull oracle supports up to 5 objectives");
    if (points.size() > 5000)
        throw TooLarge("hull oracle supports up to 5000 points");

    std::vector<std::vector<long long>> pts;
    pts.reserve(points.size());
    for (const ObjPoint& y : points) {
        if (static_cast<int>(y.size()) != p)
            throw ValidationError("hull points differ in dimension");
        std::vector<long long> row;
        for (const Rational& c : y) {
            if (cmp(c.get_den(), 1) != 0)
                throw ValidationError("hull oracle expects integer points");
            if (!c.get_num().fits_slong_p())
                throw TooLarge("hull point coordinate exceeds the supported range");
            const long long v = c.get_num().get_si();
            if (v > kCoordLimit || v < -kCoordLimit)
                throw TooLarge("hull point coordinate exceeds the supported range");
            row.push_back(v);
        }
        pts.push_back(std::move(row));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // Only nondominated points can generate facets or vertices of the upper set.
    std::vector<std::vector<long long>> nd;
    for (const auto& a : pts) {
        bool dominated = false;
        for (const auto& b : pts) {
            if (&a == &b || b == a)
                continue;
            bool le = true;
            for (int k = 0; k < p && le; ++k)
                le = b[k] <= a[k];
            if (le) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            nd.push_back(a);
    }

    // Generators: nondominated points (homogeneous 1) and the p rays (homogeneous 0).
    const int npts = static_cast<int>(nd.size());
    const int gens = npts + p;
    auto gen_row = [&](int g) {
        // Row of the tightness system for the unknown (w, alpha).
        std::vector<I128> row(static_cast<std::size_t>(p) + 1, 0);
        if (g < npts) {
            for (int k = 0; k < p; ++k)
                row[k] = nd[g][k];
            row[p] = -1;
        } else {
            row[g - npts] = 1;
        }
        return row;
    };

    std::set<Halfspace, HalfspaceLexLess> facet_set;
    std::vector<int> idx(p);
    std::iota(idx.begin(), idx.end(), 0);
    auto advance = [&]() {
        int i = p - 1;
        while (i >= 0 && idx[i] == gens - p + i)
            --i;
        if (i < 0)
            return false;
        ++idx[i];
        for (int j = i + 1; j < p; ++j)
            idx[j] = idx[j - 1] + 1;
        return true;
    };
    if (gens >= p)
        do {
            std::vector<std::vector<I128>> m;
            m.reserve(p);
            for (int i = 0; i < p; ++i)
                m.push_back(gen_row(idx[i]));
            // One-dimensional nullspace via signed minors; all zero means rank < p.
            std::vector<I128> u(static_cast<std::size_t>(p) + 1, 0);
            bool nonzero = false;
            for (int c = 0; c <= p; ++c) {
                std::vector<std::vector<I128>> sub(p, std::vector<I128>(p));
                for (int r = 0; r < p; ++r) {
                    int cc = 0;
                    for (int j = 0; j <= p; ++j) {
                        if (j == c)
                            continue;
                        sub[r][cc++] = m[r][j];
                    }
                }
                const I128 minor = det_i128(sub);
                u[c] = (c % 2 == 0) ? minor : -minor;
                nonzero = nonzero || minor != 0;
            }
            if (!nonzero)
                continue;
            int neg = 0, pos = 0;
            for (int k = 0; k < p; ++k) {
                if (u[k] > 0)
                    ++pos;
                if (u[k] < 0)
                    ++neg;
            }
            if (pos + neg == 0 || (pos > 0 && neg > 0))
                continue; // zero or mixed-sign normal: not a supporting direction
            if (neg > 0)
                for (I128& x : u)
                    x = -x;
            const I128 alpha = u[p];
            bool valid = true;
            for (const auto& y : nd) {
                I128 lhs = 0;
                for (int k = 0; k < p; ++k)
                    lhs += u[k] * y[k];
                if (lhs < alpha) {
                    valid = false;
                    break;
                }
            }
            if (!valid)
                continue;
            Halfspace h;
            h.w.reserve(p);
            for (int k = 0; k < p; ++k)
                h.w.push_back(Rational(integer_from_i128(u[k])));
            h.alpha = Rational(integer_from_i128(alpha));
            h.canonicalize();
            facet_set.insert(std::move(h));
        } while (advance());

    BruteHull hull;
    hull.facets.assign(facet_set.begin(), facet_set.end());

    // Extreme points: tight facet normals of full rank, cross-checked against
    // expressibility as a convex-plus-conic combination of the other points.
    std::vector<ObjPoint> nd_points;
    nd_points.reserve(nd.size());
    for (const auto& y : nd)
        nd_points.push_back(point_from_ints(y));
    for (std::size_t i = 0; i < nd_points.size(); ++i) {
        std::vector<std::vector<Rational>> normals;
        for (const Halfspace& h : hull.facets)
            if (h.tight_at(nd_points[i]))
                normals.push_back(h.w);
        const bool by_rank = rank_rational(std::move(normals)) == p;
        std::vector<ObjPoint> others;
        others.reserve(nd_points.size() - 1);
        for (std::size_t j = 0; j < nd_points.size(); ++j)
            if (j != i)
                others.push_back(nd_points[j]);
        const bool by_lp = others.empty() || !member_of_upper_set(others, nd_points[i]);
        if (by_rank != by_lp)
            throw InternalError("hull oracle disagreement between rank and LP extremeness");
        if (by_rank)
            hull.extreme_points.push_back(nd_points[i]);
    }
    std::sort(hull.extreme_points.begin(), hull.extreme_points.end(), LexLess{});
    return hull;
}

bool dtsep_member(const std::vector<ObjPoint>& points, const ObjPoint& y) {
    if (points.empty())
        throw ValidationError("membership against an empty point set");
    for (const ObjPoint& pt : points)
        if (pt.size() != y.size())
            throw ValidationError("membership query dimension mismatch");
    return member_of_upper_set(points, y);
}

} // namespace momoa
