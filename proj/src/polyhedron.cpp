#include "momoa/polyhedron.hpp"

#include "momoa/errors.hpp"

#include <algorithm>
#include <set>

namespace momoa {
namespace {

bool bits_subset(const std::vector<std::uint64_t>& sub, const std::vector<std::uint64_t>& super) {
    for (std::size_t i = 0; i < sub.size(); ++i)
        if (sub[i] & ~super[i])
            return false;
    return true;
}

std::vector<std::uint64_t> bits_and(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] & b[i];
    return out;
}

int rank_of(std::vector<std::vector<Rational>> m) {
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

} // namespace

OuterApprox OuterApprox::from_ideal_point(const ObjPoint& ideal) {
    if (ideal.empty())
        throw ValidationError("ideal point must have positive dimension");
    OuterApprox s;
    s.dim_ = static_cast<int>(ideal.size());
    s.verts_.push_back(ideal);
    for (int i = 0; i < s.dim_; ++i) {
        Halfspace h;
        h.w.assign(static_cast<std::size_t>(s.dim_), Rational(0));
        h.w[i] = 1;
        h.alpha = ideal[i];
        h.canonicalize();
        s.hs_.push_back(std::move(h));
    }
    s.rebuild_tight_sets();
    return s;
}

OuterApprox OuterApprox::add_halfspaces(const std::vector<Halfspace>& cuts) const {
    OuterApprox out = *this;
    for (const Halfspace& cut : cuts)
        out.insert_cut(cut);
    std::sort(out.verts_.begin(), out.verts_.end(), LexLess{});
    out.rebuild_tight_sets();
    out.remove_redundant();
    return out;
}

bool OuterApprox::contains(const ObjPoint& y) const {
    if (static_cast<int>(y.size()) != dim_)
        throw ValidationError("point dimension differs from polyhedron dimension");
    for (const Halfspace& h : hs_)
        if (!h.satisfied_by(y))
            return false;
    return true;
}

void OuterApprox::rebuild_tight_sets() {
    const std::size_t words = (hs_.size() + 63) / 64;
    vert_tight_.assign(verts_.size(), Bits(words, 0));
    ray_tight_.assign(static_cast<std::size_t>(dim_), Bits(words, 0));
    for (std::size_t h = 0; h < hs_.size(); ++h) {
        for (std::size_t v = 0; v < verts_.size(); ++v)
            if (hs_[h].tight_at(verts_[v]))
                vert_tight_[v][h >> 6] |= std::uint64_t(1) << (h & 63);
        for (int r = 0; r < dim_; ++r)
            if (sgn(hs_[h].w[r]) == 0)
                ray_tight_[r][h >> 6] |= std::uint64_t(1) << (h & 63);
    }
}

// Combinatorial adjacency over the homogenized generators (vertices plus the p
// recession rays): two generators span an edge iff no third generator is tight
// on everything they are both tight on.
bool OuterApprox::adjacent(const Bits& a, const Bits& b, int skip_v1, int skip_v2,
                           int skip_ray) const {
    const Bits common = bits_and(a, b);
    for (std::size_t v = 0; v < verts_.size(); ++v) {
        if (static_cast<int>(v) == skip_v1 || static_cast<int>(v) == skip_v2)
            continue;
        if (bits_subset(common, vert_tight_[v]))
            return false;
    }
    for (int r = 0; r < dim_; ++r) {
        if (r == skip_ray)
            continue;
        if (bits_subset(common, ray_tight_[r]))
            return false;
    }
    return true;
}

void OuterApprox::insert_cut(Halfspace cut) {
    if (static_cast<int>(cut.w.size()) != dim_)
        throw ValidationError("cut dimension differs from polyhedron dimension");
    for (const Rational& c : cut.w)
        if (sgn(c) < 0)
            throw ValidationError("cut normal must be componentwise nonnegative");
    cut.canonicalize();
    for (const Halfspace& h : hs_)
        if (h == cut)
            return; // positive multiple of a stored halfspace

    const std::size_t nv = verts_.size();
    std::vector<Rational> val(nv);
    std::vector<int> side(nv);
    bool any_negative = false;
    for (std::size_t v = 0; v < nv; ++v) {
        val[v] = cut.eval(verts_[v]);
        side[v] = sgn(val[v]);
        any_negative = any_negative || side[v] < 0;
    }
    if (!any_negative)
        return; // implied by the current description

    // Vertices of S cap H: kept vertices plus one point per edge crossing the
    // cut boundary -- bounded edges between a kept and a dropped vertex, and
    // unbounded edges leaving a dropped vertex along a ray the cut prices.
    std::set<ObjPoint, LexLess> merged;
    for (std::size_t v = 0; v < nv; ++v)
        if (side[v] >= 0)
            merged.insert(verts_[v]);
    for (std::size_t vn = 0; vn < nv; ++vn) {
        if (side[vn] >= 0)
            continue;
        for (std::size_t vp = 0; vp < nv; ++vp) {
            if (side[vp] <= 0)
                continue;
            if (!adjacent(vert_tight_[vn], vert_tight_[vp], static_cast<int>(vn),
                          static_cast<int>(vp), -1))
                continue;
            const Rational t = -val[vn] / (val[vp] - val[vn]); // in (0,1)
            ObjPoint x(static_cast<std::size_t>(dim_));
            for (int i = 0; i < dim_; ++i)
                x[i] = verts_[vn][i] + t * (verts_[vp][i] - verts_[vn][i]);
            merged.insert(std::move(x));
        }
        for (int r = 0; r < dim_; ++r) {
            if (sgn(cut.w[r]) <= 0)
                continue;
            if (!adjacent(vert_tight_[vn], ray_tight_[r], static_cast<int>(vn), -1, r))
                continue;
            ObjPoint x = verts_[vn];
            x[r] += -val[vn] / cut.w[r];
            merged.insert(std::move(x));
        }
    }
    if (merged.empty())
        throw EmptyPolyhedron("halfspace batch emptied the approximation");

    hs_.push_back(std::move(cut));
    verts_.assign(merged.begin(), merged.end());
    rebuild_tight_sets();
}

// A stored halfspace is kept iff its tight generators span a facet, i.e. the
// homogenized tight set has full rank. The description always stays exact, so
// dropping the rest never changes a vertex.
void OuterApprox::remove_redundant() {
    std::vector<Halfspace> kept;
    kept.reserve(hs_.size());
    for (std::size_t h = 0; h < hs_.size(); ++h) {
        std::vector<std::vector<Rational>> gens;
        for (std::size_t v = 0; v < verts_.size(); ++v) {
            if (vert_tight_[v][h >> 6] >> (h & 63) & 1) {
                std::vector<Rational> row = verts_[v];
                row.push_back(1);
                gens.push_back(std::move(row));
            }
        }
        for (int r = 0; r < dim_; ++r) {
            if (sgn(hs_[h].w[r]) == 0) {
                std::vector<Rational> row(static_cast<std::size_t>(dim_) + 1, Rational(0));
                row[r] = 1;
                gens.push_back(std::move(row));
            }
        }
        if (rank_of(std::move(gens)) == dim_)
            kept.push_back(hs_[h]);
    }
    if (kept.size() != hs_.size()) {
        hs_ = std::move(kept);
        rebuild_tight_sets();
    }
}

void OuterApprox::check_invariants() const {
    for (std::size_t v = 0; v < verts_.size(); ++v) {
        if (static_cast<int>(verts_[v].size()) != dim_)
            throw InternalError("vertex of wrong dimension");
        std::vector<std::vector<Rational>> tight_normals;
        for (const Halfspace& h : hs_) {
            const int s = sgn(h.eval(verts_[v]));
            if (s < 0)
                throw InternalError("vertex violates a stored halfspace");
            if (s == 0)
                tight_normals.push_back(h.w);
        }
        if (rank_of(std::move(tight_normals)) != dim_)
            throw InternalError("vertex is not a basic intersection point");
        if (v + 1 < verts_.size() && !lex_less(verts_[v], verts_[v + 1]))
            throw InternalError("vertices not strictly ordered");
    }
    for (std::size_t i = 0; i < hs_.size(); ++i) {
        for (const Rational& c : hs_[i].w)
            if (sgn(c) < 0)
                throw InternalError("stored halfspace with negative normal entry");
        for (std::size_t j = i + 1; j < hs_.size(); ++j)
            if (hs_[i] == hs_[j])
                throw InternalError("duplicate stored halfspace");
    }
    if (verts_.empty())
        throw InternalError("no vertices stored");
}

} // namespace momoa
