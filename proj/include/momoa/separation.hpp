#pragma once

#include "momoa/halfspace.hpp"
#include "momoa/lp.hpp"
#include "momoa/oracles.hpp"
#include "momoa/stats.hpp"

#include <optional>
#include <set>
#include <vector>

namespace momoa {

enum class OracleKind { Sep, TSep };
enum class ArithmeticMode { Exact, Float };

/// Translation applied before the target-cut LP so every point of (shifted) Q is
/// >= 1 componentwise, plus the right-hand side used for its rows. A cut
/// w·y' >= r in shifted coordinates y' = y + offset maps back to w·y >= r - w·offset.
struct ShiftInfo {
    std::vector<Rational> offset;
    Rational rhs_scale = 1;
};

/// offset_k = max(0, 1 - L_k) where L_k is a per-kind lower bound on objective k
/// (explicit minimum, negated profit sum, or assignment row-minima sum). In float
/// mode rhs_scale is the sum of all |coefficients| -- the published stability
/// choice -- and 1 in exact mode.
ShiftInfo shift_for_tsep(const Instance& inst, ArithmeticMode mode);

struct SeparationSettings {
    ArithmeticMode mode = ArithmeticMode::Exact;
    Rational violation_eps = Rational(1, 1000); // float mode only
    long long iteration_cap_base = 1000;        // row-generation cap = 10*pool + base
    bool check_lemma = true;                    // exact Sep: re-check alpha with one extra ws call
    RunStats* stats = nullptr;                  // optional counters
};

/// The master LP behind both point-separating oracles: a pool of weighted-sum
/// points indexing the generated rows. Once a row enters the pool it stays for
/// the remainder of the run, across all oracle calls.
class MasterLP {
public:
    MasterLP(OracleKind kind, int p, ShiftInfo shift, SeparationSettings settings);

    void seed(const std::vector<ObjPoint>& points);

    OracleKind kind() const { return kind_; }
    int dim() const { return p_; }
    const std::vector<ObjPoint>& pool() const { return pool_; }
    const ShiftInfo& shift() const { return shift_; }
    const SeparationSettings& settings() const { return settings_; }

    bool pool_contains(const ObjPoint& y) const;
    bool add_to_pool(const ObjPoint& y); // false if already present

private:
    OracleKind kind_;
    int p_;
    ShiftInfo shift_;
    SeparationSettings settings_;
    std::vector<ObjPoint> pool_;
    std::set<ObjPoint, LexLess> pool_index_;
};

struct OracleAnswer {
    enum class Status { Inside, Outside };
    Status status = Status::Inside;
    std::optional<Halfspace> cut;     // present iff Outside; strictly cut off y*
    std::vector<ObjPoint> discovered; // supported points met while separating rows
};

/// Point-separating oracle via the weighted-sum master LP
///   min y*·w - alpha  s.t.  y·w - alpha >= 0 (pool), sum w = 1, w >= 0.
/// Rows are generated by weighted-sum calls until none is violated; on
/// termination alpha equals the weighted-sum optimum of the final w (checked in
/// exact mode when settings.check_lemma is set).
OracleAnswer sep_point(const ObjPoint& y_star, MasterLP& master, const WeightedSumFn& oracle);

/// Target-cut oracle in shifted coordinates:
///   min y*'·w  s.t.  y'·w >= rhs_scale (pool), w >= 0,
/// outside iff the optimum is below rhs_scale; the returned cut is un-shifted.
OracleAnswer tsep_point(const ObjPoint& y_star, MasterLP& master, const WeightedSumFn& oracle);

/// Scale (w, alpha) by factor and truncate toward zero to integers -- the float-mode
/// hand-off that keeps the double-description update on integer data.
Halfspace integerize_cut(const Halfspace& h, long long factor);

} // namespace momoa
