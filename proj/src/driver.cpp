#include "momoa/driver.hpp"

#include "momoa/errors.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace momoa {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Rational abs_rat(const Rational& x) {
    return sgn(x) < 0 ? Rational(-x) : x;
}

} // namespace

bool match_inside(const ObjPoint& y, const RunState& state, const Rational& eps) {
    if (sgn(eps) == 0)
        return state.inside_vertices.count(y) != 0;
    for (const ObjPoint& c : state.inside_vertices) {
        bool close = true;
        for (std::size_t i = 0; i < y.size() && close; ++i)
            close = abs_rat(y[i] - c[i]) <= eps;
        if (close)
            return true;
    }
    return false;
}

LowerBoundSet snapshot(const RunState& state) {
    return {state.iteration, state.approx.vertices(), state.approx.halfspaces()};
}

RunResult run(const Instance& inst, const RunConfig& cfg) {
    if (cfg.use_relaxation && inst.kind() != InstanceKind::Knapsack)
        throw ValidationError("the relaxation oracle is only available for knapsack instances");
    if (cfg.snapshot_cadence < 1)
        throw ValidationError("snapshot cadence must be positive");

    const auto t0 = Clock::now();
    const int p = inst.objectives();

    RunStats stats;
    const WeightedSumFn oracle = [&](const Weight& w) {
        ++stats.ws_calls;
        return cfg.use_relaxation ? ws_knapsack_relax(inst, w) : ws_solve(inst, w);
    };

    const IdealPoint ideal = ideal_point(oracle, p);

    SeparationSettings ssettings;
    ssettings.mode = cfg.mode;
    ssettings.violation_eps = cfg.violation_eps;
    ssettings.check_lemma = cfg.check_lemma;
    ssettings.stats = &stats;
    ShiftInfo shift;
    shift.offset.assign(static_cast<std::size_t>(p), Rational(0));
    if (cfg.oracle == OracleKind::TSep)
        shift = shift_for_tsep(inst, cfg.mode);

    RunState state{OuterApprox::from_ideal_point(ideal.point),
                   {},
                   MasterLP(cfg.oracle, p, std::move(shift), std::move(ssettings)),
                   0,
                   RunStats{}};
    state.master.seed(ideal.minimizers);
    for (const ObjPoint& y : ideal.minimizers)
        state.inside_vertices.insert(y);

    const Rational match_eps =
        cfg.mode == ArithmeticMode::Float ? cfg.inside_match_eps : Rational(0);

    std::vector<LowerBoundSet> snapshots;
    long long last_snapshot_iter = -1;
    auto record = [&](bool force) {
        if (!cfg.record_snapshots)
            return;
        if (!force && state.iteration % cfg.snapshot_cadence != 0)
            return;
        if (last_snapshot_iter == state.iteration)
            return;
        snapshots.push_back(snapshot(state));
        last_snapshot_iter = state.iteration;
    };
    auto out_of_time = [&] {
        return cfg.time_limit_seconds && seconds_since(t0) >= *cfg.time_limit_seconds;
    };

    record(true); // the initial orthant is already a valid lower bound set

    bool solved = false;
    int stalled_sweeps = 0;
    for (;;) {
        if (cfg.max_iterations && state.iteration >= *cfg.max_iterations)
            break;
        const std::vector<ObjPoint> verts = state.approx.vertices();
        std::vector<Halfspace> cuts;
        bool interrupted = false;
        for (const ObjPoint& v : verts) {
            if (out_of_time()) {
                interrupted = true;
                break;
            }
            if (match_inside(v, state, match_eps))
                continue;
            ++stats.sep_calls;
            const OracleAnswer ans = cfg.oracle == OracleKind::Sep
                                         ? sep_point(v, state.master, oracle)
                                         : tsep_point(v, state.master, oracle);
            for (const ObjPoint& d : ans.discovered)
                state.inside_vertices.insert(d);
            if (ans.status == OracleAnswer::Status::Outside)
                cuts.push_back(*ans.cut);
            else
                state.inside_vertices.insert(v);
        }
        if (interrupted)
            break;
        if (cuts.empty()) {
            solved = true;
            break;
        }

        // Batch hand-off: normalize, integerize in float mode, deduplicate.
        std::vector<Halfspace> batch;
        std::set<Halfspace, HalfspaceLexLess> seen;
        for (const Halfspace& c : cuts) {
            Halfspace h = normalized_by_weight_sum(c);
            if (cfg.mode == ArithmeticMode::Float)
                h = integerize_cut(h, cfg.scale_factor);
            h.canonicalize();
            if (seen.insert(h).second)
                batch.push_back(h);
        }
        state.approx = state.approx.add_halfspaces(batch);
        stats.cuts_added += static_cast<long long>(batch.size());
        ++state.iteration;
        ++stats.sweeps;
        record(false);

        if (state.approx.vertices() == verts) {
            // Every cut was slack or implied at the stored vertices. Exact cuts
            // strictly remove the vertex they separate, so this is only reachable
            // through float-mode truncation; give up rather than loop.
            if (cfg.mode == ArithmeticMode::Exact)
                throw InternalError("sweep added cuts but removed no vertex");
            if (++stalled_sweeps >= 3)
                break;
        } else {
            stalled_sweeps = 0;
        }
    }

    record(true);

    RunResult result;
    result.solved = solved;
    result.extreme_points = state.approx.vertices();
    result.facets = state.approx.halfspaces();
    std::sort(result.facets.begin(), result.facets.end(), HalfspaceLexLess{});
    stats.seconds = seconds_since(t0);
    state.stats = stats;
    result.stats = stats;
    result.snapshots = std::move(snapshots);
    result.oracle = cfg.oracle;
    result.mode = cfg.mode;
    return result;
}

} // namespace momoa
