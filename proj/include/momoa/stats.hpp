#pragma once

namespace momoa {

struct RunStats {
    long long ws_calls = 0;
    long long sep_calls = 0;
    long long lp_solves = 0;
    long long lp_pivots = 0;
    long long cuts_added = 0;
    long long sweeps = 0;
    long long lemma_checks = 0;
    double seconds = 0.0;
};

} // namespace momoa
