#pragma once

#include "momoa/driver.hpp"
#include "momoa/instance.hpp"

#include <cstdint>
#include <string>

namespace momoa {

/// Line-oriented instance text:
///   line 1: kind ("map" | "mkp" | "pts"), p, n
///   map: p blocks of n x n integers (row-major)
///   mkp: capacity; n weights; p rows of n profits
///   pts: n rows of p integers
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);
std::string write_instance(const Instance& inst);

/// Seeded generators following the published families: map costs uniform in
/// [1,20]; mkp profits/weights uniform in [1,1000] with capacity = ceil(sum w / 2).
/// Deterministic across platforms for a fixed seed.
Instance generate_instance(InstanceKind kind, int p, int n, std::uint64_t seed);

/// Canonical result document: header keys (solved, oracle, mode, points, facets,
/// ws_calls, cuts, seconds), then "point ..." rows (exact rationals) and
/// "facet w_1 ... w_p alpha" rows (coprime integers), both sorted; snapshots appended
/// when present.
std::string write_result(const RunResult& result);

std::string oracle_name(OracleKind k);
std::string mode_name(ArithmeticMode m);

} // namespace momoa
