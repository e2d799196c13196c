#include "momoa/brute.hpp"
#include "momoa/driver.hpp"
#include "momoa/errors.hpp"
#include "momoa/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace momoa;

OracleKind parse_oracle(const std::string& s) {
    if (s == "sep")
        return OracleKind::Sep;
    if (s == "tsep")
        return OracleKind::TSep;
    throw ValidationError("unknown oracle '" + s + "' (expected sep or tsep)");
}

ArithmeticMode parse_mode(const std::string& s) {
    if (s == "exact")
        return ArithmeticMode::Exact;
    if (s == "float")
        return ArithmeticMode::Float;
    throw ValidationError("unknown mode '" + s + "' (expected exact or float)");
}

InstanceKind parse_kind(const std::string& s) {
    if (s == "map")
        return InstanceKind::Assignment;
    if (s == "mkp")
        return InstanceKind::Knapsack;
    if (s == "pts")
        return InstanceKind::ExplicitSet;
    throw ValidationError("unknown instance kind '" + s + "' (expected map, mkp or pts)");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw Error("cannot write to '" + out_path + "'");
    out << text;
}

int run_verify(const std::string& path, const std::vector<std::string>& oracles,
               const std::string& mode) {
    const Instance inst = load_instance(path);
    const std::vector<ObjPoint> q = brute_force_Q(inst);
    const BruteHull hull = brute_force_hull(q);
    bool all_match = true;
    for (const std::string& oracle : oracles) {
        RunConfig cfg;
        cfg.oracle = parse_oracle(oracle);
        cfg.mode = parse_mode(mode);
        const RunResult res = run(inst, cfg);
        const bool points_ok = res.extreme_points == hull.extreme_points;
        const bool facets_ok = res.facets == hull.facets;
        if (points_ok && facets_ok) {
            std::cout << oracle << ": MATCH (" << res.extreme_points.size() << " points, "
                      << res.facets.size() << " facets)\n";
            continue;
        }
        all_match = false;
        std::cout << oracle << ": MISMATCH\n";
        std::cout << "  solver points " << res.extreme_points.size() << ", oracle points "
                  << hull.extreme_points.size() << "\n";
        std::cout << "  solver facets " << res.facets.size() << ", oracle facets "
                  << hull.facets.size() << "\n";
    }
    return all_match ? 0 : 1;
}

struct BenchKey {
    std::string kind;
    int p = 0;
    int n = 0;
    bool operator<(const BenchKey& o) const {
        return std::tie(kind, p, n) < std::tie(o.kind, o.p, o.n);
    }
};

struct BenchCell {
    double facet_sum = 0;
    int solved = 0;
    int count = 0;
};

int run_bench(const std::string& dir, std::vector<double> limits,
              const std::vector<std::string>& oracles, const std::string& mode,
              const std::string& out_path) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw Error("no instance files in '" + dir + "'");

    // cell key: (group, oracle index, limit index)
    std::map<std::tuple<BenchKey, std::size_t, std::size_t>, BenchCell> cells;
    for (const fs::path& file : files) {
        const Instance inst = load_instance(file.string());
        const BenchKey key{kind_name(inst.kind()), inst.objectives(), inst.size()};
        for (std::size_t oi = 0; oi < oracles.size(); ++oi) {
            for (std::size_t li = 0; li < limits.size(); ++li) {
                RunConfig cfg;
                cfg.oracle = parse_oracle(oracles[oi]);
                cfg.mode = parse_mode(mode);
                cfg.time_limit_seconds = limits[li];
                const RunResult res = run(inst, cfg);
                BenchCell& cell = cells[{key, oi, li}];
                cell.facet_sum += static_cast<double>(res.facets.size());
                cell.solved += res.solved ? 1 : 0;
                cell.count += 1;
            }
        }
    }

    std::set<BenchKey> groups;
    for (const auto& [k, v] : cells)
        groups.insert(std::get<0>(k));

    std::ostringstream table;
    table << std::left << std::setw(16) << "group";
    for (const std::string& oracle : oracles)
        for (double limit : limits) {
            std::ostringstream head;
            head << oracle << '@' << limit << 's';
            table << std::right << std::setw(12) << head.str() + " #fac" << std::setw(7)
                  << "#sol";
        }
    table << '\n';
    std::ostringstream machine;
    for (const BenchKey& g : groups) {
        std::ostringstream label;
        label << g.kind << " p=" << g.p << " n=" << g.n;
        table << std::left << std::setw(16) << label.str();
        for (std::size_t oi = 0; oi < oracles.size(); ++oi)
            for (std::size_t li = 0; li < limits.size(); ++li) {
                const BenchCell& cell = cells[{g, oi, li}];
                const double avg = cell.count ? cell.facet_sum / cell.count : 0.0;
                table << std::right << std::setw(12) << std::fixed << std::setprecision(1)
                      << avg << std::setw(7) << cell.solved;
                machine << "row kind=" << g.kind << " p=" << g.p << " n=" << g.n
                        << " oracle=" << oracles[oi] << " limit=" << limits[li]
                        << " instances=" << cell.count << " fac_avg=" << std::fixed
                        << std::setprecision(3) << avg << " solved=" << cell.solved << '\n';
            }
        table << '\n';
    }
    std::cout << table.str();
    if (!out_path.empty())
        emit(machine.str(), out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Outer-approximation solver for multiobjective integer programs: "
                 "computes the nondominated extreme points and the facets of the "
                 "upper image through weighted-sum oracle calls"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    std::string solve_path, solve_oracle = "sep", solve_mode = "exact", solve_out;
    double solve_limit = -1;
    long long solve_max_iter = -1;
    bool solve_snapshots = false, solve_relax = false;
    solve->add_option("instance", solve_path, "instance file")->required();
    solve->add_option("--oracle", solve_oracle, "separation oracle: sep|tsep");
    solve->add_option("--mode", solve_mode, "arithmetic: exact|float");
    solve->add_option("--time-limit", solve_limit, "wall-clock limit in seconds");
    solve->add_option("--max-iterations", solve_max_iter, "sweep limit");
    solve->add_flag("--snapshots", solve_snapshots, "record a lower bound set per sweep");
    solve->add_flag("--relax", solve_relax, "separate against the LP relaxation (mkp only)");
    solve->add_option("--out", solve_out, "write the result file here instead of stdout");
    solve->callback([&] {
        RunConfig cfg;
        cfg.oracle = parse_oracle(solve_oracle);
        cfg.mode = parse_mode(solve_mode);
        if (solve_limit >= 0)
            cfg.time_limit_seconds = solve_limit;
        if (solve_max_iter >= 0)
            cfg.max_iterations = solve_max_iter;
        cfg.record_snapshots = solve_snapshots;
        cfg.use_relaxation = solve_relax;
        const RunResult res = run(load_instance(solve_path), cfg);
        emit(write_result(res), solve_out);
    });

    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    std::string gen_kind, gen_out;
    int gen_p = 0, gen_n = 0;
    std::uint64_t gen_seed = 0;
    gen->add_option("kind", gen_kind, "map|mkp")->required();
    gen->add_option("p", gen_p, "number of objectives")->required();
    gen->add_option("n", gen_n, "size")->required();
    gen->add_option("seed", gen_seed, "random seed")->required();
    gen->add_option("--out", gen_out, "write the instance here instead of stdout");
    gen->callback([&] {
        emit(write_instance(generate_instance(parse_kind(gen_kind), gen_p, gen_n, gen_seed)),
             gen_out);
    });

    auto* verify = app.add_subcommand(
        "verify", "Solve and compare against the brute-force hull (small instances)");
    std::string verify_path, verify_mode = "exact";
    std::vector<std::string> verify_oracles{"sep", "tsep"};
    verify->add_option("instance", verify_path, "instance file")->required();
    verify->add_option("--oracle", verify_oracles, "oracles to check")
        ->delimiter(',')
        ->expected(1, 2);
    verify->add_option("--mode", verify_mode, "arithmetic: exact|float");
    verify->callback([&] { exit_code = run_verify(verify_path, verify_oracles, verify_mode); });

    auto* bench = app.add_subcommand("bench", "Run a directory of instances against time limits");
    std::string bench_dir, bench_mode = "float", bench_out;
    std::vector<double> bench_limits{10, 100, 600};
    std::vector<std::string> bench_oracles{"sep", "tsep"};
    bench->add_option("dir", bench_dir, "directory of instance files")->required();
    bench->add_option("--time-limits", bench_limits, "limits in seconds")->delimiter(',');
    bench->add_option("--oracle", bench_oracles, "oracles to run")->delimiter(',')->expected(1, 2);
    bench->add_option("--mode", bench_mode, "arithmetic: exact|float");
    bench->add_option("--out", bench_out, "write machine-readable rows here");
    bench->callback([&] {
        exit_code = run_bench(bench_dir, bench_limits, bench_oracles, bench_mode, bench_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const momoa::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
