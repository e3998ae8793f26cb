#pragma once

// Experiment harness: run a grid of (algorithm, seed, T, r) cells over a
// scenario template and collect plot-ready rows. Rows are a pure function of
// the spec and seeds; execution order and the jobs count never change them.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "coverplan/benchmarks.hpp"
#include "coverplan/estimation.hpp"
#include "coverplan/planner.hpp"
#include "coverplan/polyline.hpp"
#include "coverplan/scenario_gen.hpp"
#include "coverplan/visit.hpp"

namespace coverplan {

enum class Algorithm { greedy, strip, zigzag, exact };

inline std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::greedy: return "greedy";
        case Algorithm::strip: return "strip";
        case Algorithm::zigzag: return "zigzag";
        case Algorithm::exact: return "exact";
    }
    return "?";
}

inline std::optional<Algorithm> algorithm_from_string(std::string_view s) {
    if (s == "greedy") return Algorithm::greedy;
    if (s == "strip") return Algorithm::strip;
    if (s == "zigzag") return Algorithm::zigzag;
    if (s == "exact") return Algorithm::exact;
    return std::nullopt;
}

struct SweepSpec {
    std::vector<Algorithm> algorithms;
    std::vector<double> T_values;          // seconds
    std::vector<double> r_values;          // meters
    std::vector<std::uint64_t> seeds;
    int n = 0;                             // nodes per generated scenario
    AreaOfInterest area;
    ScenarioTemplate base;                 // horizon is overridden per cell
};

struct SweepRow {
    Algorithm algorithm = Algorithm::greedy;
    std::uint64_t seed = 0;
    double T = 0.0;
    double r = 0.0;
    int K = 0;
    double path_length = 0.0;
    std::optional<double> mse;  // nullopt when no data was collected
    double wall_time = 0.0;     // seconds, measurement only
    std::string error;          // per-cell failure; empty on success
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

inline void validate_sweep_spec(const SweepSpec& spec) {
    if (spec.algorithms.empty()) throw std::invalid_argument("sweep: no algorithms");
    if (spec.T_values.empty()) throw std::invalid_argument("sweep: empty T grid");
    if (spec.r_values.empty()) throw std::invalid_argument("sweep: empty r grid");
    if (spec.seeds.empty()) throw std::invalid_argument("sweep: no seeds");
    for (const Algorithm a : spec.algorithms) {
        if (a == Algorithm::exact && spec.n > 8) {
            throw std::invalid_argument("sweep: exact is only allowed for n <= 8");
        }
    }
    if (!(spec.area.width() > 0.0) || !(spec.area.height() > 0.0)) {
        throw std::invalid_argument("sweep: area must have positive extent");
    }
}

namespace detail {

// Trajectory for one cell; the planners themselves are deterministic.
inline Trajectory run_cell(Algorithm algorithm, const Scenario& sc, const AreaOfInterest& area) {
    switch (algorithm) {
        case Algorithm::greedy: return plan_to_trajectory(sc, greedy_plan(sc).plan);
        case Algorithm::strip: return tune_height(sc, area, SweepKind::strip).trajectory;
        case Algorithm::zigzag: return tune_height(sc, area, SweepKind::zigzag).trajectory;
        case Algorithm::exact: return plan_to_trajectory(sc, exact_plan(sc));
    }
    throw std::logic_error("unknown algorithm");
}

}  // namespace detail

inline SweepResult run_sweep(const SweepSpec& spec, int jobs = 1) {
    validate_sweep_spec(spec);
    if (jobs < 1) jobs = 1;

    // Node placement depends only on (seed, n, area); radii and horizon are
    // applied per cell.
    std::vector<Scenario> base_by_seed;
    base_by_seed.reserve(spec.seeds.size());
    for (const std::uint64_t seed : spec.seeds) {
        base_by_seed.push_back(generate_scenario(seed, spec.n, spec.area, 0.0, spec.base));
    }

    struct Cell {
        Algorithm algorithm;
        std::size_t seed_index;
        double T;
        double r;
    };
    std::vector<Cell> cells;
    cells.reserve(spec.algorithms.size() * spec.seeds.size() * spec.T_values.size() *
                  spec.r_values.size());
    for (const Algorithm a : spec.algorithms) {
        for (std::size_t si = 0; si < spec.seeds.size(); ++si) {
            for (const double T : spec.T_values) {
                for (const double r : spec.r_values) {
                    cells.push_back({a, si, T, r});
                }
            }
        }
    }

    SweepResult result;
    result.rows.resize(cells.size());

    auto run_one = [&](std::size_t i) {
        const Cell& cell = cells[i];
        SweepRow row;
        row.algorithm = cell.algorithm;
        row.seed = spec.seeds[cell.seed_index];
        row.T = cell.T;
        row.r = cell.r;
        Scenario sc = base_by_seed[cell.seed_index];
        for (SensorNode& node : sc.nodes) node.radius = cell.r;
        sc.horizon = cell.T;
        try {
            const auto t0 = std::chrono::steady_clock::now();
            const Trajectory tr = detail::run_cell(cell.algorithm, sc, spec.area);
            const auto t1 = std::chrono::steady_clock::now();
            const VisitReport report = visit_report(sc, tr);
            row.K = report.count;
            row.path_length = tr.path_length();
            if (report.count >= 1) row.mse = mse(sc.estimation, report.count);
            row.wall_time = std::chrono::duration<double>(t1 - t0).count();
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        result.rows[i] = std::move(row);
    };

    if (jobs == 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
                run_one(i);
            }
        };
        std::vector<std::thread> pool;
        const int count = std::min<int>(jobs, static_cast<int>(cells.size()));
        pool.reserve(count);
        for (int t = 0; t < count; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return result;
}

namespace detail {

inline std::string format_fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

}  // namespace detail

// CSV with one row per successful cell; failed cells carry no data and are
// reported through SweepRow::error instead.
inline std::string to_csv(const SweepResult& result) {
    std::string out = "algorithm,seed,T,r,K,path_length,mse,wall_time\n";
    for (const SweepRow& row : result.rows) {
        if (!row.error.empty()) continue;
        out += std::string(to_string(row.algorithm)) + ',' + std::to_string(row.seed) + ',' +
               detail::format_fixed(row.T) + ',' + detail::format_fixed(row.r) + ',' +
               std::to_string(row.K) + ',' + detail::format_fixed(row.path_length) + ',' +
               (row.mse ? detail::format_fixed(*row.mse) : std::string("undefined")) + ',' +
               detail::format_fixed(row.wall_time) + '\n';
    }
    return out;
}

}  // namespace coverplan
