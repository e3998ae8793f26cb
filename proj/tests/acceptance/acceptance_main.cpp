// Acceptance suite: end-to-end checks of the planner stack, one pass/fail
// line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "coverplan/coverplan.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace coverplan;

namespace {

struct Criterion {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& what) {
        if (pass && detail.empty()) detail = what;
    }
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<std::uint64_t> kShippedSeeds{3, 4, 6, 8, 9};
const AreaOfInterest kArea{{-2000, -2000}, {2000, 2000}};
const ScenarioTemplate kTemplate{{-2000, -2000}, {2000, 2000}, 50.0, 400.0, 100.0, {1.0, 1.0, 10}};

// --- criterion 1: solve_disk_chain matches the recursive-grid oracle --------

Criterion criterion1() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const DiskChainInstance inst = testgen::random_chain(seed * 131 + 17, 3);
        const double got = solve_disk_chain(inst).length;
        const double oracle = oracles::grid_chain_oracle(inst);
        worst = std::max(worst, std::abs(got - oracle));
        if (std::abs(got - oracle) > 1e-3) {
            c.fail("instance " + std::to_string(seed) + " deviates " + std::to_string(got - oracle) + " m");
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 60.0) c.fail("took " + std::to_string(elapsed) + " s (budget 60 s)");
    c.note("200 instances, max deviation " + std::to_string(worst) + " m, " +
           std::to_string(elapsed) + " s");
    return c;
}

// --- criterion 2: greedy never beats exact; equality on >= 70% --------------

Criterion criterion2() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    int equal = 0;
    const int instances = 100;
    for (int i = 0; i < instances; ++i) {
        SplitMix64 rng(5000 + i);
        Scenario sc;
        sc.start = {-1000, -1000};
        sc.end = {1000, 1000};
        sc.v_max = 50.0;
        const double t_min = distance(sc.start, sc.end) / sc.v_max;
        sc.horizon = t_min * rng.next_double(1.02, 1.9);
        sc.estimation = {1.0, 1.0, 10};
        const int n = 1 + static_cast<int>(rng.next_double(0.0, 6.0));
        for (int id = 1; id <= n; ++id) {
            sc.nodes.push_back({id,
                                {rng.next_double(-1000, 1000), rng.next_double(-1000, 1000)},
                                rng.next_double(40.0, 250.0)});
        }
        const std::size_t greedy_k = greedy_plan(sc).plan.order.size();
        const std::size_t exact_k = exact_plan(sc).order.size();
        if (greedy_k > exact_k) {
            c.fail("greedy K " + std::to_string(greedy_k) + " exceeds exact K " +
                   std::to_string(exact_k) + " on instance " + std::to_string(i));
        }
        if (greedy_k == exact_k) ++equal;
    }
    if (equal < 70) c.fail("equality on only " + std::to_string(equal) + "/100 instances");
    const double elapsed = seconds_since(t0);
    if (elapsed >= 300.0) c.fail("took " + std::to_string(elapsed) + " s (budget 300 s)");
    c.note("greedy <= exact on 100/100, equal on " + std::to_string(equal) + "/100, " +
           std::to_string(elapsed) + " s");
    return c;
}

// --- criterion 3: polyline reduction preserves visits, never lengthens ------

// The reduction must extract exactly the visited node set, and the induced
// straight-segment path must still visit all of it without getting longer.
// Shortcuts may sweep up additional disks the wiggly original missed; that
// is counted and reported, never a failure (the count can only grow).
Criterion criterion3() {
    Criterion c;
    int gained = 0;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        const Scenario sc = testgen::random_scenario(seed * 13 + 5, 10);
        const Trajectory tr = testgen::random_feasible_trajectory(seed * 29 + 11, sc);
        if (!trajectory_violations(sc, tr).empty()) {
            c.fail("generator produced an invalid trajectory at seed " + std::to_string(seed));
            continue;
        }
        const VisitReport before = visit_report(sc, tr);
        const Plan plan = polyline_reduce(sc, tr);

        std::vector<bool> extracted(sc.nodes.size(), false);
        for (const int id : plan.order) extracted[id - 1] = true;
        if (extracted != before.visited) {
            c.fail("extracted node set differs from the visit set at seed " + std::to_string(seed));
            continue;
        }

        const Trajectory rebuilt = plan_to_trajectory(sc, plan);
        const VisitReport after = visit_report(sc, rebuilt);
        bool lost = false;
        for (const int id : plan.order) lost = lost || !after.is_visited(id);
        if (lost || after.count < before.count) {
            c.fail("a visited node was lost at seed " + std::to_string(seed));
            continue;
        }
        if (plan.total_length > tr.path_length() + kGeoTol) {
            c.fail("length grew at seed " + std::to_string(seed));
            continue;
        }
        if (after.count > before.count) ++gained;
    }
    c.note("500/500 reductions kept every visited node and never lengthened; shortcuts swept up "
           "extra nodes on " + std::to_string(gained) + " of them");
    return c;
}

// --- criterion 4: analytic MSE vs the Monte-Carlo quantizer -----------------

Criterion criterion4() {
    Criterion c;
    int combos = 0;
    for (const double sigma2 : {0.0, 1.0}) {
        for (const double w : {1.0, 3.0}) {
            for (const int s : {1, 2, 4}) {
                const EstimationParams p{sigma2, w, s};
                const double mc_var =
                    oracles::mc_quantization_variance(w, s, 1000000, 42 + combos);
                const double analytic = mse(p, 1);
                const double reference = sigma2 + mc_var;
                if (std::abs(analytic - reference) > 5e-3 * reference) {
                    c.fail("3-digit mismatch at sigma2=" + std::to_string(sigma2) +
                           " W=" + std::to_string(w) + " S=" + std::to_string(s));
                }
                ++combos;
            }
        }
    }
    const EstimationParams p{0.7, 2.0, 3};
    const double product = mse(p, 1);
    for (int k = 2; k <= 40; ++k) {
        if (std::abs(mse(p, k) * k - product) > 1e-9 * product) c.fail("mse*K not constant");
        if (mse(p, k) >= mse(p, k - 1)) c.fail("mse not decreasing in K");
    }
    for (int s = 2; s <= 12; ++s) {
        if (mse({0.5, 2.0, s}, 3) >= mse({0.5, 2.0, s - 1}, 3)) c.fail("mse not decreasing in S");
    }
    c.note("12 Monte-Carlo combos within 3 significant digits");
    return c;
}

// --- criteria 5-7: figure-shape orderings and feasibility invariants --------

struct CellResult {
    int greedy_k = 0;
    int strip_k = 0;
    int zigzag_k = 0;
};

struct ShapeTables {
    // per seed, per T (criterion 5) and per r (criterion 6)
    std::map<std::uint64_t, std::vector<CellResult>> by_T;
    std::map<std::uint64_t, std::vector<CellResult>> by_r;
    int validated_trajectories = 0;
    int validated_plans = 0;
    bool feasibility_ok = true;
    std::string feasibility_note;
};

const std::vector<double> kTGrid{120, 200, 300, 400, 500, 600};
const std::vector<double> kRGrid{50, 100, 200, 300, 400};

ShapeTables run_shape_tables() {
    ShapeTables tables;
    auto check_trajectory = [&](const Scenario& sc, const Trajectory& tr) {
        const auto violations = trajectory_violations(sc, tr);
        if (!violations.empty()) {
            tables.feasibility_ok = false;
            tables.feasibility_note = violations.front();
        }
        if (tr.path_length() > sc.budget() + kGeoTol) {
            tables.feasibility_ok = false;
            tables.feasibility_note = "path exceeds the budget";
        }
        ++tables.validated_trajectories;
    };
    auto check_plan = [&](const Scenario& sc, const Plan& plan) {
        const auto violations = plan_violations(sc, plan);
        if (!violations.empty()) {
            tables.feasibility_ok = false;
            tables.feasibility_note = violations.front();
        }
        ++tables.validated_plans;
    };
    auto run_cell = [&](const Scenario& sc) {
        CellResult cell;
        const Plan plan = greedy_plan(sc).plan;
        check_plan(sc, plan);
        const Trajectory greedy_tr = plan_to_trajectory(sc, plan);
        check_trajectory(sc, greedy_tr);
        cell.greedy_k = visit_report(sc, greedy_tr).count;
        const Trajectory strip_tr = tune_height(sc, kArea, SweepKind::strip).trajectory;
        check_trajectory(sc, strip_tr);
        cell.strip_k = visit_report(sc, strip_tr).count;
        const Trajectory zig_tr = tune_height(sc, kArea, SweepKind::zigzag).trajectory;
        check_trajectory(sc, zig_tr);
        cell.zigzag_k = visit_report(sc, zig_tr).count;
        return cell;
    };
    for (const std::uint64_t seed : kShippedSeeds) {
        for (const double t : kTGrid) {
            Scenario sc = generate_scenario(seed, 40, kArea, 200.0, kTemplate);
            sc.horizon = t;
            tables.by_T[seed].push_back(run_cell(sc));
        }
        for (const double r : kRGrid) {
            Scenario sc = generate_scenario(seed, 40, kArea, r, kTemplate);
            sc.horizon = 200.0;
            tables.by_r[seed].push_back(run_cell(sc));
        }
    }
    return tables;
}

Criterion criterion5(const ShapeTables& tables, double elapsed) {
    Criterion c;
    for (const auto& [seed, cells] : tables.by_T) {
        int first_greedy_40 = -1, first_strip_40 = -1, first_zig_40 = -1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const CellResult& cell = cells[i];
            if (!(cell.greedy_k >= cell.strip_k && cell.strip_k >= cell.zigzag_k)) {
                c.fail("ordering violated at seed " + std::to_string(seed) + " T=" +
                       std::to_string(kTGrid[i]));
            }
            if (i > 0) {
                const CellResult& prev = cells[i - 1];
                if (cell.greedy_k < prev.greedy_k || cell.strip_k < prev.strip_k ||
                    cell.zigzag_k < prev.zigzag_k) {
                    c.fail("K not monotone in T at seed " + std::to_string(seed));
                }
            }
            if (cell.greedy_k == 40 && first_greedy_40 < 0) first_greedy_40 = static_cast<int>(i);
            if (cell.strip_k == 40 && first_strip_40 < 0) first_strip_40 = static_cast<int>(i);
            if (cell.zigzag_k == 40 && first_zig_40 < 0) first_zig_40 = static_cast<int>(i);
        }
        const bool strictly_first =
            first_greedy_40 >= 0 && (first_strip_40 < 0 || first_greedy_40 < first_strip_40) &&
            (first_zig_40 < 0 || first_greedy_40 < first_zig_40);
        if (!strictly_first) {
            c.fail("greedy does not reach K=40 strictly first at seed " + std::to_string(seed));
        }
    }
    if (elapsed >= 600.0) c.fail("shape tables took " + std::to_string(elapsed) + " s (budget 600 s)");
    c.note("5 seeds x 6 horizons ordered, " + std::to_string(elapsed) + " s for both grids");
    return c;
}

Criterion criterion6(const ShapeTables& tables) {
    Criterion c;
    for (const auto& [seed, cells] : tables.by_r) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const CellResult& cell = cells[i];
            if (!(cell.greedy_k >= cell.strip_k && cell.greedy_k >= cell.zigzag_k)) {
                c.fail("greedy not ahead at seed " + std::to_string(seed) + " r=" +
                       std::to_string(kRGrid[i]));
            }
            if (i > 0) {
                const CellResult& prev = cells[i - 1];
                if (cell.greedy_k < prev.greedy_k || cell.strip_k < prev.strip_k ||
                    cell.zigzag_k < prev.zigzag_k) {
                    c.fail("K not monotone in r at seed " + std::to_string(seed));
                }
            }
        }
    }
    c.note("5 seeds x 5 radii ordered and monotone");
    return c;
}

Criterion criterion7(const ShapeTables& tables) {
    Criterion c;
    if (!tables.feasibility_ok) c.fail(tables.feasibility_note);
    c.note(std::to_string(tables.validated_trajectories) + " trajectories and " +
           std::to_string(tables.validated_plans) + " plans validated");
    return c;
}

// --- criterion 8: minimum-horizon boundary ----------------------------------

Criterion criterion8() {
    Criterion c;
    const double t_min = 113.137085;  // 4000*sqrt(2)/50
    const double chord = distance(kTemplate.start, kTemplate.end);
    // The budget at t_min leaves at most kGeoTol of slack, so any returned
    // path is the chord up to a transverse wobble of sqrt(slack * L / 2)
    // (a displacement d off a chord of length L costs about 2 d^2 / L).
    const double max_wobble = std::sqrt(kGeoTol * chord / 2.0);
    for (const std::uint64_t seed : kShippedSeeds) {
        Scenario sc = generate_scenario(seed, 40, kArea, 200.0, kTemplate);
        sc.horizon = t_min;
        const Trajectory greedy_tr = plan_to_trajectory(sc, greedy_plan(sc).plan);
        const Trajectory strip_tr = tune_height(sc, kArea, SweepKind::strip).trajectory;
        const Trajectory zig_tr = tune_height(sc, kArea, SweepKind::zigzag).trajectory;
        for (const Trajectory* tr : {&greedy_tr, &strip_tr, &zig_tr}) {
            if (tr->path_length() > chord + kGeoTol) {
                c.fail("path longer than the chord at seed " + std::to_string(seed));
            }
            for (const TrajectoryVertex& v : tr->vertices) {
                if (point_segment_distance(v.position, sc.start, sc.end) > max_wobble) {
                    c.fail("non-straight trajectory at seed " + std::to_string(seed));
                }
            }
        }
        const int greedy_k = visit_report(sc, greedy_tr).count;
        const int strip_k = visit_report(sc, strip_tr).count;
        const int zig_k = visit_report(sc, zig_tr).count;
        if (greedy_k != strip_k || strip_k != zig_k) {
            c.fail("K differs at T_min on seed " + std::to_string(seed));
        }
    }
    c.note("straight-segment paths (wobble under " + std::to_string(max_wobble) +
           " m) with identical K on 5 seeds");
    return c;
}

// --- criterion 9: sweep determinism ------------------------------------------

std::string mask_wall_time(const std::string& csv) {
    return std::regex_replace(csv, std::regex(",[0-9]+\\.[0-9]{6}\n"), ",-\n");
}

Criterion criterion9() {
    Criterion c;
    SweepSpec spec;
    spec.algorithms = {Algorithm::greedy, Algorithm::strip, Algorithm::zigzag};
    spec.T_values = {200.0, 400.0};
    spec.r_values = {100.0, 200.0};
    spec.seeds = {3, 4};
    spec.n = 40;
    spec.area = kArea;
    spec.base = kTemplate;
    const std::string first = mask_wall_time(to_csv(run_sweep(spec, 1)));
    const std::string rerun = mask_wall_time(to_csv(run_sweep(spec, 1)));
    const std::string parallel = mask_wall_time(to_csv(run_sweep(spec, 4)));
    if (first != rerun) c.fail("sequential rerun differs");
    if (first != parallel) c.fail("jobs=4 differs from jobs=1");
    const std::size_t rows = std::count(first.begin(), first.end(), '\n');
    if (rows != 1 + spec.algorithms.size() * spec.seeds.size() * spec.T_values.size() *
                        spec.r_values.size()) {
        c.fail("unexpected row count " + std::to_string(rows));
    }
    c.note("24-cell sweep byte-identical across reruns and jobs counts (wall_time masked)");
    return c;
}

// --- criterion 10: greedy complexity guardrail -------------------------------

Criterion criterion10() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    Scenario sc = generate_scenario(3, 40, kArea, 200.0, kTemplate);
    const GreedyResult res = greedy_plan(sc);
    const double elapsed = seconds_since(t0);
    if (res.plan_route_calls > 820) {
        c.fail("issued " + std::to_string(res.plan_route_calls) + " candidate evaluations (> 820)");
    }
    if (elapsed >= 120.0) c.fail("took " + std::to_string(elapsed) + " s (budget 120 s)");
    c.note(std::to_string(res.plan_route_calls) + " candidate evaluations, K=" +
           std::to_string(res.plan.order.size()) + ", " + std::to_string(elapsed) + " s");
    return c;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Criterion result;
    };
    std::vector<Entry> entries;

    entries.push_back({"1 waypoint solver matches the grid oracle", criterion1()});
    entries.push_back({"2 greedy bounded by the exhaustive oracle", criterion2()});
    entries.push_back({"3 polyline reduction preserves visits", criterion3()});
    entries.push_back({"4 MSE model matches the Monte-Carlo quantizer", criterion4()});

    const auto shapes_t0 = std::chrono::steady_clock::now();
    const ShapeTables tables = run_shape_tables();
    const double shapes_elapsed = seconds_since(shapes_t0);
    entries.push_back({"5 K vs T orderings on shipped seeds", criterion5(tables, shapes_elapsed)});
    entries.push_back({"6 K vs r orderings on shipped seeds", criterion6(tables)});
    entries.push_back({"7 every emitted trajectory and plan is feasible", criterion7(tables)});
    entries.push_back({"8 minimum-horizon boundary", criterion8()});
    entries.push_back({"9 sweep determinism", criterion9()});
    entries.push_back({"10 greedy complexity guardrail", criterion10()});

    int failures = 0;
    for (const Entry& e : entries) {
        std::printf("[%s] criterion %s%s%s\n", e.result.pass ? "PASS" : "FAIL", e.name,
                    e.result.detail.empty() ? "" : ": ", e.result.detail.c_str());
        if (!e.result.pass) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
