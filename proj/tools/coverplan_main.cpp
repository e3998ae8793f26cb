// coverplan: plan UAV data-collection trajectories over sensor fields.
//
//   coverplan gen    generate a random scenario file
//   coverplan plan   plan a trajectory for one scenario and algorithm
//   coverplan sweep  run an experiment grid and emit CSV
//
// All I/O goes through files and stdio; no network access. The stdout
// summary of `plan` is machine-parseable: "K=<k> length=<m> mse=<v>".

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coverplan/coverplan.hpp"

namespace {

using namespace coverplan;

struct ParsedArea {
    double width = 0.0;
    double height = 0.0;
};

ParsedArea parse_area(const std::string& text) {
    ParsedArea area;
    char sep = 0;
    std::istringstream in(text);
    if (!(in >> area.width >> sep >> area.height) || (sep != 'x' && sep != 'X') ||
        area.width <= 0.0 || area.height <= 0.0) {
        throw CLI::ValidationError("--area", "expected WxH with positive extents, got '" + text + "'");
    }
    return area;
}

Point2D parse_point(const std::string& text, const std::string& flag) {
    Point2D p;
    char sep = 0;
    std::istringstream in(text);
    if (!(in >> p.x >> sep >> p.y) || sep != ',') {
        throw CLI::ValidationError(flag, "expected x,y, got '" + text + "'");
    }
    return p;
}

std::vector<double> parse_grid(const std::string& text, const std::string& flag) {
    double lo = 0.0, hi = 0.0, step = 0.0;
    char s1 = 0, s2 = 0;
    std::istringstream in(text);
    if (!(in >> lo >> s1 >> hi >> s2 >> step) || s1 != ':' || s2 != ':') {
        throw CLI::ValidationError(flag, "expected a:b:step, got '" + text + "'");
    }
    std::vector<double> values;
    if (step > 0.0) {
        for (double v = lo; v <= hi + 1e-9; v += step) values.push_back(v);
    }
    if (values.empty()) throw CLI::ValidationError(flag, "grid '" + text + "' is empty");
    return values;
}

std::optional<std::uint64_t> seed_override_from_env() {
    const char* raw = std::getenv("PLANNER_SEED_OVERRIDE");
    if (!raw || !*raw) return std::nullopt;
    try {
        return std::stoull(raw);
    } catch (const std::exception&) {
        throw std::runtime_error("PLANNER_SEED_OVERRIDE must be an integer, got '" + std::string(raw) + "'");
    }
}

// Area rectangle of a given size centered between the scenario endpoints.
AreaOfInterest centered_area(Point2D start, Point2D end, ParsedArea size) {
    const Point2D mid = 0.5 * (start + end);
    return {{mid.x - 0.5 * size.width, mid.y - 0.5 * size.height},
            {mid.x + 0.5 * size.width, mid.y + 0.5 * size.height}};
}

// Fallback when no --area is given: the tight box around the node positions
// and both endpoints.
AreaOfInterest bounding_area(const Scenario& sc) {
    Point2D lo = sc.start, hi = sc.start;
    auto grow = [&](Point2D p) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    };
    grow(sc.end);
    for (const SensorNode& n : sc.nodes) grow(n.position);
    if (hi.x - lo.x <= 0.0) hi.x = lo.x + 1.0;
    if (hi.y - lo.y <= 0.0) hi.y = lo.y + 1.0;
    return {lo, hi};
}

std::string format_summary(int k, double length, std::optional<double> mse_value) {
    char buf[128];
    if (mse_value) {
        std::snprintf(buf, sizeof(buf), "K=%d length=%.6f mse=%.6f", k, length, *mse_value);
    } else {
        std::snprintf(buf, sizeof(buf), "K=%d length=%.6f mse=undefined", k, length);
    }
    return buf;
}

int run_gen(std::uint64_t seed, int n, const std::string& area_text, double radius, double v_max,
            double horizon, const std::string& start_text, const std::string& end_text,
            double altitude, double sigma2, double w, int s, const std::string& out) {
    const ParsedArea size = parse_area(area_text);
    ScenarioTemplate tpl;
    tpl.start = start_text.empty() ? Point2D{-0.5 * size.width, -0.5 * size.height}
                                   : parse_point(start_text, "--start");
    tpl.end = end_text.empty() ? Point2D{0.5 * size.width, 0.5 * size.height}
                               : parse_point(end_text, "--end");
    tpl.v_max = v_max;
    tpl.horizon = horizon;
    tpl.altitude = altitude;
    tpl.estimation = {sigma2, w, s};

    if (const auto env_seed = seed_override_from_env()) seed = *env_seed;

    const AreaOfInterest area = centered_area(tpl.start, tpl.end, size);
    const Scenario sc = generate_scenario(seed, n, area, radius, tpl);
    const std::string text = scenario_to_json(sc).dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
    }
    return 0;
}

int run_plan(const std::string& scenario_path, const std::string& algo_text,
             const std::string& area_text, const std::string& out) {
    const auto algorithm = algorithm_from_string(algo_text);
    if (!algorithm) throw std::runtime_error("unknown algorithm '" + algo_text + "'");

    const Scenario sc = load_scenario(scenario_path);
    const AreaOfInterest area = area_text.empty()
                                    ? bounding_area(sc)
                                    : centered_area(sc.start, sc.end, parse_area(area_text));

    Plan plan;
    Trajectory trajectory;
    switch (*algorithm) {
        case Algorithm::greedy: {
            plan = greedy_plan(sc).plan;
            trajectory = plan_to_trajectory(sc, plan);
            break;
        }
        case Algorithm::exact: {
            plan = exact_plan(sc);
            trajectory = plan_to_trajectory(sc, plan);
            break;
        }
        case Algorithm::strip:
        case Algorithm::zigzag: {
            const SweepKind kind =
                *algorithm == Algorithm::strip ? SweepKind::strip : SweepKind::zigzag;
            trajectory = tune_height(sc, area, kind).trajectory;
            plan = polyline_reduce(sc, trajectory);
            break;
        }
    }

    const VisitReport report = visit_report(sc, trajectory);
    std::optional<double> mse_value;
    if (report.count >= 1) mse_value = mse(sc.estimation, report.count);

    if (!out.empty()) {
        write_text_file(out, plan_to_json(plan, trajectory).dump(2) + "\n");
    }
    std::cout << format_summary(report.count, trajectory.path_length(), mse_value) << "\n";
    return 0;
}

int run_sweep(const std::string& scenario_path, const std::string& algos_text,
              const std::string& t_grid_text, const std::string& r_grid_text,
              const std::string& seeds_text, const std::string& area_text, int jobs,
              const std::string& out) {
    const Scenario base = load_scenario(scenario_path);

    SweepSpec spec;
    {
        std::istringstream in(algos_text);
        std::string token;
        while (std::getline(in, token, ',')) {
            const auto a = algorithm_from_string(token);
            if (!a) throw std::runtime_error("unknown algorithm '" + token + "'");
            spec.algorithms.push_back(*a);
        }
    }
    spec.T_values = parse_grid(t_grid_text, "--T-grid");
    spec.r_values = parse_grid(r_grid_text, "--r-grid");
    {
        std::istringstream in(seeds_text);
        std::string token;
        while (std::getline(in, token, ',')) spec.seeds.push_back(std::stoull(token));
    }
    if (const auto env_seed = seed_override_from_env()) spec.seeds = {*env_seed};

    spec.n = base.size();
    spec.area = area_text.empty() ? bounding_area(base)
                                  : centered_area(base.start, base.end, parse_area(area_text));
    spec.base = {base.start, base.end, base.v_max, base.horizon, base.altitude, base.estimation};

    const SweepResult result = run_sweep(spec, jobs);
    for (const SweepRow& row : result.rows) {
        if (!row.error.empty()) {
            std::cerr << "warning: " << to_string(row.algorithm) << " seed=" << row.seed
                      << " T=" << row.T << " r=" << row.r << " failed: " << row.error << "\n";
        }
    }
    const std::string csv = to_csv(result);
    if (out.empty()) {
        std::cout << csv;
    } else {
        write_text_file(out, csv);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"UAV data-collection trajectory planner"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random scenario file");
    std::uint64_t seed = 0;
    int n = 40;
    std::string area_text = "4000x4000";
    double radius = 200.0, v_max = 50.0, horizon = 400.0, altitude = 100.0;
    double sigma2 = 1.0, w_range = 1.0;
    int bits = 10;
    std::string start_text, end_text, gen_out;
    gen->add_option("--seed", seed, "Placement seed")->capture_default_str();
    gen->add_option("--n", n, "Number of sensor nodes")->check(CLI::NonNegativeNumber)->capture_default_str();
    gen->add_option("--area", area_text, "Area of interest WxH, centered between start and end")
        ->capture_default_str();
    gen->add_option("--r", radius, "Coverage radius for every node, m")->capture_default_str();
    gen->add_option("--vmax", v_max, "Maximum speed, m/s")->capture_default_str();
    gen->add_option("--T", horizon, "Flight budget, s")->capture_default_str();
    gen->add_option("--start", start_text, "Launch point x,y (default: area min corner)");
    gen->add_option("--end", end_text, "Landing point x,y (default: area max corner)");
    gen->add_option("--H", altitude, "Flight altitude metadata, m")->capture_default_str();
    gen->add_option("--sigma2", sigma2, "Observation noise variance")->capture_default_str();
    gen->add_option("--W", w_range, "Signal half-range")->capture_default_str();
    gen->add_option("--S", bits, "Quantizer bits per node")->check(CLI::PositiveNumber)->capture_default_str();
    gen->add_option("--out", gen_out, "Output path (default: stdout)");

    // plan
    auto* plan = app.add_subcommand("plan", "Plan a trajectory for one scenario");
    std::string scenario_path, algo_text = "greedy", plan_area_text, plan_out;
    plan->add_option("--scenario", scenario_path, "Scenario JSON path")->required();
    plan->add_option("--algo", algo_text, "greedy|strip|zigzag|exact")->capture_default_str();
    plan->add_option("--area", plan_area_text,
                     "Area WxH for the sweep benchmarks (default: node bounding box)");
    plan->add_option("--out", plan_out, "Plan/trajectory JSON output path");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run an experiment grid, emit CSV");
    std::string sweep_scenario, algos_text = "greedy,strip,zigzag", t_grid, r_grid;
    std::string seeds_text = "0", sweep_area_text, sweep_out;
    int jobs = 1;
    sweep->add_option("--scenario", sweep_scenario, "Scenario template JSON path")->required();
    sweep->add_option("--algos", algos_text, "Comma list of algorithms")->capture_default_str();
    sweep->add_option("--T-grid", t_grid, "Horizon grid a:b:step, s")->required();
    sweep->add_option("--r-grid", r_grid, "Radius grid a:b:step, m")->required();
    sweep->add_option("--seeds", seeds_text, "Comma list of placement seeds")->capture_default_str();
    sweep->add_option("--area", sweep_area_text,
                      "Area WxH for placement and benchmarks (default: node bounding box)");
    sweep->add_option("--jobs", jobs, "Worker threads for sweep cells")->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--out", sweep_out, "CSV output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            return run_gen(seed, n, area_text, radius, v_max, horizon, start_text, end_text,
                           altitude, sigma2, w_range, bits, gen_out);
        }
        if (plan->parsed()) {
            return run_plan(scenario_path, algo_text, plan_area_text, plan_out);
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_scenario, algos_text, t_grid, r_grid, seeds_text,
                             sweep_area_text, jobs, sweep_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
