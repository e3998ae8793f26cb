#include <catch2/catch_amalgamated.hpp>

#include "coverplan/estimation.hpp"
#include "coverplan/model.hpp"
#include "support/oracles.hpp"

using namespace coverplan;

namespace {

Scenario tiny_scenario() {
    Scenario sc;
    sc.nodes = {{1, {1, 0}, 0.5}};
    sc.start = {0, 0};
    sc.end = {2, 0};
    sc.v_max = 1.0;
    sc.horizon = 10.0;
    return sc;
}

}  // namespace

TEST_CASE("scenario validation") {
    CHECK(scenario_violations(tiny_scenario()).empty());

    SECTION("unreachable endpoints") {
        Scenario sc = tiny_scenario();
        sc.horizon = 1.0;  // needs 2 m at 1 m/s
        CHECK_FALSE(scenario_violations(sc).empty());
        CHECK_THROWS_AS(validate_scenario(sc), std::invalid_argument);
    }
    SECTION("ids must be contiguous from 1") {
        Scenario sc = tiny_scenario();
        sc.nodes[0].id = 2;
        CHECK_FALSE(scenario_violations(sc).empty());
    }
    SECTION("negative radius") {
        Scenario sc = tiny_scenario();
        sc.nodes[0].radius = -1.0;
        CHECK_FALSE(scenario_violations(sc).empty());
    }
    SECTION("empty scenario is fine") {
        Scenario sc = tiny_scenario();
        sc.nodes.clear();
        CHECK(scenario_violations(sc).empty());
    }
}

TEST_CASE("trajectory validation") {
    const Scenario sc = tiny_scenario();
    Trajectory tr;
    tr.vertices = {{0.0, {0, 0}}, {10.0, {2, 0}}};
    CHECK(trajectory_violations(sc, tr).empty());

    SECTION("wrong endpoint") {
        tr.vertices.back().position = {3, 0};
        CHECK_FALSE(trajectory_violations(sc, tr).empty());
    }
    SECTION("speed violation") {
        tr.vertices.insert(tr.vertices.begin() + 1, {0.5, {1.9, 0}});
        CHECK_FALSE(trajectory_violations(sc, tr).empty());
    }
    SECTION("non-increasing times") {
        tr.vertices.insert(tr.vertices.begin() + 1, {0.0, {0.5, 0}});
        CHECK_FALSE(trajectory_violations(sc, tr).empty());
    }
}

TEST_CASE("plan validation") {
    const Scenario sc = tiny_scenario();
    Plan plan;
    plan.order = {1};
    plan.waypoints = {{1.0, 0.4}};
    plan.total_length = polyline_length(std::vector<Point2D>{{0, 0}, {1.0, 0.4}, {2, 0}});
    CHECK(plan_violations(sc, plan).empty());

    SECTION("waypoint outside its disk") {
        plan.waypoints = {{1.0, 0.6}};
        CHECK_FALSE(plan_violations(sc, plan).empty());
    }
    SECTION("length mismatch") {
        plan.total_length += 1.0;
        CHECK_FALSE(plan_violations(sc, plan).empty());
    }
    SECTION("duplicate id") {
        plan.order = {1, 1};
        plan.waypoints = {{1.0, 0.4}, {1.0, 0.4}};
        CHECK_FALSE(plan_violations(sc, plan).empty());
    }
}

TEST_CASE("mse examples") {
    SECTION("quantization noise vanishes at high resolution") {
        const EstimationParams p{1.0, 1.0, 40};
        CHECK(mse(p, 10) == Catch::Approx(0.1).margin(1e-12));
    }
    SECTION("sigma2=1 W=1 S=2 K=1") {
        const EstimationParams p{1.0, 1.0, 2};
        CHECK(mse(p, 1) == Catch::Approx(1.0 + (2.0 / 3.0) * (2.0 / 3.0) / 12.0).epsilon(1e-12));
        CHECK(mse(p, 1) == Catch::Approx(1.037037037037037).epsilon(1e-12));
    }
    SECTION("sigma2=0 W=3 S=1 K=3") {
        const EstimationParams p{0.0, 3.0, 1};
        CHECK(mse(p, 3) == Catch::Approx(1.0).epsilon(1e-12));
    }
    SECTION("no data collected is a domain error") {
        CHECK_THROWS_AS(mse({1.0, 1.0, 2}, 0), std::domain_error);
    }
}

TEST_CASE("mse matches the Monte-Carlo quantizer oracle") {
    // Spot check; the acceptance suite runs the full parameter cross.
    for (const int s : {1, 2, 4}) {
        const EstimationParams p{1.0, 1.0, s};
        const double mc = (p.sigma2 + oracles::mc_quantization_variance(p.W, s, 400000, 99 + s)) / 1.0;
        CHECK(mse(p, 1) == Catch::Approx(mc).epsilon(5e-3));
    }
}

TEST_CASE("mse monotonicity") {
    const EstimationParams p{0.5, 2.0, 3};
    SECTION("strictly decreasing in K, and mse*K constant") {
        double prev = std::numeric_limits<double>::infinity();
        const double product = mse(p, 1);
        for (int k = 1; k <= 64; k *= 2) {
            const double v = mse(p, k);
            CHECK(v < prev);
            CHECK(v * k == Catch::Approx(product).epsilon(1e-12));
            prev = v;
        }
    }
    SECTION("strictly decreasing in S") {
        double prev = std::numeric_limits<double>::infinity();
        for (int s = 1; s <= 16; ++s) {
            const double v = mse({0.0, 2.0, s}, 4);
            CHECK(v < prev);
            prev = v;
        }
    }
}
