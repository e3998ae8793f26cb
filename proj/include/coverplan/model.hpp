#pragma once

// Domain types: sensor field scenarios, plans, trajectories, visit reports.
// Values are immutable after construction and safe to share across threads.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverplan/geometry.hpp"

namespace coverplan {

// Fusion error model parameters. Every node observes the same unknown with
// noise variance sigma2 and quantizes to S bits over [-W, W].
struct EstimationParams {
    double sigma2 = 1.0;  // observation noise variance
    double W = 1.0;       // signal half-range
    int S = 10;           // quantizer bits per node
};

struct SensorNode {
    int id = 0;  // 1-based, contiguous across a scenario
    Point2D position;
    double radius = 0.0;  // communication range, meters
};

// Axis-aligned rectangle, used for node placement and the sweep benchmarks.
struct AreaOfInterest {
    Point2D min_corner;
    Point2D max_corner;

    [[nodiscard]] double width() const { return max_corner.x - min_corner.x; }
    [[nodiscard]] double height() const { return max_corner.y - min_corner.y; }
    [[nodiscard]] double diagonal() const { return distance(min_corner, max_corner); }
    [[nodiscard]] bool contains(Point2D p) const {
        return p.x >= min_corner.x && p.x <= max_corner.x && p.y >= min_corner.y &&
               p.y <= max_corner.y;
    }
};

struct Scenario {
    std::vector<SensorNode> nodes;  // sorted by id, ids are 1..N
    Point2D start;                  // q0
    Point2D end;                    // qF
    double v_max = 1.0;             // maximum speed, m/s
    double horizon = 1.0;           // flight budget, s
    double altitude = 0.0;          // metadata only; plays no role in the planar math
    EstimationParams estimation;

    [[nodiscard]] int size() const { return static_cast<int>(nodes.size()); }
    [[nodiscard]] double budget() const { return v_max * horizon; }
    [[nodiscard]] const SensorNode& node(int id) const { return nodes.at(id - 1); }
};

// Selected nodes in visiting order with one collection waypoint each.
struct Plan {
    std::vector<int> order;          // node ids, distinct
    std::vector<Point2D> waypoints;  // same length as order
    double total_length = 0.0;       // includes the start and end legs
    bool converged = true;           // waypoint solver status
};

struct TrajectoryVertex {
    double t = 0.0;  // seconds from launch
    Point2D position;
};

// Time-parameterized polyline; motion between vertices is straight-line
// constant-speed.
struct Trajectory {
    std::vector<TrajectoryVertex> vertices;

    [[nodiscard]] double path_length() const {
        double total = 0.0;
        for (std::size_t i = 1; i < vertices.size(); ++i) {
            total += distance(vertices[i - 1].position, vertices[i].position);
        }
        return total;
    }
};

struct VisitReport {
    std::vector<bool> visited;  // indexed by node id - 1
    int count = 0;

    [[nodiscard]] bool is_visited(int id) const { return visited.at(id - 1); }
};

// ---------------------------------------------------------------------------
// Validation. Each collector returns human-readable violations; the validate_*
// wrappers throw std::invalid_argument with the first violation.

inline std::vector<std::string> scenario_violations(const Scenario& sc) {
    std::vector<std::string> out;
    if (!is_finite(sc.start) || !is_finite(sc.end)) out.push_back("non-finite endpoint");
    if (!(sc.v_max > 0.0)) out.push_back("v_max must be positive");
    if (!(sc.horizon > 0.0)) out.push_back("horizon must be positive");
    if (distance(sc.start, sc.end) > sc.budget() + kGeoTol) {
        out.push_back("endpoints are not reachable within the flight budget");
    }
    for (std::size_t i = 0; i < sc.nodes.size(); ++i) {
        const SensorNode& n = sc.nodes[i];
        if (n.id != static_cast<int>(i) + 1) {
            out.push_back("node ids must be contiguous from 1 and sorted");
            break;
        }
        if (!is_finite(n.position)) out.push_back("node " + std::to_string(n.id) + ": non-finite position");
        if (n.radius < 0.0) out.push_back("node " + std::to_string(n.id) + ": negative radius");
    }
    const EstimationParams& e = sc.estimation;
    if (e.sigma2 < 0.0) out.push_back("estimation.sigma2 must be >= 0");
    if (!(e.W > 0.0)) out.push_back("estimation.W must be positive");
    if (e.S < 1) out.push_back("estimation.S must be >= 1");
    return out;
}

inline std::vector<std::string> trajectory_violations(const Scenario& sc, const Trajectory& tr) {
    std::vector<std::string> out;
    const auto& v = tr.vertices;
    if (v.size() < 2) {
        out.push_back("trajectory needs at least two vertices");
        return out;
    }
    if (v.front().t != 0.0) out.push_back("first vertex time must be 0");
    if (std::abs(v.back().t - sc.horizon) > 1e-9 * std::max(1.0, sc.horizon)) {
        out.push_back("last vertex time must equal the horizon");
    }
    if (distance(v.front().position, sc.start) > kGeoTol) out.push_back("trajectory does not start at q0");
    if (distance(v.back().position, sc.end) > kGeoTol) out.push_back("trajectory does not end at qF");
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double dt = v[i].t - v[i - 1].t;
        if (dt <= 0.0) {
            out.push_back("vertex times must be strictly increasing");
            break;
        }
        const double speed = distance(v[i - 1].position, v[i].position) / dt;
        if (speed > sc.v_max + kSpeedTol) {
            out.push_back("segment " + std::to_string(i) + " exceeds v_max");
            break;
        }
    }
    return out;
}

inline std::vector<std::string> plan_violations(const Scenario& sc, const Plan& plan) {
    std::vector<std::string> out;
    if (plan.order.size() != plan.waypoints.size()) {
        out.push_back("order and waypoints must have the same length");
        return out;
    }
    std::vector<bool> seen(sc.nodes.size(), false);
    for (std::size_t k = 0; k < plan.order.size(); ++k) {
        const int id = plan.order[k];
        if (id < 1 || id > sc.size()) {
            out.push_back("unknown node id " + std::to_string(id));
            return out;
        }
        if (seen[id - 1]) {
            out.push_back("duplicate node id " + std::to_string(id));
            return out;
        }
        seen[id - 1] = true;
        const SensorNode& n = sc.node(id);
        if (distance(plan.waypoints[k], n.position) > n.radius + kGeoTol) {
            out.push_back("waypoint " + std::to_string(k) + " is outside the coverage disk of node " +
                          std::to_string(id));
        }
    }
    std::vector<Point2D> pts;
    pts.reserve(plan.order.size() + 2);
    pts.push_back(sc.start);
    pts.insert(pts.end(), plan.waypoints.begin(), plan.waypoints.end());
    pts.push_back(sc.end);
    if (std::abs(polyline_length(pts) - plan.total_length) > kGeoTol) {
        out.push_back("total_length does not match the waypoint polyline");
    }
    return out;
}

inline void validate_scenario(const Scenario& sc) {
    const auto v = scenario_violations(sc);
    if (!v.empty()) throw std::invalid_argument("invalid scenario: " + v.front());
}

inline void validate_trajectory(const Scenario& sc, const Trajectory& tr) {
    const auto v = trajectory_violations(sc, tr);
    if (!v.empty()) throw std::invalid_argument("invalid trajectory: " + v.front());
}

inline void validate_plan(const Scenario& sc, const Plan& plan) {
    const auto v = plan_violations(sc, plan);
    if (!v.empty()) throw std::invalid_argument("invalid plan: " + v.front());
}

}  // namespace coverplan
