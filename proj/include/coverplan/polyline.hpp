#pragma once

// Plan <-> trajectory conversions.
//
// plan_to_trajectory flies the waypoint polyline at constant speed over the
// whole horizon. polyline_reduce is the reverse direction: it extracts the
// first-entry waypoint of every visited disk, ordered by entry time, which
// never lengthens the path and keeps every visited node visited.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverplan/model.hpp"
#include "coverplan/visit.hpp"

namespace coverplan {

// Constant-speed time parameterization of a polyline over the scenario
// horizon. Consecutive near-duplicate points are merged so vertex times stay
// strictly increasing. Throws when the polyline exceeds the flight budget.
inline Trajectory polyline_to_trajectory(const Scenario& sc, std::span<const Point2D> points) {
    if (points.empty()) throw std::invalid_argument("polyline_to_trajectory: empty polyline");

    std::vector<Point2D> pts;
    pts.reserve(points.size());
    pts.push_back(points.front());
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (distance(pts.back(), points[i]) > kZeroSegment) pts.push_back(points[i]);
    }
    // Keep the exact end point even if the tail collapsed onto it.
    if (distance(pts.back(), points.back()) <= kZeroSegment) pts.back() = points.back();

    const double total = polyline_length(pts);
    const double budget = sc.budget();
    if (total > budget + kGeoTol) {
        throw std::invalid_argument("polyline exceeds the flight budget by " +
                                    std::to_string(total - budget) + " m");
    }

    Trajectory tr;
    if (pts.size() == 1 || total <= 0.0) {
        // Hover in place for the whole horizon.
        tr.vertices = {{0.0, points.front()}, {sc.horizon, points.back()}};
        return tr;
    }
    tr.vertices.reserve(pts.size());
    tr.vertices.push_back({0.0, pts.front()});
    double cum = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        cum += distance(pts[i - 1], pts[i]);
        const double t = (i + 1 == pts.size()) ? sc.horizon : sc.horizon * (cum / total);
        tr.vertices.push_back({t, pts[i]});
    }
    return tr;
}

inline Trajectory plan_to_trajectory(const Scenario& sc, const Plan& plan) {
    validate_plan(sc, plan);
    std::vector<Point2D> pts;
    pts.reserve(plan.waypoints.size() + 2);
    pts.push_back(sc.start);
    pts.insert(pts.end(), plan.waypoints.begin(), plan.waypoints.end());
    pts.push_back(sc.end);
    return polyline_to_trajectory(sc, pts);
}

inline Plan polyline_reduce(const Scenario& sc, const Trajectory& tr) {
    validate_trajectory(sc, tr);
    const auto& v = tr.vertices;

    struct Entry {
        double t;
        int id;
        Point2D point;
    };
    std::vector<Entry> entries;
    for (const SensorNode& n : sc.nodes) {
        if (min_distance_to_trajectory(n.position, tr) > n.radius + kGeoTol) continue;

        // Entry points are solved against half the tolerance so they stay
        // strictly inside the band the plan validator accepts.
        const double reach = n.radius + 0.5 * kGeoTol;
        std::optional<Entry> entry;
        for (std::size_t i = 1; i < v.size() && !entry; ++i) {
            if (auto s = first_disk_entry(v[i - 1].position, v[i].position, n.position, reach)) {
                entry = Entry{v[i - 1].t + *s * (v[i].t - v[i - 1].t), n.id,
                              lerp(v[i - 1].position, v[i].position, *s)};
            }
        }
        if (!entry) {
            // Tangency right at the tolerance boundary can slip past the
            // quadratic; fall back to the closest approach.
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 1; i < v.size(); ++i) {
                const double s = closest_segment_param(n.position, v[i - 1].position, v[i].position);
                const Point2D p = lerp(v[i - 1].position, v[i].position, s);
                const double d = distance(n.position, p);
                if (d < best) {
                    best = d;
                    entry = Entry{v[i - 1].t + s * (v[i].t - v[i - 1].t), n.id, p};
                }
            }
        }
        entries.push_back(*entry);
    }

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.t != b.t ? a.t < b.t : a.id < b.id;
    });

    Plan plan;
    plan.order.reserve(entries.size());
    plan.waypoints.reserve(entries.size());
    std::vector<Point2D> pts;
    pts.reserve(entries.size() + 2);
    pts.push_back(sc.start);
    for (const Entry& e : entries) {
        plan.order.push_back(e.id);
        plan.waypoints.push_back(e.point);
        pts.push_back(e.point);
    }
    pts.push_back(sc.end);
    plan.total_length = polyline_length(pts);
    return plan;
}

}  // namespace coverplan
