#pragma once

// Visit semantics: a node is visited when the trajectory's ground track comes
// within its coverage radius. Closed disks, so tangency counts; the geometric
// test is exact for polylines, unlike time sampling.

#include <limits>

#include "coverplan/model.hpp"

namespace coverplan {

// Minimum distance from a point to the trajectory polyline.
inline double min_distance_to_trajectory(Point2D p, const Trajectory& tr) {
    double best = std::numeric_limits<double>::infinity();
    const auto& v = tr.vertices;
    for (std::size_t i = 1; i < v.size(); ++i) {
        best = std::min(best, point_segment_distance(p, v[i - 1].position, v[i].position));
    }
    if (v.size() == 1) best = distance(p, v.front().position);
    return best;
}

inline VisitReport visit_report(const Scenario& sc, const Trajectory& tr) {
    validate_trajectory(sc, tr);
    VisitReport report;
    report.visited.assign(sc.nodes.size(), false);
    for (std::size_t i = 0; i < sc.nodes.size(); ++i) {
        const SensorNode& n = sc.nodes[i];
        if (min_distance_to_trajectory(n.position, tr) <= n.radius + kGeoTol) {
            report.visited[i] = true;
            ++report.count;
        }
    }
    return report;
}

}  // namespace coverplan
