#pragma once

// Sweep-style benchmark planners over an area of interest.
//
// Both work in the rotated frame whose u-axis runs from q0 to qF. The strip
// sweep is a boustrophedon: transverse sweeps of extent +-height/2 about the
// q0-qF line, one per strip of width 2*min_n r_n, clipped to the area and
// joined by straight connectors. The zig-zag sweep replaces the axis-aligned
// sweeps with a sawtooth whose apexes advance min_n r_n along the u-axis, so
// parallel legs are spaced 2*min_n r_n. A bisection on the sweep height finds
// the tallest pattern that fits the flight budget.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "coverplan/model.hpp"
#include "coverplan/polyline.hpp"

namespace coverplan {

enum class SweepKind { strip, zigzag };

inline void validate_area(const AreaOfInterest& area) {
    if (!(area.width() > 0.0) || !(area.height() > 0.0)) {
        throw std::invalid_argument("area of interest must have positive extent");
    }
}

namespace detail {

struct SweepFrame {
    Point2D origin;  // q0
    Point2D u;       // unit vector toward qF
    Point2D v;       // left normal
    double length;   // |qF - q0|

    [[nodiscard]] Point2D to_world(double s, double d) const {
        return {origin.x + s * u.x + d * v.x, origin.y + s * u.y + d * v.y};
    }
};

inline SweepFrame sweep_frame(const Scenario& sc) {
    SweepFrame f;
    f.origin = sc.start;
    f.length = distance(sc.start, sc.end);
    f.u = direction(sc.start, sc.end);
    f.v = perpendicular(f.u);
    return f;
}

inline double min_coverage_radius(const Scenario& sc) {
    double r = std::numeric_limits<double>::infinity();
    for (const SensorNode& n : sc.nodes) r = std::min(r, n.radius);
    return r;
}

// Transverse interval [d_lo, d_hi] of the area at longitudinal position s,
// or the degenerate {0, 0} when the transverse line misses the area.
inline std::pair<double, double> transverse_extent(const SweepFrame& f, const AreaOfInterest& area,
                                                   double s, double reach) {
    const Point2D a = f.to_world(s, -reach);
    const Point2D b = f.to_world(s, +reach);
    if (auto t = clip_segment_to_rect(a, b, area.min_corner, area.max_corner)) {
        return {-reach + t->first * 2.0 * reach, -reach + t->second * 2.0 * reach};
    }
    return {0.0, 0.0};
}

// Strip and zig-zag waypoint construction share the degenerate cases: no
// nodes, coincident endpoints, or zero coverage radius all collapse to the
// straight segment.
inline bool sweep_degenerate(const SweepFrame& f, const Scenario& sc, double height) {
    return sc.nodes.empty() || f.length <= kZeroSegment || height <= 0.0 ||
           min_coverage_radius(sc) <= kGeoTol;
}

}  // namespace detail

inline std::vector<Point2D> strip_path(const Scenario& sc, const AreaOfInterest& area,
                                       double height) {
    validate_area(area);
    if (height < 0.0) throw std::invalid_argument("strip_path: height must be >= 0");
    const auto frame = detail::sweep_frame(sc);
    if (detail::sweep_degenerate(frame, sc, height)) return {sc.start, sc.end};

    const double r = detail::min_coverage_radius(sc);
    const double width = 2.0 * r;
    const int strips = static_cast<int>(std::ceil(frame.length / width));
    const double reach = area.diagonal() + height + frame.length;

    std::vector<Point2D> pts;
    pts.reserve(2 * strips + 2);
    pts.push_back(sc.start);
    for (int i = 0; i < strips; ++i) {
        const double lo = width * i;
        const double hi = std::min(width * (i + 1), frame.length);
        const double s = 0.5 * (lo + hi);
        const auto [d_lo, d_hi] = detail::transverse_extent(frame, area, s, reach);
        const double bottom = std::clamp(-0.5 * height, d_lo, d_hi);
        const double top = std::clamp(+0.5 * height, d_lo, d_hi);
        const bool upward = (i % 2 == 0);
        pts.push_back(frame.to_world(s, upward ? bottom : top));
        pts.push_back(frame.to_world(s, upward ? top : bottom));
    }
    pts.push_back(sc.end);
    return pts;
}

inline std::vector<Point2D> zigzag_path(const Scenario& sc, const AreaOfInterest& area,
                                        double height) {
    validate_area(area);
    if (height < 0.0) throw std::invalid_argument("zigzag_path: height must be >= 0");
    const auto frame = detail::sweep_frame(sc);
    if (detail::sweep_degenerate(frame, sc, height)) return {sc.start, sc.end};

    const double r = detail::min_coverage_radius(sc);
    const int legs = static_cast<int>(std::ceil(frame.length / r));
    const double reach = area.diagonal() + height + frame.length;

    std::vector<Point2D> pts;
    pts.reserve(legs + 2);
    pts.push_back(sc.start);
    for (int k = 1; k < legs; ++k) {
        const double s = r * k;
        const auto [d_lo, d_hi] = detail::transverse_extent(frame, area, s, reach);
        const double apex = (k % 2 == 1) ? +0.5 * height : -0.5 * height;
        pts.push_back(frame.to_world(s, std::clamp(apex, d_lo, d_hi)));
    }
    pts.push_back(sc.end);
    return pts;
}

inline Trajectory strip_trajectory(const Scenario& sc, const AreaOfInterest& area, double height) {
    return polyline_to_trajectory(sc, strip_path(sc, area, height));
}

inline Trajectory zigzag_trajectory(const Scenario& sc, const AreaOfInterest& area, double height) {
    return polyline_to_trajectory(sc, zigzag_path(sc, area, height));
}

struct TunedSweep {
    double height = 0.0;
    Trajectory trajectory;
};

// Largest sweep height whose path still fits the flight budget, found by
// bisection over [0, area diagonal] to 1 m. Path length grows monotonically
// with the height, and height 0 is always feasible.
inline TunedSweep tune_height(const Scenario& sc, const AreaOfInterest& area, SweepKind kind) {
    validate_scenario(sc);
    const double budget = sc.budget();
    auto path = [&](double h) {
        return kind == SweepKind::strip ? strip_path(sc, area, h) : zigzag_path(sc, area, h);
    };
    auto feasible = [&](double h) { return polyline_length(path(h)) <= budget + kGeoTol; };

    double lo = 0.0;
    double hi = area.diagonal();
    if (feasible(hi)) {
        lo = hi;
    } else {
        while (hi - lo > 1.0) {
            const double mid = 0.5 * (lo + hi);
            (feasible(mid) ? lo : hi) = mid;
        }
    }
    return {lo, polyline_to_trajectory(sc, path(lo))};
}

}  // namespace coverplan
