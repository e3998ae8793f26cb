#pragma once

// Planar geometry primitives shared by all planner modules.
// Lengths are meters, stored as double.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace coverplan {

// Tolerances for geometric and kinematic invariant checks. Far below the
// physical scales of the problem (km paths, m/s speeds), above float noise.
inline constexpr double kGeoTol = 1e-6;    // meters
inline constexpr double kSpeedTol = 1e-9;  // meters/second

// Segments shorter than this are collapsed when building trajectories so
// vertex times stay strictly increasing.
inline constexpr double kZeroSegment = 1e-9;  // meters

struct Point2D {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Point2D&, const Point2D&) = default;
};

constexpr Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point2D operator*(double s, Point2D p) { return {s * p.x, s * p.y}; }
constexpr double dot(Point2D a, Point2D b) { return a.x * b.x + a.y * b.y; }

inline double norm(Point2D p) { return std::sqrt(dot(p, p)); }

inline bool is_finite(Point2D p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline double distance(Point2D a, Point2D b) { return norm(b - a); }

inline Point2D lerp(Point2D a, Point2D b, double t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

// Unit vector from a to b; {0,0} when the points coincide.
inline Point2D direction(Point2D a, Point2D b) {
    const double len = distance(a, b);
    if (len <= 0.0) return {0.0, 0.0};
    return {(b.x - a.x) / len, (b.y - a.y) / len};
}

constexpr Point2D perpendicular(Point2D d) { return {-d.y, d.x}; }

// Parameter in [0,1] of the point on segment [a,b] closest to p.
inline double closest_segment_param(Point2D p, Point2D a, Point2D b) {
    const Point2D d = b - a;
    const double len2 = dot(d, d);
    if (len2 <= 0.0) return 0.0;
    return std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
}

inline double point_segment_distance(Point2D p, Point2D a, Point2D b) {
    return distance(p, lerp(a, b, closest_segment_param(p, a, b)));
}

// Earliest parameter t in [0,1] at which segment [a,b] is inside the closed
// disk (center, radius), or nullopt if the segment never reaches it.
inline std::optional<double> first_disk_entry(Point2D a, Point2D b, Point2D center,
                                              double radius) {
    if (distance(a, center) <= radius) return 0.0;
    const Point2D d = b - a;
    const Point2D f = a - center;
    const double qa = dot(d, d);
    if (qa <= 0.0) return std::nullopt;  // degenerate segment, start outside
    const double qb = 2.0 * dot(f, d);
    const double qc = dot(f, f) - radius * radius;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) return std::nullopt;
    // Start is outside (qc > 0), so both roots share a sign; the smaller one
    // is the entry.
    const double t = (-qb - std::sqrt(disc)) / (2.0 * qa);
    if (t >= 0.0 && t <= 1.0) return t;
    return std::nullopt;
}

inline double polyline_length(std::span<const Point2D> points) {
    double total = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        total += distance(points[i - 1], points[i]);
    }
    return total;
}

// Liang-Barsky clip of segment [a,b] against the axis-aligned rectangle
// [lo, hi]. Returns the parameter interval of the inside portion.
inline std::optional<std::pair<double, double>> clip_segment_to_rect(Point2D a, Point2D b,
                                                                     Point2D lo, Point2D hi) {
    double t0 = 0.0;
    double t1 = 1.0;
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {a.x - lo.x, hi.x - a.x, a.y - lo.y, hi.y - a.y};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return std::nullopt;  // parallel and outside
            continue;
        }
        const double r = q[i] / p[i];
        if (p[i] < 0.0) {
            t0 = std::max(t0, r);
        } else {
            t1 = std::min(t1, r);
        }
        if (t0 > t1) return std::nullopt;
    }
    return std::make_pair(t0, t1);
}

}  // namespace coverplan
