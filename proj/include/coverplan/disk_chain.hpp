#pragma once

// Shortest path from start to end through an ordered chain of disks, one
// waypoint per disk. The objective is convex; block coordinate descent with
// an exact single-disk subproblem drives it down, and a merged-pair step
// resolves the nonsmooth case of neighboring waypoints collapsing onto one
// point inside overlapping disks.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "coverplan/geometry.hpp"

namespace coverplan {

struct Disk {
    Point2D center;
    double radius = 0.0;
};

struct DiskChainInstance {
    Point2D start;
    Point2D end;
    std::vector<Disk> disks;  // in visiting order
};

struct DiskChainSolution {
    std::vector<Point2D> waypoints;  // one per disk, inside it
    double length = 0.0;             // including the start and end legs
    int iterations = 0;              // double sweeps performed
    bool converged = true;
};

namespace detail {

inline Point2D closest_disk_point(Point2D p, Point2D center, double radius) {
    const double d = distance(p, center);
    if (d <= radius) return p;
    return center + radius * direction(center, p);
}

// Golden-section minimization of f over [lo, hi] to the given width.
template <typename F>
double golden_section_min(F&& f, double lo, double hi, double width) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > width) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

// Coarse scan plus golden-section refinement of f over [lo, hi].
template <typename F>
double scan_and_refine(F&& f, double lo, double hi, double width) {
    if (!(hi > lo)) return lo;
    constexpr int kScan = 16;
    int best = 0;
    double best_val = f(lo);
    for (int i = 1; i <= kScan; ++i) {
        const double val = f(lo + (hi - lo) * i / kScan);
        if (val < best_val) {
            best_val = val;
            best = i;
        }
    }
    const double a = lo + (hi - lo) * std::max(0, best - 1) / kScan;
    const double b = lo + (hi - lo) * std::min(kScan, best + 1) / kScan;
    return golden_section_min(f, a, b, width);
}

// Parameter interval of segment [a,b] inside a closed disk, if any.
inline std::optional<std::pair<double, double>> segment_disk_interval(Point2D a, Point2D b,
                                                                      Point2D center,
                                                                      double radius) {
    const Point2D dir = b - a;
    const double qa = dot(dir, dir);
    const Point2D f = a - center;
    const double qc = dot(f, f) - radius * radius;
    if (qa <= 0.0) {
        if (qc <= 0.0) return std::make_pair(0.0, 1.0);
        return std::nullopt;
    }
    const double qb = 2.0 * dot(f, dir);
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) return std::nullopt;
    const double root = std::sqrt(disc);
    const double t0 = std::max((-qb - root) / (2.0 * qa), 0.0);
    const double t1 = std::min((-qb + root) / (2.0 * qa), 1.0);
    if (t0 > t1) return std::nullopt;
    return std::make_pair(t0, t1);
}

}  // namespace detail

// Exact minimizer of |q - a| + |q - b| over a closed disk.
//
// If the segment [a,b] meets the disk, any point of the overlap is optimal;
// the one closest to the disk center is returned for determinism and slack.
// Otherwise the minimizer is on the circle and is found by a coarse angular
// scan plus golden-section refinement to 1e-10 rad.
inline Point2D single_disk_step(Point2D a, Point2D b, Point2D center, double radius) {
    if (radius <= 0.0) return center;
    if (a == b) return detail::closest_disk_point(a, center, radius);

    const double t = closest_segment_param(center, a, b);
    const Point2D on_segment = lerp(a, b, t);
    if (distance(on_segment, center) <= radius) return on_segment;

    auto objective = [&](double phi) {
        const Point2D q{center.x + radius * std::cos(phi), center.y + radius * std::sin(phi)};
        return distance(q, a) + distance(q, b);
    };
    // Both endpoints are strictly outside here, and every local minimum of the
    // boundary objective lies on the short arc between the directions toward
    // a and b (outside it, both distance terms shrink when moving toward the
    // arc). Scan that arc coarsely, then refine around the best sample.
    const double alpha_a = std::atan2(a.y - center.y, a.x - center.x);
    const double alpha_b = std::atan2(b.y - center.y, b.x - center.x);
    double arc_lo = alpha_a;
    double span = std::remainder(alpha_b - alpha_a, 2.0 * std::numbers::pi);
    if (span < 0.0) {
        arc_lo = alpha_b;
        span = -span;
    }
    const double phi = detail::scan_and_refine(objective, arc_lo, arc_lo + span, 1e-10);
    return {center.x + radius * std::cos(phi), center.y + radius * std::sin(phi)};
}

// True when the straight start-end segment passes through every disk in
// order, i.e. the chain optimum equals the segment length.
inline bool segment_meets_disks_in_order(const DiskChainInstance& inst) {
    const Point2D dir = inst.end - inst.start;
    const double len2 = dot(dir, dir);
    double t_min = 0.0;
    for (const Disk& d : inst.disks) {
        const double reach = d.radius + kGeoTol;
        if (len2 <= 0.0) {
            if (distance(inst.start, d.center) > reach) return false;
            continue;
        }
        // Parameter interval of the segment inside the (slightly fattened) disk.
        const Point2D f = inst.start - d.center;
        const double qb = 2.0 * dot(f, dir);
        const double qc = dot(f, f) - reach * reach;
        const double disc = qb * qb - 4.0 * len2 * qc;
        if (disc < 0.0) return false;
        const double root = std::sqrt(disc);
        const double enter = std::max(0.0, (-qb - root) / (2.0 * len2));
        const double leave = std::min(1.0, (-qb + root) / (2.0 * len2));
        if (enter > leave) return false;
        if (leave < t_min) return false;  // disk lies behind the current position
        t_min = std::max(t_min, enter);
    }
    return true;
}

inline DiskChainSolution solve_disk_chain(const DiskChainInstance& inst, double tol = 1e-6,
                                          int max_iters = 10000) {
    if (!(tol > 0.0)) throw std::invalid_argument("solve_disk_chain: tol must be positive");
    if (max_iters < 1) throw std::invalid_argument("solve_disk_chain: max_iters must be >= 1");

    const std::size_t k = inst.disks.size();
    DiskChainSolution sol;
    if (k == 0) {
        sol.length = distance(inst.start, inst.end);
        return sol;
    }

    std::vector<Point2D> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = inst.disks[i].center;

    auto objective = [&](const std::vector<Point2D>& q) {
        double total = distance(inst.start, q.front());
        for (std::size_t i = 1; i < q.size(); ++i) total += distance(q[i - 1], q[i]);
        return total + distance(q.back(), inst.end);
    };
    auto neighbor = [&](const std::vector<Point2D>& q, std::size_t i, int off) -> Point2D {
        if (off < 0) return i == 0 ? inst.start : q[i - 1];
        return i + 1 == q.size() ? inst.end : q[i + 1];
    };
    auto sweep = [&](std::vector<Point2D>& q) {
        for (std::size_t i = 0; i < k; ++i) {
            q[i] = single_disk_step(neighbor(q, i, -1), neighbor(q, i, +1), inst.disks[i].center,
                                    inst.disks[i].radius);
        }
        for (std::size_t i = k; i-- > 0;) {
            q[i] = single_disk_step(neighbor(q, i, -1), neighbor(q, i, +1), inst.disks[i].center,
                                    inst.disks[i].radius);
        }
    };
    // Nonsmooth-coupling guard: two consecutive waypoints collapsed onto one
    // point can pin plain coordinate descent, because the coupling term pulls
    // each one back onto the other. Treat the pair as a single variable and
    // minimize |q-a| + |q-b| exactly over the intersection of the two disks
    // (interior via the segment, boundary via the two lens arcs).
    auto merged_pair_step = [&](std::vector<Point2D>& q, std::size_t i) -> bool {
        const Disk& da = inst.disks[i];
        const Disk& db = inst.disks[i + 1];
        if (distance(da.center, db.center) > da.radius + db.radius) return false;
        const Point2D a = neighbor(q, i, -1);
        const Point2D b = neighbor(q, i + 1, +1);
        const double current = distance(a, q[i]) + distance(q[i + 1], b);
        Point2D best_pt = q[i];
        double best_val = current;

        if (const auto ia = detail::segment_disk_interval(a, b, da.center, da.radius)) {
            if (const auto ib = detail::segment_disk_interval(a, b, db.center, db.radius)) {
                const double lo = std::max(ia->first, ib->first);
                const double hi = std::min(ia->second, ib->second);
                if (lo <= hi) {
                    const Point2D mid = 0.5 * (da.center + db.center);
                    const double t = std::clamp(closest_segment_param(mid, a, b), lo, hi);
                    const Point2D p = lerp(a, b, t);
                    const double val = distance(a, p) + distance(p, b);
                    if (val < best_val) {
                        best_val = val;
                        best_pt = p;
                    }
                }
            }
        }
        for (int side = 0; side < 2; ++side) {
            const Disk& on = side == 0 ? da : db;
            const Disk& other = side == 0 ? db : da;
            if (on.radius <= 0.0) continue;
            const double dist_c = distance(on.center, other.center);
            double lo = 0.0;
            double hi = 2.0 * std::numbers::pi;
            if (other.radius < dist_c + on.radius) {
                // partial arc of `on` inside `other`
                if (dist_c <= 0.0) continue;
                const double cos_half =
                    std::clamp((dist_c * dist_c + on.radius * on.radius - other.radius * other.radius) /
                                   (2.0 * dist_c * on.radius),
                               -1.0, 1.0);
                const double half = std::acos(cos_half);
                const double mid_phi =
                    std::atan2(other.center.y - on.center.y, other.center.x - on.center.x);
                lo = mid_phi - half;
                hi = mid_phi + half;
            }
            auto obj = [&](double phi) {
                const Point2D p{on.center.x + on.radius * std::cos(phi),
                                on.center.y + on.radius * std::sin(phi)};
                return distance(a, p) + distance(p, b);
            };
            const double phi = detail::scan_and_refine(obj, lo, hi, 1e-10);
            Point2D p{on.center.x + on.radius * std::cos(phi), on.center.y + on.radius * std::sin(phi)};
            p = detail::closest_disk_point(p, other.center, other.radius);
            p = detail::closest_disk_point(p, on.center, on.radius);
            const double val = distance(a, p) + distance(p, b);
            if (val < best_val) {
                best_val = val;
                best_pt = p;
            }
        }
        if (best_val < current - tol) {
            q[i] = best_pt;
            q[i + 1] = best_pt;
            return true;
        }
        return false;
    };

    std::vector<Point2D> best = w;
    double best_len = objective(w);
    double prev = best_len;
    int iter = 0;
    int escapes = 0;
    constexpr int kMaxEscapes = 50;
    bool converged = false;
    while (iter < max_iters) {
        ++iter;
        sweep(w);
        double cur = objective(w);
        if (cur < best_len) {
            best = w;
            best_len = cur;
        }
        if (prev - cur < tol) {
            bool resumed = false;
            if (escapes < kMaxEscapes) {
                // The merged comparison ignores the pair's current coupling
                // cost, so accepting only a > tol gain is sound at any
                // separation, not just for exactly coincident pairs.
                bool moved = false;
                for (std::size_t i = 0; i + 1 < k; ++i) {
                    if (merged_pair_step(w, i)) moved = true;
                }
                if (moved) {
                    ++escapes;
                    sweep(w);  // one re-sweep after the merged moves
                    cur = objective(w);
                    if (cur < best_len) {
                        best = w;
                        best_len = cur;
                    }
                    if (prev - cur >= tol) resumed = true;
                }
            }
            if (!resumed) {
                converged = true;
                break;
            }
        }
        prev = cur;
    }

    sol.waypoints = std::move(best);
    sol.length = best_len;
    sol.iterations = iter;
    sol.converged = converged;
    return sol;
}

}  // namespace coverplan
