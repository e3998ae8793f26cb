#pragma once

// Open-tour ordering with fixed endpoints: nearest neighbor from the start
// over the site centers, then first-improvement 2-opt on the open path with
// both endpoints pinned. Deterministic; ties break toward the lower id.

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverplan/geometry.hpp"

namespace coverplan {

struct TourSite {
    int id = 0;
    Point2D position;
};

struct TourInstance {
    Point2D start;
    Point2D end;
    std::vector<TourSite> sites;
};

inline double path_length(const TourInstance& inst, std::span<const int> order) {
    if (order.size() != inst.sites.size()) {
        throw std::invalid_argument("path_length: order must be a permutation of the site ids");
    }
    std::vector<bool> used(inst.sites.size(), false);
    double total = 0.0;
    Point2D prev = inst.start;
    for (const int id : order) {
        const TourSite* site = nullptr;
        for (std::size_t i = 0; i < inst.sites.size(); ++i) {
            if (inst.sites[i].id == id) {
                if (used[i]) throw std::invalid_argument("path_length: duplicate id " + std::to_string(id));
                used[i] = true;
                site = &inst.sites[i];
                break;
            }
        }
        if (!site) throw std::invalid_argument("path_length: unknown id " + std::to_string(id));
        total += distance(prev, site->position);
        prev = site->position;
    }
    return total + distance(prev, inst.end);
}

// Nearest-neighbor construction from the start; the end point only terminates
// the path. Ties break toward the lower id.
inline std::vector<int> nearest_neighbor_order(const TourInstance& inst) {
    const std::size_t n = inst.sites.size();
    std::vector<bool> used(n, false);
    std::vector<int> order;
    order.reserve(n);
    Point2D current = inst.start;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        double best_dist = std::numeric_limits<double>::infinity();
        int best_id = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            const double d = distance(current, inst.sites[i].position);
            if (d < best_dist || (d == best_dist && inst.sites[i].id < best_id)) {
                best = i;
                best_dist = d;
                best_id = inst.sites[i].id;
            }
        }
        used[best] = true;
        order.push_back(inst.sites[best].id);
        current = inst.sites[best].position;
    }
    return order;
}

// Local improvement moves: 2-opt segment reversals plus or-opt relocation of
// short runs (1..3 sites), both first-improvement with a rescan from scratch
// after every applied move. Terminates when no move gains more than the
// geometric tolerance.
inline std::vector<int> order_sites(const TourInstance& inst) {
    std::vector<int> order = nearest_neighbor_order(inst);
    const std::size_t n = order.size();
    if (n < 2) return order;

    std::vector<Point2D> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const TourSite& s : inst.sites) {
            if (s.id == order[i]) {
                pos[i] = s.position;
                break;
            }
        }
    }
    auto point_at = [&](std::size_t i) -> Point2D {
        // Index over the full open path: 0 is the start, n+1 is the end.
        if (i == 0) return inst.start;
        if (i == n + 1) return inst.end;
        return pos[i - 1];
    };

    auto try_reversals = [&]() -> bool {
        // Reversing order[i..j] swaps the edges (i-1, i) and (j, j+1).
        for (std::size_t i = 1; i <= n - 1; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                const double removed = distance(point_at(i - 1), point_at(i)) +
                                       distance(point_at(j), point_at(j + 1));
                const double added = distance(point_at(i - 1), point_at(j)) +
                                     distance(point_at(i), point_at(j + 1));
                if (removed - added > kGeoTol) {
                    std::reverse(order.begin() + (i - 1), order.begin() + j);
                    std::reverse(pos.begin() + (i - 1), pos.begin() + j);
                    return true;
                }
            }
        }
        return false;
    };
    auto try_relocations = [&]() -> bool {
        // Move the run at path positions [a, a+m-1] into the gap before
        // position b, keeping its orientation.
        for (std::size_t m = 1; m <= std::min<std::size_t>(3, n - 1); ++m) {
            for (std::size_t a = 1; a + m <= n + 1; ++a) {
                const double closed = distance(point_at(a - 1), point_at(a + m)) -
                                      distance(point_at(a - 1), point_at(a)) -
                                      distance(point_at(a + m - 1), point_at(a + m));
                for (std::size_t b = 1; b <= n + 1; ++b) {
                    if (b >= a && b <= a + m) continue;  // no-op placements
                    const double opened = distance(point_at(b - 1), point_at(a)) +
                                          distance(point_at(a + m - 1), point_at(b)) -
                                          distance(point_at(b - 1), point_at(b));
                    if (-(closed + opened) > kGeoTol) {
                        const auto first = order.begin() + (a - 1);
                        if (b < a) {
                            std::rotate(order.begin() + (b - 1), first, first + m);
                            std::rotate(pos.begin() + (b - 1), pos.begin() + (a - 1),
                                        pos.begin() + (a - 1) + m);
                        } else {
                            std::rotate(first, first + m, order.begin() + (b - 1));
                            std::rotate(pos.begin() + (a - 1), pos.begin() + (a - 1) + m,
                                        pos.begin() + (b - 1));
                        }
                        return true;
                    }
                }
            }
        }
        return false;
    };

    while (try_reversals() || try_relocations()) {
    }
    return order;
}

}  // namespace coverplan
