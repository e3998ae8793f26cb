#pragma once

// Route planners. plan_route designs the shortest feasible tour through a
// given node subset (TSP ordering over centers, then convex waypoint
// placement). greedy_plan grows the visited set one node at a time, keeping
// the cheapest feasible insertion. exact_plan is the exponential reference
// that maximizes the visited count by exhausting subsets and orders.

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverplan/disk_chain.hpp"
#include "coverplan/model.hpp"
#include "coverplan/tsp.hpp"

namespace coverplan {

namespace detail {

inline std::vector<int> tour_order(std::span<const int> subset, const Scenario& sc) {
    TourInstance tour{sc.start, sc.end, {}};
    tour.sites.reserve(subset.size());
    std::vector<bool> seen(sc.nodes.size(), false);
    for (const int id : subset) {
        if (id < 1 || id > sc.size()) {
            throw std::invalid_argument("plan_route: unknown node id " + std::to_string(id));
        }
        if (seen[id - 1]) {
            throw std::invalid_argument("plan_route: duplicate node id " + std::to_string(id));
        }
        seen[id - 1] = true;
        tour.sites.push_back({id, sc.node(id).position});
    }
    return order_sites(tour);
}

inline Plan solve_for_order(std::vector<int> order, const Scenario& sc) {
    DiskChainInstance chain{sc.start, sc.end, {}};
    chain.disks.reserve(order.size());
    for (const int id : order) {
        chain.disks.push_back({sc.node(id).position, sc.node(id).radius});
    }
    const DiskChainSolution sol = solve_disk_chain(chain);

    Plan plan;
    plan.order = std::move(order);
    plan.waypoints = sol.waypoints;
    plan.total_length = sol.length;
    plan.converged = sol.converged;
    return plan;
}

// Lower bound on the disk-chain length for a given visiting order: the path
// through the centers can shrink by at most 2r per disk.
inline double chain_length_lower_bound(const Scenario& sc, std::span<const int> order) {
    double center_len = 0.0;
    double slack = 0.0;
    Point2D prev = sc.start;
    for (const int id : order) {
        const SensorNode& node = sc.node(id);
        center_len += distance(prev, node.position);
        slack += 2.0 * node.radius;
        prev = node.position;
    }
    center_len += distance(prev, sc.end);
    return center_len - slack;
}

}  // namespace detail

inline Plan plan_route(std::span<const int> subset, const Scenario& sc) {
    return detail::solve_for_order(detail::tour_order(subset, sc), sc);
}

enum class GreedyStop {
    all_visited,            // the working set reached every node
    no_feasible_insertion,  // every remaining insertion exceeds the budget
};

struct GreedyResult {
    Plan plan;
    GreedyStop stop = GreedyStop::no_feasible_insertion;
    int plan_route_calls = 0;  // candidate evaluations, at most N(N+1)/2
};

inline GreedyResult greedy_plan(const Scenario& sc) {
    validate_scenario(sc);
    const int n = sc.size();
    const double budget = sc.budget();

    // Upper bound on the distance to visit everything: fly over each node in
    // increasing id order.
    double d_max = 0.0;
    {
        Point2D prev = sc.start;
        for (const SensorNode& node : sc.nodes) {
            d_max += distance(prev, node.position);
            prev = node.position;
        }
        d_max += distance(prev, sc.end);
    }

    GreedyResult result;
    result.plan.total_length = distance(sc.start, sc.end);  // direct flight
    result.stop = (n == 0) ? GreedyStop::all_visited : GreedyStop::no_feasible_insertion;

    std::vector<int> chosen;  // kept sorted ascending
    double d_min = 0.0;
    while (static_cast<int>(chosen.size()) < n && d_min < d_max) {
        d_min = d_max;
        int best_id = 0;
        Plan best_plan;
        std::vector<int> candidate;
        candidate.reserve(chosen.size() + 1);
        for (int id = 1; id <= n; ++id) {
            if (std::binary_search(chosen.begin(), chosen.end(), id)) continue;
            candidate = chosen;
            candidate.insert(std::lower_bound(candidate.begin(), candidate.end(), id), id);
            ++result.plan_route_calls;
            std::vector<int> order = detail::tour_order(candidate, sc);
            // A candidate whose chain cannot beat the current best (or fit the
            // budget) is rejected without running the convex solve.
            const double lower = detail::chain_length_lower_bound(sc, order);
            if (lower > budget || lower >= d_min) continue;
            Plan p = detail::solve_for_order(std::move(order), sc);
            if (p.total_length <= budget && p.total_length < d_min) {
                d_min = p.total_length;
                best_id = id;
                best_plan = std::move(p);
            }
        }
        if (best_id == 0) {
            result.stop = GreedyStop::no_feasible_insertion;
            break;
        }
        chosen.insert(std::lower_bound(chosen.begin(), chosen.end(), best_id), best_id);
        result.plan = std::move(best_plan);
        if (static_cast<int>(chosen.size()) == n) result.stop = GreedyStop::all_visited;
    }
    return result;
}

// Exhaustive maximization of the visited count: subsets by decreasing size,
// all visiting orders per subset, waypoints from the convex solver. Returns
// the shortest plan at the largest feasible size. O(2^N), gated by max_n.
inline Plan exact_plan(const Scenario& sc, int max_n = 8) {
    validate_scenario(sc);
    const int n = sc.size();
    if (n > max_n) {
        throw std::invalid_argument("exact_plan: " + std::to_string(n) + " nodes exceed max_n=" +
                                    std::to_string(max_n));
    }
    const double budget = sc.budget();

    for (int size = n; size >= 1; --size) {
        bool found = false;
        Plan best;
        best.total_length = std::numeric_limits<double>::infinity();

        std::vector<int> subset(size);
        std::vector<bool> mask(n, false);
        std::fill(mask.begin(), mask.begin() + size, true);
        // Enumerate id subsets in lexicographic order via the mask.
        std::vector<std::vector<bool>> masks;
        do {
            masks.push_back(mask);
        } while (std::prev_permutation(mask.begin(), mask.end()));

        for (const auto& m : masks) {
            int idx = 0;
            for (int id = 1; id <= n; ++id) {
                if (m[id - 1]) subset[idx++] = id;
            }
            std::vector<int> order = subset;  // ascending; permutations cover all orders
            do {
                if (detail::chain_length_lower_bound(sc, order) > std::min(budget, best.total_length)) {
                    continue;
                }
                DiskChainInstance chain{sc.start, sc.end, {}};
                chain.disks.reserve(order.size());
                for (const int id : order) {
                    chain.disks.push_back({sc.node(id).position, sc.node(id).radius});
                }
                const DiskChainSolution sol = solve_disk_chain(chain);
                if (sol.length <= budget && sol.length < best.total_length) {
                    best.order = order;
                    best.waypoints = sol.waypoints;
                    best.total_length = sol.length;
                    best.converged = sol.converged;
                    found = true;
                }
            } while (std::next_permutation(order.begin(), order.end()));
        }
        if (found) return best;
    }

    Plan empty;
    empty.total_length = distance(sc.start, sc.end);
    return empty;
}

}  // namespace coverplan
