#pragma once

// Seeded scenario generation. Placement uses SplitMix64 (Steele et al.), a
// 64-bit counter-based generator that is trivial to reproduce bit-exactly in
// any language: per node, one draw for x then one for y, each mapped to a
// double in [0, 1) from the top 53 bits.

#include <cstdint>
#include <stdexcept>

#include "coverplan/model.hpp"

namespace coverplan {

struct SplitMix64 {
    std::uint64_t state = 0;

    constexpr explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 mantissa bits.
    constexpr double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    constexpr double next_double(double lo, double hi) { return lo + next_double() * (hi - lo); }
};

// Everything of a scenario except the nodes themselves.
struct ScenarioTemplate {
    Point2D start;
    Point2D end;
    double v_max = 1.0;
    double horizon = 1.0;
    double altitude = 0.0;
    EstimationParams estimation;
};

inline Scenario generate_scenario(std::uint64_t seed, int n, const AreaOfInterest& area,
                                  double radius, const ScenarioTemplate& tpl) {
    if (n < 0) throw std::invalid_argument("generate_scenario: n must be >= 0");
    if (radius < 0.0) throw std::invalid_argument("generate_scenario: radius must be >= 0");
    Scenario sc;
    sc.start = tpl.start;
    sc.end = tpl.end;
    sc.v_max = tpl.v_max;
    sc.horizon = tpl.horizon;
    sc.altitude = tpl.altitude;
    sc.estimation = tpl.estimation;
    sc.nodes.reserve(n);
    SplitMix64 rng(seed);
    for (int i = 1; i <= n; ++i) {
        const double x = rng.next_double(area.min_corner.x, area.max_corner.x);
        const double y = rng.next_double(area.min_corner.y, area.max_corner.y);
        sc.nodes.push_back({i, {x, y}, radius});
    }
    validate_scenario(sc);
    return sc;
}

}  // namespace coverplan
