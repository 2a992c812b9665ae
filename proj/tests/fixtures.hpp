#pragma once

#include "kinemetry/bodies.hpp"
#include "kinemetry/region.hpp"
#include "kinemetry/rng.hpp"

namespace fixtures {

using namespace kinemetry;

inline Polygon unit_square() {
    return make_polygon({Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)});
}

inline Polygon right_triangle() {
    return make_polygon({Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)});
}

inline Ball2 unit_disk() { return make_ball<2>(Vec2::Zero(), 1.0); }

inline Ball3 unit_ball3() { return make_ball<3>(Vec3::Zero(), 1.0); }

inline Polytope3 unit_cube() {
    return make_polytope3(
        {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}},
        {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}});
}

inline Polytope3 regular_tetrahedron() {
    return make_polytope3({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}},
                          {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

inline Polytope3 regular_octahedron() {
    return make_polytope3(
        {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
        {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4}, {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}});
}

// smooth, mildly asymmetric support body (the harmonics of the bridge tests)
inline SupportBody2 egg() { return make_support_body(1.0, {0.2, 0.0, 0.1}, {}); }

inline SupportBody2 pebble() { return make_support_body(1.0, {0.0, 0.15}, {0.05, 0.0, 0.04}); }

inline SphereRegion half_circle() { return SphereRegion::arcs({{0.0, kPi}}); }

inline SphereRegion quarter_arc() { return SphereRegion::arcs({{0.3, 0.3 + kPi / 2}}); }

// deterministic pseudorandom helpers for property tests
inline double uniform(SplitMix64& rng, double lo, double hi) { return rng.uniform(lo, hi); }

inline Polygon random_polygon(SplitMix64& rng, int sides) {
    // strictly convex: jittered angles on a circle, spacing kept positive
    std::vector<Vec2> pts;
    const double cx = rng.uniform(-0.5, 0.5), cy = rng.uniform(-0.5, 0.5);
    const double r = rng.uniform(0.5, 2.0);
    const double step = kTwoPi / sides;
    const double base = rng.uniform(0.0, kTwoPi);
    for (int i = 0; i < sides; ++i) {
        const double a = base + i * step + rng.uniform(-0.3, 0.3) * step;
        pts.emplace_back(cx + r * std::cos(a), cy + r * std::sin(a));
    }
    return make_polygon(std::move(pts));
}

}  // namespace fixtures
