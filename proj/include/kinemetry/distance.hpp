#pragma once

#include "kinemetry/bodies.hpp"
#include "kinemetry/intrinsic.hpp"

namespace kinemetry {

// Result of a closest-point query between two convex bodies.
// gap > 0: bodies are disjoint and `direction` is the unit vector from the
// closest point of A toward the closest point of B.
// gap == 0: bodies touch or overlap; `direction` is unspecified.
struct GapResult {
    double gap = 0.0;
    Vec3 direction = Vec3::Zero();  // x,y used in 2D
};

// Distance between A and g(B).  Ball radii are peeled off and the core shapes
// are resolved by GJK on the support maps; ball/ball is closed form.
GapResult closest_gap(const ConvexBody& A, const ConvexBody& B, const Mat3& R, const Vec3& t);

GapResult closest_gap2(const ConvexBody& A, const ConvexBody& B, const Mat2& R, const Vec2& t);

// Euler characteristic of A  intersect  g(B) for convex bodies: 1 if they meet
// (touching counts, tolerance 1e-10), else 0.
int euler_intersects2(const ConvexBody& A, const ConvexBody& B, const RigidMotion2& g);
int euler_intersects3(const ConvexBody& A, const ConvexBody& B, const RigidMotion3& g);

}  // namespace kinemetry
