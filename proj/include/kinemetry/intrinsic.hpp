#pragma once

#include <array>

#include "kinemetry/bodies.hpp"
#include "kinemetry/region.hpp"

namespace kinemetry {

// mu_0..mu_n of an n-dimensional body; mu[i] carries length^i units.
struct IntrinsicVolumes {
    int dim = 0;
    std::array<double, 4> mu{};

    double operator[](int i) const { return mu[static_cast<std::size_t>(i)]; }
};

IntrinsicVolumes intrinsic_volumes(const ConvexBody& body);

double polygon_area(const Polygon& p);
double polygon_perimeter(const Polygon& p);
double polytope_volume(const Polytope3& p);
double polytope_surface(const Polytope3& p);

// Exact area of a smooth support body, (1/2) * integral of h (h + h'').
double support_body_area(const SupportBody2& b);

enum class Feature { Vertex, Edge, Facet };

// Normalized external angle in [0, 1]: facets 1/2, edges (pi - dihedral)/2pi,
// vertices solid angle of the normal cone over 4pi (Girard excess on the
// spherical polygon of adjacent face normals).
double external_angle(const Polytope3& p, Feature feature, int index);

// S_{n-1}(body, U): edge lengths / face areas / exact harmonic integrals by
// outward normal direction.
double surface_area_measure(const ConvexBody& body, const SphereRegion& U);

// S_1 of a 2D body over an arc list (exact per body type).
double surface_measure_arcs(const ConvexBody& body, const std::vector<Arc>& arcs);

// h_K(u) = max_{x in K} <x, u>; u must be unit to 1e-12 and match the body's
// dimension.
double support_eval(const ConvexBody& body, const Eigen::VectorXd& u);

double support_value(const Polygon& p, const Vec2& u);
double support_value(const SupportBody2& b, const Vec2& u);
double support_value(const Ball2& b, const Vec2& u);
double support_value(const Polytope3& p, const Vec3& u);
double support_value(const Ball3& b, const Vec3& u);

Polygon minkowski_sum(const Polygon& a, const Polygon& b);

}  // namespace kinemetry
