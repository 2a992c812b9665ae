#pragma once

#include "kinemetry/bodies.hpp"
#include "kinemetry/region.hpp"

namespace kinemetry {

// Curvature data of a smooth planar body: curvature radius h + h'' and
// curvature kappa = 1/(h + h''), evaluated exactly from the harmonics.
class CurvatureField2 {
public:
    explicit CurvatureField2(const SupportBody2& body) : body_(body) {}
    explicit CurvatureField2(const Ball2& ball);

    double radius(double theta) const { return body_.curvature_radius(theta); }
    double curvature(double theta) const { return 1.0 / radius(theta); }

private:
    SupportBody2 body_;
};

// The inner isotropy average of the smooth contact formula: the trivial group
// in dimension 2, the circle of rotations about the contact normal in
// dimension 3.  Haar probability, total mass 1.
struct IsotropyAverage {
    int dim = 2;
    static constexpr double kMass = 1.0;
};

// Closed-form contact measure for smooth planar bodies:
//   (1/2pi) ( S_1(B, V') |U'| + S_1(A, U') |V'| ),
// using that the curvature integral over boundary points with normals in U'
// equals |U'| and the plain length integral equals S_1(A, U').  Regions are
// indexed by outward normal direction.
double contact_measure_2d(const ConvexBody& A, const SphereRegion& Uprime, const ConvexBody& B,
                          const SphereRegion& Vprime);

// Contact measure of two balls in R^3 over full spheres; the circle average
// of the shape-operator determinant collapses to the closed form 4pi(a+b)^2.
double contact_measure_balls_3d(double a, double b);

// Residual of the bridge identity between the contact measure and the local
// additive oracle evaluated on the reflected pair (-L, -V').
double akl_crosscheck(const ConvexBody& K, const SphereRegion& Uprime, const ConvexBody& L,
                      const SphereRegion& Vprime);

}  // namespace kinemetry
