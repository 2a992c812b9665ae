#pragma once

#include <array>
#include <variant>
#include <vector>

#include "kinemetry/common.hpp"

namespace kinemetry {

// Strictly convex polygon, counterclockwise vertex order.  Construct through
// make_polygon so the invariants (>= 3 vertices, every consecutive cross
// product positive to 1e-12 relative) hold everywhere downstream.
struct Polygon {
    std::vector<Vec2> vertices;
};

Polygon make_polygon(std::vector<Vec2> vertices);
void validate(const Polygon& p);

// Convex 3-polytope given by vertices and outward-oriented planar faces
// (vertex index lists, counterclockwise seen from outside).
struct Polytope3 {
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;

    // derived on construction
    std::vector<Vec3> faceNormals;   // unit, outward
    std::vector<double> faceAreas;
    std::vector<Vec3> faceCentroids;
    struct Edge {
        int v0, v1;        // v0 < v1
        int faceA, faceB;  // the two incident faces
    };
    std::vector<Edge> edges;
};

Polytope3 make_polytope3(std::vector<Vec3> vertices, std::vector<std::vector<int>> faces);

template <int Dim>
struct Ball {
    Eigen::Matrix<double, Dim, 1> center = Eigen::Matrix<double, Dim, 1>::Zero();
    double radius = 0.0;
};

using Ball2 = Ball<2>;
using Ball3 = Ball<3>;

template <int Dim>
Ball<Dim> make_ball(const Eigen::Matrix<double, Dim, 1>& center, double radius) {
    if (radius < 0.0) throw ValidationError("ball radius must be nonnegative");
    return Ball<Dim>{center, radius};
}

// Smooth planar convex body given by a truncated Fourier support function
// h(t) = a0 + sum_m (cos[m-1]*cos(m t) + sin[m-1]*sin(m t)), m = 1..degree.
// Strict convexity (h + h'' > 0) is checked on a 4096-point grid; the harmonic
// degree is capped at 64.
struct SupportBody2 {
    double a0 = 0.0;
    std::vector<double> cosCoeffs;
    std::vector<double> sinCoeffs;

    int degree() const { return static_cast<int>(std::max(cosCoeffs.size(), sinCoeffs.size())); }
    double h(double theta) const;
    double dh(double theta) const;
    double ddh(double theta) const;
    // curvature radius h + h''
    double curvature_radius(double theta) const { return h(theta) + ddh(theta); }
    Vec2 boundary_point(double theta) const;
};

inline constexpr int kMaxHarmonicDegree = 64;
inline constexpr int kConvexityGrid = 4096;

SupportBody2 make_support_body(double a0, std::vector<double> cosCoeffs,
                               std::vector<double> sinCoeffs);

using ConvexBody = std::variant<Polygon, SupportBody2, Ball2, Polytope3, Ball3>;

int dimension(const ConvexBody& body);

// Rigid motion x -> R x + t with R in SO(Dim).
template <int Dim>
struct RigidMotion {
    Eigen::Matrix<double, Dim, Dim> R = Eigen::Matrix<double, Dim, Dim>::Identity();
    Eigen::Matrix<double, Dim, 1> t = Eigen::Matrix<double, Dim, 1>::Zero();

    Eigen::Matrix<double, Dim, 1> operator()(const Eigen::Matrix<double, Dim, 1>& x) const {
        return R * x + t;
    }
};

using RigidMotion2 = RigidMotion<2>;
using RigidMotion3 = RigidMotion<3>;

template <int Dim>
RigidMotion<Dim> make_rigid_motion(const Eigen::Matrix<double, Dim, Dim>& R,
                                   const Eigen::Matrix<double, Dim, 1>& t) {
    if (((R * R.transpose()) - Eigen::Matrix<double, Dim, Dim>::Identity()).cwiseAbs().maxCoeff() >
        kUnitTol)
        throw ValidationError("rotation matrix is not orthogonal");
    if (std::abs(R.determinant() - 1.0) > kUnitTol)
        throw ValidationError("rotation matrix must have determinant +1");
    return RigidMotion<Dim>{R, t};
}

RigidMotion2 rotation2(double phi);
Mat2 rotation_matrix2(double phi);

// Transformed copies; the SupportBody2 case rotates the harmonic coefficients
// exactly and folds the translation into the degree-1 terms.
Polygon transformed(const Polygon& p, const RigidMotion2& g);
SupportBody2 transformed(const SupportBody2& b, const RigidMotion2& g);
Ball2 transformed(const Ball2& b, const RigidMotion2& g);
Polytope3 transformed(const Polytope3& p, const RigidMotion3& g);
Ball3 transformed(const Ball3& b, const RigidMotion3& g);

// Point reflection x -> -x.
ConvexBody point_reflected(const ConvexBody& body);

// max_{|u|=1} h_K(u): the farthest extent of K from the origin.
double circumradius_bound(const ConvexBody& body);

}  // namespace kinemetry
