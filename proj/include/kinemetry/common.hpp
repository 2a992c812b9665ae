#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kinemetry {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Validation gates for double-precision geometry.
inline constexpr double kConvexityTol2d = 1e-12;  // relative, 2D cross products
inline constexpr double kGeomTol3d = 1e-9;        // absolute, coplanarity / hull checks
inline constexpr double kUnitTol = 1e-12;         // unit vectors, rotation matrices
inline constexpr double kContactTol = 1e-10;      // separation / distance queries
inline constexpr double kWindowInflate = 1e-6;

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Volume of the unit m-ball, pi^(m/2)/Gamma(m/2+1).
double unit_ball_volume(int m);

// Wraps an angle into [0, 2*pi).
inline double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

}  // namespace kinemetry
