#include "kinemetry/contact.hpp"

#include <cmath>

#include "kinemetry/intrinsic.hpp"
#include "kinemetry/kinematic.hpp"

namespace kinemetry {

CurvatureField2::CurvatureField2(const Ball2& ball) {
    if (!(ball.radius > 0.0)) throw ValidationError("curvature field needs a positive radius");
    body_.a0 = ball.radius;
    body_.cosCoeffs = {ball.center.x()};
    body_.sinCoeffs = {ball.center.y()};
}

namespace {

void require_smooth_2d(const ConvexBody& b, const char* what) {
    if (const Ball2* ball = std::get_if<Ball2>(&b)) {
        if (!(ball->radius > 0.0))
            throw ValidationError(std::string(what) + ": ball radius must be positive");
        return;
    }
    if (!std::holds_alternative<SupportBody2>(b))
        throw ValidationError(std::string(what) + ": smooth 2D body (ball or support body) required");
}

}  // namespace

double contact_measure_2d(const ConvexBody& A, const SphereRegion& Uprime, const ConvexBody& B,
                          const SphereRegion& Vprime) {
    require_smooth_2d(A, "contact_measure_2d");
    require_smooth_2d(B, "contact_measure_2d");
    const double lenU = Uprime.circle_measure();
    const double lenV = Vprime.circle_measure();
    const double s1A = surface_measure_arcs(A, as_arcs(Uprime));
    const double s1B = surface_measure_arcs(B, as_arcs(Vprime));
    return (s1B * lenU + s1A * lenV) / kTwoPi;
}

double contact_measure_balls_3d(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw ValidationError("contact_measure_balls_3d: radii must be positive");
    const double s = a + b;
    return s * s * (4.0 * kPi);
}

double akl_crosscheck(const ConvexBody& K, const SphereRegion& Uprime, const ConvexBody& L,
                      const SphereRegion& Vprime) {
    const double contact = contact_measure_2d(K, Uprime, L, Vprime);
    const double additive =
        local_additive_oracle_2d(K, Uprime, point_reflected(L), Vprime.antipodal());
    return std::abs(contact - additive);
}

}  // namespace kinemetry
