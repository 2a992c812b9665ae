#include "kinemetry/sampling.hpp"

#include <Eigen/Geometry>
#include <cmath>

#include "kinemetry/intrinsic.hpp"

namespace kinemetry {

double sample_rotation_angle(SplitMix64& rng) { return kTwoPi * rng.uniform(); }

Mat2 sample_rotation2(SplitMix64& rng) { return rotation_matrix2(sample_rotation_angle(rng)); }

Mat3 sample_rotation3(SplitMix64& rng) {
    const double u1 = rng.uniform();
    const double u2 = rng.uniform();
    const double u3 = rng.uniform();
    const double r1 = std::sqrt(1.0 - u1), r2 = std::sqrt(u1);
    const double t2 = kTwoPi * u2, t3 = kTwoPi * u3;
    const Eigen::Quaterniond q(r2 * std::cos(t3), r1 * std::sin(t2), r1 * std::cos(t2),
                               r2 * std::sin(t3));
    return q.toRotationMatrix();
}

namespace {

double support_axis(const ConvexBody& body, int axis, double sign) {
    const int n = dimension(body);
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    u[axis] = sign;
    return support_eval(body, u);
}

}  // namespace

TranslationWindow translation_window(const ConvexBody& A, const ConvexBody& B, double margin) {
    if (dimension(A) != dimension(B))
        throw ValidationError("translation_window: bodies of different dimension");
    TranslationWindow w;
    w.dim = dimension(A);
    const double rhoB = circumradius_bound(B);
    for (int i = 0; i < w.dim; ++i) {
        const auto k = static_cast<std::size_t>(i);
        w.hi[k] = support_axis(A, i, +1.0) + rhoB + margin + kWindowInflate;
        w.lo[k] = -(support_axis(A, i, -1.0) + rhoB + margin + kWindowInflate);
    }
    return w;
}

void validate_window(const TranslationWindow& window, const ConvexBody& A, const ConvexBody& B,
                     double margin) {
    TranslationWindow minimal = translation_window(A, B, margin);
    if (window.dim != minimal.dim)
        throw ValidationError("translation window dimension mismatch");
    // allow the caller's window to sit exactly on the minimal one
    for (int i = 0; i < minimal.dim; ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (window.lo[k] > minimal.lo[k] + 1e-12 || window.hi[k] < minimal.hi[k] - 1e-12)
            throw ValidationError("translation window does not cover all contact positions");
    }
}

Vec2 sample_in_window2(const TranslationWindow& w, SplitMix64& rng) {
    return Vec2(rng.uniform(w.lo[0], w.hi[0]), rng.uniform(w.lo[1], w.hi[1]));
}

Vec3 sample_in_window3(const TranslationWindow& w, SplitMix64& rng) {
    return Vec3(rng.uniform(w.lo[0], w.hi[0]), rng.uniform(w.lo[1], w.hi[1]),
                rng.uniform(w.lo[2], w.hi[2]));
}

}  // namespace kinemetry
