#pragma once

#include "kinemetry/bodies.hpp"
#include "kinemetry/rng.hpp"

namespace kinemetry {

// Normalization of the motion measure used by every estimator and oracle in
// this library: Haar probability on the rotation group times Lebesgue measure
// on translations.
struct HaarNormalization {
    static constexpr double kRotationMass = 1.0;
};

// Uniform rotation angle on [0, 2*pi); consumes one uniform.
double sample_rotation_angle(SplitMix64& rng);

// Haar-uniform SO(2) matrix; consumes one uniform.
Mat2 sample_rotation2(SplitMix64& rng);

// Haar-uniform SO(3) matrix via a uniform unit quaternion (Shoemake map from
// three uniforms); consumes exactly three uniforms.
Mat3 sample_rotation3(SplitMix64& rng);

// Axis-aligned box of translations guaranteed to contain every t for which
// A intersects (R*B + t), for every rotation R.
struct TranslationWindow {
    int dim = 2;
    std::array<double, 3> lo{};
    std::array<double, 3> hi{};

    double volume() const {
        double v = 1;
        for (int i = 0; i < dim; ++i) v *= hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)];
        return v;
    }
    bool covers(const TranslationWindow& inner) const {
        if (dim != inner.dim) return false;
        for (int i = 0; i < dim; ++i) {
            const auto k = static_cast<std::size_t>(i);
            if (lo[k] > inner.lo[k] || hi[k] < inner.hi[k]) return false;
        }
        return true;
    }
};

// Minimal valid window: per-axis support bounds of A plus the circumradius of
// B, inflated by `margin` + 1e-6.
TranslationWindow translation_window(const ConvexBody& A, const ConvexBody& B,
                                     double margin = 0.0);

// Throws unless `window` covers the minimal window for (A, B) with `margin`.
void validate_window(const TranslationWindow& window, const ConvexBody& A, const ConvexBody& B,
                     double margin = 0.0);

Vec2 sample_in_window2(const TranslationWindow& w, SplitMix64& rng);
Vec3 sample_in_window3(const TranslationWindow& w, SplitMix64& rng);

}  // namespace kinemetry
