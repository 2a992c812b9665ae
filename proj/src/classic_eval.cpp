#include "kinemetry/classic_eval.hpp"

#include "kinemetry/intrinsic.hpp"

namespace kinemetry {

namespace {

double classical_factor(const BasisIndex& idx, const ConvexBody& body, const SphereRegion& R) {
    if (idx.family == Family::Delta && idx.k == 0 && idx.q == 0)
        return R.circle_measure() / kTwoPi;
    if (idx.family == Family::Delta && idx.k == 1 && idx.q == 0)
        return 0.5 * surface_measure_arcs(body, as_arcs(R));
    throw UnsupportedError("classical evaluation is defined for Delta00/Delta10 only, got " +
                           to_string(idx));
}

}  // namespace

double evaluate_classical_n1(const KinTensor& T, const ConvexBody& K, const SphereRegion& U,
                             const ConvexBody& L, const SphereRegion& V) {
    if (T.n != 1 || T.slot1 != KinTensor::Slot::Area || T.slot2 != KinTensor::Slot::Area)
        throw UnsupportedError("classical evaluation expects an n=1 Area (x) Area tensor");
    double s = 0;
    for (const auto& [key, c] : T.terms) {
        if (c.max_lambda_degree() != 0)
            throw UnsupportedError("classical evaluation needs a lambda-free tensor");
        s += c.at_lambda_zero().to_double() * classical_factor(key.first, K, U) *
             classical_factor(key.second, L, V);
    }
    return s;
}

}  // namespace kinemetry
