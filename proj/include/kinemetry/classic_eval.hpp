#pragma once

#include "kinemetry/bodies.hpp"
#include "kinemetry/hermitian.hpp"
#include "kinemetry/region.hpp"

namespace kinemetry {

// Numeric evaluation of an n = 1 Area (x) Area tensor on planar bodies under
// the unit-scale identification Delta_{0,0} = sigma/(2pi), Delta_{1,0} = S_1/2
// (sigma the spherical Lebesgue measure, S_1 the surface area measure).
double evaluate_classical_n1(const KinTensor& T, const ConvexBody& K, const SphereRegion& U,
                             const ConvexBody& L, const SphereRegion& V);

}  // namespace kinemetry
