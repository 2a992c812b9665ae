#pragma once

#include <cstdint>

#include "kinemetry/distance.hpp"
#include "kinemetry/region.hpp"
#include "kinemetry/sampling.hpp"

namespace kinemetry {

struct McEstimate {
    double value = 0.0;
    double stdError = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// Exact right-hand side of the principal kinematic formula:
//   (1/omega_n) * sum_i binom(n,i)^-1 omega_i omega_{n-i} mu_i(A) mu_{n-i}(B).
double pkf_rhs(const ConvexBody& A, const ConvexBody& B);

// Monte Carlo estimate of the motion integral of chi(A intersect gB):
// vol(window) times the hit rate over iid (R uniform, t uniform in window).
McEstimate estimate_pkf(const ConvexBody& A, const ConvexBody& B, const TranslationWindow& window,
                        std::uint64_t samples, std::uint64_t seed);

// Rotation average of vol(K + RL).  2D pairs use midpoint quadrature over the
// rotation angle; 3D requires a ball on one side (constant integrand, exact
// Steiner evaluation).
double additive_global(const ConvexBody& K, const ConvexBody& L, int quadratureNodes);

// Midpoint quadrature of S_1(K + R_phi L, U intersect R_phi V) over phi.
double local_additive_2d(const ConvexBody& K, const SphereRegion& U, const ConvexBody& L,
                         const SphereRegion& V, int quadratureNodes);

// Closed form (|V| S_1(K,U) + |U| S_1(L,V)) / 2pi for the same integral.
double local_additive_oracle_2d(const ConvexBody& K, const SphereRegion& U, const ConvexBody& L,
                                const SphereRegion& V);

// Motion measure of near-contact positions: 0 < dist(K, gL) < r with the
// closest-point direction in U' and in -R V'.  Smooth 2D bodies only.
McEstimate contact_mr(const ConvexBody& K, const SphereRegion& Uprime, const ConvexBody& L,
                      const SphereRegion& Vprime, double r, const TranslationWindow& window,
                      std::uint64_t samples, std::uint64_t seed);

struct PkfReport {
    McEstimate estimate;
    double exact = 0.0;
    double z = 0.0;
};

PkfReport pkf_mc_report(const ConvexBody& A, const ConvexBody& B, std::uint64_t samples,
                        std::uint64_t seed);

// Exact 2D Minkowski-sum area for any pair of polygon / ball / support-body.
double minkowski_area_2d(const ConvexBody& K, const ConvexBody& L);

// Worker count for chunked estimators: KINEMETRY_THREADS when set, otherwise
// the hardware concurrency.  Never affects results, only wall time.
int worker_count();

}  // namespace kinemetry
