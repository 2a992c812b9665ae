#include "kinemetry/selftest.hpp"

#include <cmath>
#include <functional>
#include <ostream>

#include "kinemetry/classic_eval.hpp"
#include "kinemetry/contact.hpp"
#include "kinemetry/hermitian.hpp"
#include "kinemetry/intrinsic.hpp"
#include "kinemetry/kinematic.hpp"

namespace kinemetry {

namespace {

Polygon unit_square() {
    return make_polygon({Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)});
}

Polytope3 unit_cube() {
    return make_polytope3(
        {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}},
        {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}});
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

}  // namespace

int run_selftest(std::ostream& out) {
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    // exact coefficient ring
    check("omega values", omega(0) == PiPoly::constant(1) &&
                              omega(1) == PiPoly::constant(2) &&
                              omega(2) == PiPoly::monomial(1, 2) &&
                              omega(3) == PiPoly::monomial(Rational(4) / Rational(3), 2));
    {
        bool ok = true;
        const PiPoly twoPi = PiPoly::monomial(2, 2);
        for (int m = 2; m <= 30; ++m)
            ok = ok && omega(m) * PiPoly::constant(m) == twoPi * omega(m - 2);
        check("omega recurrence m<=30", ok);
    }
    check("c_coeff examples",
          c_coeff(1, 1, 0) == PiPoly::constant(Rational(1) / Rational(2)) &&
              c_coeff(2, 1, 0) == PiPoly::monomial(Rational(3) / Rational(4), -2) &&
              c_coeff(1, 2, 1) == PiPoly::constant(1));

    // glob / ell_B / delta identities on all valid indices, n <= 6
    {
        bool globSection = true, globKillsDeltaN = true, roundTrip = true;
        for (int n = 1; n <= 6; ++n) {
            for (int k = 0; k <= 2 * n; ++k) {
                for (int q = 0; q <= n; ++q) {
                    if (!valid_mu_index(n, k, q)) continue;
                    ValElement x;
                    x.n = n;
                    x.add({k, q, Family::Mu}, LambdaPiPoly(PiPoly::constant(1)));
                    globSection = globSection && glob(ell_B(x)) == x;
                    globKillsDeltaN = globKillsDeltaN && glob(delta_N(x)).is_zero();
                    const AreaElement lb = ell_B(x);
                    roundTrip = roundTrip && from_B_basis(to_B_basis(lb)) == lb;
                }
            }
        }
        check("glob o ell_B = id (n<=6)", globSection);
        check("glob o delta_N = 0 (n<=6)", globKillsDeltaN);
        check("(Delta,N)<->(B,N) round trip", roundTrip);
    }

    // delta_B pinned values
    {
        ValElement mu10;
        mu10.n = 1;
        mu10.add({1, 0, Family::Mu}, LambdaPiPoly(PiPoly::constant(1)));
        AreaElement expect1;
        expect1.n = 1;
        expect1.add({0, 0, Family::Delta}, LambdaPiPoly(PiPoly::monomial(1, 2)));
        check("delta_B(mu10) = pi B00 (n=1)", delta_B(mu10) == expect1);

        ValElement mu20;
        mu20.n = 2;
        mu20.add({2, 0, Family::Mu}, LambdaPiPoly(PiPoly::constant(1)));
        AreaElement expect2;
        expect2.n = 2;
        expect2.add({1, 0, Family::Delta},
                    LambdaPiPoly(PiPoly::constant(Rational(8) / Rational(3))));
        check("delta_B(mu20) = (8/3) B10 (n=2)", delta_B(mu20) == expect2);
    }

    // calibration and structural checks
    {
        const CalibrationReport cal = calibrate_n1();
        check("calibrate_n1 solution a0=a1=a2", cal.consistent && cal.scalar_family);
        check("calibrated A(S_1) symmetric", check_symmetric(cal.calibratedAS).symmetric);
        check("calibrated A(S_1) noNN", check_noNN(cal.calibratedAS));
        const Ball2 disk = make_ball<2>(Vec2::Zero(), 1.0);
        const SphereRegion half = SphereRegion::arcs({{0, kPi}});
        const double v = evaluate_classical_n1(cal.calibratedAS, disk, half, disk,
                                               SphereRegion::full());
        check("calibrated A(S_1) on (disk,half,disk,full) = 2pi",
              std::abs(v - kTwoPi) <= 1e-12 * kTwoPi);
    }

    // Euclidean intrinsic volumes
    {
        const IntrinsicVolumes sq = intrinsic_volumes(unit_square());
        check("unit square mu = (1,2,1)",
              close(sq[0], 1, 1e-12) && close(sq[1], 2, 1e-12) && close(sq[2], 1, 1e-12));
        const IntrinsicVolumes cu = intrinsic_volumes(unit_cube());
        check("unit cube mu = (1,3,3,1)", close(cu[0], 1, 1e-12) && close(cu[1], 3, 1e-12) &&
                                              close(cu[2], 3, 1e-12) && close(cu[3], 1, 1e-12));
        const IntrinsicVolumes ba = intrinsic_volumes(make_ball<3>(Vec3::Zero(), 1.0));
        check("unit 3-ball mu = (1,4,2pi,4pi/3)",
              close(ba[0], 1, 1e-12) && close(ba[1], 4, 1e-12) && close(ba[2], kTwoPi, 1e-12) &&
                  close(ba[3], 4.0 * kPi / 3.0, 1e-12));
    }

    // cube external angles and the vertex-angle partition of unity
    {
        const Polytope3 cube = unit_cube();
        bool ok = close(external_angle(cube, Feature::Facet, 0), 0.5, 1e-12) &&
                  close(external_angle(cube, Feature::Edge, 0), 0.25, 1e-12) &&
                  close(external_angle(cube, Feature::Vertex, 0), 0.125, 1e-12);
        double sum = 0;
        for (int v = 0; v < 8; ++v) sum += external_angle(cube, Feature::Vertex, v);
        check("cube external angles (1/2,1/4,1/8), vertex sum 1",
              ok && close(sum, 1.0, 1e-12));
    }

    // kinematic identities (deterministic routes only)
    {
        const ConvexBody square = unit_square();
        const ConvexBody disk = make_ball<2>(Vec2::Zero(), 1.0);
        check("pkf_rhs(square,square) = 2 + 8/pi",
              close(pkf_rhs(square, square), 2.0 + 8.0 / kPi, 1e-12));
        check("pkf_rhs(disk,disk) = 4pi", close(pkf_rhs(disk, disk), 4.0 * kPi, 1e-12));
        check("additive(square,square) ~ pkf_rhs at 2048 nodes",
              std::abs(additive_global(square, point_reflected(square), 2048) -
                       pkf_rhs(square, square)) <= 1e-6);
        const ConvexBody cube = unit_cube();
        const ConvexBody ball = make_ball<3>(Vec3::Zero(), 1.0);
        check("additive(cube,ball) = 7 + 13pi/3",
              close(additive_global(cube, ball, 1), 7.0 + 13.0 * kPi / 3.0, 1e-12));
        check("pkf_rhs(cube,ball) = 7 + 13pi/3",
              close(pkf_rhs(cube, ball), 7.0 + 13.0 * kPi / 3.0, 1e-12));
    }

    // local additive oracle and the contact bridge
    {
        const ConvexBody disk = make_ball<2>(Vec2::Zero(), 1.0);
        const SphereRegion full = SphereRegion::full();
        const SphereRegion half = SphereRegion::arcs({{0, kPi}});
        check("oracle(disk,full,disk,full) = 4pi",
              close(local_additive_oracle_2d(disk, full, disk, full), 4.0 * kPi, 1e-12));
        check("oracle(disk,half,disk,full) = 2pi",
              close(local_additive_oracle_2d(disk, half, disk, full), kTwoPi, 1e-12));
        const ConvexBody egg = make_support_body(1.0, {0.2, 0.0, 0.1}, {});
        check("bridge residual (egg vs disk) <= 1e-10",
              akl_crosscheck(egg, half, disk, full) <= 1e-10);
        check("balls 3D contact = S_2 of the sum ball",
              contact_measure_balls_3d(2.0, 1.0) ==
                  surface_area_measure(make_ball<3>(Vec3::Zero(), 3.0), full));
    }

    // intersection predicate
    {
        const ConvexBody diskA = make_ball<2>(Vec2::Zero(), 1.0);
        const ConvexBody diskB = make_ball<2>(Vec2::Zero(), 1.0);
        RigidMotion2 g;
        g.t = Vec2(1.9, 0);
        const int near = euler_intersects2(diskA, diskB, g);
        g.t = Vec2(2.1, 0);
        const int far = euler_intersects2(diskA, diskB, g);
        g.t = Vec2(2.0, 0);
        const int touch = euler_intersects2(diskA, diskB, g);
        check("disk intersection predicate (1.9 -> 1, 2.1 -> 0, touch -> 1)",
              near == 1 && far == 0 && touch == 1);
    }

    out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures;
}

}  // namespace kinemetry
