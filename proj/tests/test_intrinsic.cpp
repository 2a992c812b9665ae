#include <doctest.h>

#include "fixtures.hpp"
#include "kinemetry/intrinsic.hpp"
#include "kinemetry/sampling.hpp"

using namespace kinemetry;

TEST_CASE("intrinsic volumes of the reference bodies") {
    const IntrinsicVolumes sq = intrinsic_volumes(fixtures::unit_square());
    CHECK(sq[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sq[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sq[2] == doctest::Approx(1.0).epsilon(1e-12));

    const IntrinsicVolumes cube = intrinsic_volumes(fixtures::unit_cube());
    CHECK(cube[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cube[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(cube[2] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(cube[3] == doctest::Approx(1.0).epsilon(1e-12));

    const IntrinsicVolumes ball = intrinsic_volumes(fixtures::unit_ball3());
    CHECK(ball[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ball[1] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(ball[2] == doctest::Approx(kTwoPi).epsilon(1e-12));
    CHECK(ball[3] == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-12));
}

TEST_CASE("mu_0 = 1 and every entry nonnegative across the corpus") {
    SplitMix64 rng(505);
    std::vector<ConvexBody> corpus = {fixtures::unit_square(), fixtures::right_triangle(),
                                      fixtures::egg(), fixtures::pebble(),
                                      ConvexBody(make_ball<2>(Vec2(1, -3), 0.01)),
                                      fixtures::unit_cube(), fixtures::regular_tetrahedron(),
                                      ConvexBody(fixtures::unit_ball3())};
    for (int i = 0; i < 20; ++i)
        corpus.push_back(fixtures::random_polygon(rng, 3 + static_cast<int>(rng.next() % 7)));
    for (const ConvexBody& b : corpus) {
        const IntrinsicVolumes mu = intrinsic_volumes(b);
        CHECK(mu[0] == doctest::Approx(1.0).epsilon(1e-12));
        for (int i = 0; i <= mu.dim; ++i) CHECK(mu[i] >= 0.0);
    }
}

TEST_CASE("ball intrinsic volumes reproduce the Steiner expansion") {
    // vol(B_1 + t B_1) = omega_3 (1+t)^3 must match sum_i mu_i omega_{3-i} t^{3-i}
    const IntrinsicVolumes mu = intrinsic_volumes(fixtures::unit_ball3());
    for (double t : {0.25, 0.5, 1.0, 2.0}) {
        double steiner = 0;
        for (int i = 0; i <= 3; ++i) steiner += mu[i] * unit_ball_volume(3 - i) * std::pow(t, 3 - i);
        const double direct = unit_ball_volume(3) * std::pow(1.0 + t, 3);
        CHECK(steiner == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("support body intrinsic volumes against quadrature") {
    const SupportBody2 egg = fixtures::pebble();
    const IntrinsicVolumes mu = intrinsic_volumes(egg);
    // brute-force integrals of h and h (h + h'') on a fine grid
    const int n = 1 << 16;
    double ih = 0, iarea = 0;
    for (int i = 0; i < n; ++i) {
        const double theta = kTwoPi * (i + 0.5) / n;
        ih += egg.h(theta);
        iarea += egg.h(theta) * egg.curvature_radius(theta);
    }
    ih *= kTwoPi / n;
    iarea *= 0.5 * kTwoPi / n;
    CHECK(mu[1] == doctest::Approx(0.5 * ih).epsilon(1e-10));
    CHECK(mu[2] == doctest::Approx(iarea).epsilon(1e-10));
    CHECK(mu[0] == 1.0);
}

TEST_CASE("external angles of the cube and the vertex partition of unity") {
    const Polytope3 cube = fixtures::unit_cube();
    CHECK(external_angle(cube, Feature::Facet, 3) == doctest::Approx(0.5));
    for (int e = 0; e < 12; ++e)
        CHECK(external_angle(cube, Feature::Edge, e) == doctest::Approx(0.25).epsilon(1e-12));
    for (int v = 0; v < 8; ++v)
        CHECK(external_angle(cube, Feature::Vertex, v) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK_THROWS_AS(external_angle(cube, Feature::Vertex, 8), ValidationError);
    CHECK_THROWS_AS(external_angle(cube, Feature::Edge, -1), ValidationError);
}

TEST_CASE("vertex angles tile the sphere for assorted polytopes") {
    for (const Polytope3& p : {fixtures::unit_cube(), fixtures::regular_tetrahedron(),
                               fixtures::regular_octahedron()}) {
        double sum = 0;
        for (std::size_t v = 0; v < p.vertices.size(); ++v)
            sum += external_angle(p, Feature::Vertex, static_cast<int>(v));
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("external angles weighted by face volumes rebuild the intrinsic volumes") {
    for (const Polytope3& p : {fixtures::unit_cube(), fixtures::regular_tetrahedron(),
                               fixtures::regular_octahedron()}) {
        double mu0 = 0, mu1 = 0, mu2 = 0;
        for (std::size_t v = 0; v < p.vertices.size(); ++v)
            mu0 += external_angle(p, Feature::Vertex, static_cast<int>(v));
        for (std::size_t e = 0; e < p.edges.size(); ++e)
            mu1 += (p.vertices[static_cast<std::size_t>(p.edges[e].v1)] -
                    p.vertices[static_cast<std::size_t>(p.edges[e].v0)])
                       .norm() *
                   external_angle(p, Feature::Edge, static_cast<int>(e));
        for (std::size_t f = 0; f < p.faces.size(); ++f)
            mu2 += p.faceAreas[f] * external_angle(p, Feature::Facet, static_cast<int>(f));
        const IntrinsicVolumes mu = intrinsic_volumes(ConvexBody(p));
        CHECK(mu0 == doctest::Approx(mu[0]).epsilon(1e-12));
        CHECK(mu1 == doctest::Approx(mu[1]).epsilon(1e-12));
        CHECK(mu2 == doctest::Approx(mu[2]).epsilon(1e-12));
    }
    const IntrinsicVolumes cube = intrinsic_volumes(fixtures::unit_cube());
    CHECK(cube[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cube[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(cube[2] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(cube[3] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("intrinsic volumes are rigid-motion invariant") {
    SplitMix64 rng(1234);
    const ConvexBody bodies2[] = {fixtures::unit_square(), fixtures::right_triangle(),
                                  fixtures::egg(), ConvexBody(make_ball<2>(Vec2(0.3, 0.7), 1.4))};
    for (const ConvexBody& body : bodies2) {
        const IntrinsicVolumes ref = intrinsic_volumes(body);
        for (int it = 0; it < 10; ++it) {
            RigidMotion2 g{sample_rotation2(rng),
                           Vec2(rng.uniform(-5, 5), rng.uniform(-5, 5))};
            const ConvexBody moved = std::visit(
                [&](const auto& b) -> ConvexBody {
                    using T = std::decay_t<decltype(b)>;
                    if constexpr (std::is_same_v<T, Polygon> || std::is_same_v<T, SupportBody2> ||
                                  std::is_same_v<T, Ball2>)
                        return transformed(b, g);
                    else
                        throw ValidationError("unexpected 3D body");
                },
                body);
            const IntrinsicVolumes mu = intrinsic_volumes(moved);
            for (int i = 0; i <= 2; ++i)
                CHECK(std::abs(mu[i] - ref[i]) <= 1e-9 * (1.0 + std::abs(ref[i])));
        }
    }
    const ConvexBody bodies3[] = {fixtures::unit_cube(), fixtures::regular_tetrahedron(),
                                  ConvexBody(make_ball<3>(Vec3(1, 2, 3), 0.8))};
    for (const ConvexBody& body : bodies3) {
        const IntrinsicVolumes ref = intrinsic_volumes(body);
        for (int it = 0; it < 10; ++it) {
            RigidMotion3 g{sample_rotation3(rng),
                           Vec3(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5))};
            const ConvexBody moved = std::visit(
                [&](const auto& b) -> ConvexBody {
                    using T = std::decay_t<decltype(b)>;
                    if constexpr (std::is_same_v<T, Polytope3> || std::is_same_v<T, Ball3>)
                        return transformed(b, g);
                    else
                        throw ValidationError("unexpected 2D body");
                },
                body);
            const IntrinsicVolumes mu = intrinsic_volumes(moved);
            for (int i = 0; i <= 3; ++i)
                CHECK(std::abs(mu[i] - ref[i]) <= 1e-9 * (1.0 + std::abs(ref[i])));
        }
    }
}

TEST_CASE("surface area measure on the reference bodies") {
    const SphereRegion full = SphereRegion::full();
    CHECK(surface_area_measure(make_ball<2>(Vec2(2, 2), 1.0), full) ==
          doctest::Approx(kTwoPi).epsilon(1e-12));
    CHECK(surface_area_measure(fixtures::unit_ball3(), full) ==
          doctest::Approx(4.0 * kPi).epsilon(1e-12));

    // axis-aligned unit square, U = (-pi/4, pi/4): only the right edge
    const SphereRegion quadrant = SphereRegion::arcs({{-kPi / 4, kPi / 4}});
    CHECK(surface_area_measure(fixtures::unit_square(), quadrant) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // cube with caps around +x and -z
    const SphereRegion caps = SphereRegion::caps(
        {{Vec3::UnitX(), 0.3}, {Vec3(0, 0, -1), 0.3}});
    CHECK(surface_area_measure(fixtures::unit_cube(), caps) == doctest::Approx(2.0));

    // degenerate ball rejected
    CHECK_THROWS_AS(surface_area_measure(make_ball<2>(Vec2::Zero(), 0.0), full),
                    UnsupportedError);
}

TEST_CASE("globalization: full-sphere surface measure is twice mu_{n-1}") {
    const ConvexBody bodies[] = {fixtures::unit_square(), fixtures::right_triangle(),
                                 fixtures::egg(), ConvexBody(make_ball<2>(Vec2(1, 0), 0.6)),
                                 fixtures::unit_cube(), ConvexBody(fixtures::unit_ball3())};
    for (const ConvexBody& b : bodies) {
        const int n = dimension(b);
        const double total = surface_area_measure(b, SphereRegion::full());
        const double mu = intrinsic_volumes(b)[n - 1];
        CHECK(std::abs(total - 2.0 * mu) <= 1e-10 * (1.0 + std::abs(2.0 * mu)));
    }
}

TEST_CASE("surface measure is additive over disjoint arcs") {
    const SphereRegion u1 = SphereRegion::arcs({{0.2, 1.0}});
    const SphereRegion u2 = SphereRegion::arcs({{1.5, 2.6}});
    const SphereRegion u12 = SphereRegion::arcs({{0.2, 1.0}, {1.5, 2.6}});
    for (const ConvexBody& b :
         {ConvexBody(fixtures::unit_square()), ConvexBody(fixtures::egg()),
          ConvexBody(make_ball<2>(Vec2::Zero(), 2.0))}) {
        const double split = surface_area_measure(b, u1) + surface_area_measure(b, u2);
        CHECK(std::abs(surface_area_measure(b, u12) - split) <= 1e-12 * (1.0 + split));
    }
}

TEST_CASE("surface measure is rotation equivariant") {
    SplitMix64 rng(555);
    const SphereRegion u = SphereRegion::arcs({{0.3, 1.4}, {2.0, 2.2}});
    for (int it = 0; it < 10; ++it) {
        const double phi = rng.uniform(0.0, kTwoPi);
        const RigidMotion2 g = rotation2(phi);
        for (const ConvexBody& b : {ConvexBody(fixtures::unit_square()), ConvexBody(fixtures::egg())}) {
            const ConvexBody moved = std::visit(
                [&](const auto& bb) -> ConvexBody {
                    using T = std::decay_t<decltype(bb)>;
                    if constexpr (std::is_same_v<T, Polygon> || std::is_same_v<T, SupportBody2>)
                        return transformed(bb, g);
                    else
                        throw ValidationError("unexpected body");
                },
                b);
            const double lhs = surface_area_measure(moved, u.rotated(phi));
            const double rhs = surface_area_measure(b, u);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(rhs)));
        }
    }
    // S^2: rotate a cap region together with the cube
    for (int it = 0; it < 5; ++it) {
        const Mat3 R = sample_rotation3(rng);
        const RigidMotion3 g{R, Vec3::Zero()};
        const SphereRegion caps = SphereRegion::caps({{Vec3::UnitZ(), 0.4}});
        const double lhs =
            surface_area_measure(transformed(fixtures::unit_cube(), g), caps.rotated(R));
        const double rhs = surface_area_measure(fixtures::unit_cube(), caps);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("support evaluation examples and guards") {
    Eigen::VectorXd u(2);
    u << 1, 0;
    CHECK(support_eval(fixtures::unit_square(), u) == doctest::Approx(1.0));
    CHECK(support_eval(make_ball<2>(Vec2(2, 1), 0.5), u) == doctest::Approx(2.5));
    const SupportBody2 disk = make_support_body(1.0, {}, {});
    for (double theta : {0.0, 1.1, 4.4}) {
        Eigen::VectorXd d(2);
        d << std::cos(theta), std::sin(theta);
        CHECK(support_eval(disk, d) == doctest::Approx(1.0).epsilon(1e-12));
    }
    u << 1, 1;  // not unit
    CHECK_THROWS_AS(support_eval(fixtures::unit_square(), u), ValidationError);
    Eigen::VectorXd w(3);
    w << 1, 0, 0;
    CHECK_THROWS_AS(support_eval(fixtures::unit_square(), w), ValidationError);
    CHECK(support_eval(fixtures::unit_cube(), w) == doctest::Approx(1.0));
}
