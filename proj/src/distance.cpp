#include "kinemetry/distance.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace kinemetry {

namespace {

// --- closest point on a k-simplex to the origin (Ericson-style) -------------

template <class V>
struct SimplexResult {
    V point;
    std::array<int, 4> keep{};  // indices into the input set
    int keepCount = 0;
};

template <class V>
SimplexResult<V> closest_on_segment(const V& a, const V& b, int ia, int ib) {
    const V ab = b - a;
    const double denom = ab.squaredNorm();
    double t = denom > 0 ? -a.dot(ab) / denom : 0.0;
    if (t <= 0.0) return {a, {ia}, 1};
    if (t >= 1.0) return {b, {ib}, 1};
    return {V(a + t * ab), {ia, ib}, 2};
}

template <class V>
SimplexResult<V> closest_on_triangle(const V& a, const V& b, const V& c, int ia, int ib, int ic) {
    const V ab = b - a, ac = c - a;
    const double d1 = -ab.dot(a), d2 = -ac.dot(a);
    if (d1 <= 0.0 && d2 <= 0.0) return {a, {ia}, 1};

    const double d3 = -ab.dot(b), d4 = -ac.dot(b);
    if (d3 >= 0.0 && d4 <= d3) return {b, {ib}, 1};

    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        const double v = d1 / (d1 - d3);
        return {V(a + v * ab), {ia, ib}, 2};
    }

    const double d5 = -ab.dot(c), d6 = -ac.dot(c);
    if (d6 >= 0.0 && d5 <= d6) return {c, {ic}, 1};

    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        const double w = d2 / (d2 - d6);
        return {V(a + w * ac), {ia, ic}, 2};
    }

    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return {V(b + w * (c - b)), {ib, ic}, 2};
    }

    const double denom = va + vb + vc;
    if (denom == 0.0) return {a, {ia}, 1};  // fully degenerate triangle
    const double v = vb / denom, w = vc / denom;
    return {V(a + v * ab + w * ac), {ia, ib, ic}, 3};
}

SimplexResult<Vec3> closest_on_tetrahedron(const std::array<Vec3, 4>& p) {
    struct Face {
        int a, b, c, opposite;
    };
    static constexpr Face faces[4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 3, 1}, {1, 2, 3, 0}};

    bool inside = true;
    SimplexResult<Vec3> best;
    double bestDist = std::numeric_limits<double>::infinity();
    for (const Face& f : faces) {
        const Vec3 n = (p[f.b] - p[f.a]).cross(p[f.c] - p[f.a]);
        const double sOrigin = -n.dot(p[f.a]);
        const double sOpposite = n.dot(p[f.opposite] - p[f.a]);
        if (sOrigin * sOpposite >= 0.0) continue;  // origin not outside this face
        inside = false;
        SimplexResult<Vec3> r = closest_on_triangle(p[f.a], p[f.b], p[f.c], f.a, f.b, f.c);
        const double d = r.point.squaredNorm();
        if (d < bestDist) {
            bestDist = d;
            best = r;
        }
    }
    if (inside) return {Vec3::Zero(), {0, 1, 2, 3}, 4};
    return best;
}

// --- GJK distance over a Minkowski-difference support map ------------------

template <int Dim, class SuppFn>
GapResult gjk_distance(SuppFn&& support, double scale) {
    using V = Eigen::Matrix<double, Dim, 1>;
    const double zeroTol = 1e-13 * scale;
    const double gapTol = 1e-12 * std::max(1.0, scale);

    std::array<V, 4> W;
    int nW = 1;
    W[0] = support(V::UnitX());
    V v = W[0];
    double upper = v.norm();
    double lower = 0.0;

    for (int iter = 0; iter < 128; ++iter) {
        if (upper <= zeroTol) return {0.0, Vec3::Zero()};
        const V w = support(V(-v));
        lower = std::max(lower, v.dot(w) / upper);
        if (upper - lower <= gapTol) break;

        bool duplicate = false;
        for (int i = 0; i < nW; ++i)
            if ((W[i] - w).squaredNorm() <= zeroTol * zeroTol) duplicate = true;
        if (duplicate) break;

        W[nW++] = w;

        SimplexResult<V> r;
        if (nW == 2) {
            r = closest_on_segment(W[0], W[1], 0, 1);
        } else if (nW == 3) {
            r = closest_on_triangle(W[0], W[1], W[2], 0, 1, 2);
        } else {
            if constexpr (Dim == 3) {
                std::array<Vec3, 4> pts{W[0], W[1], W[2], W[3]};
                r = closest_on_tetrahedron(pts);
            } else {
                r = closest_on_triangle(W[0], W[1], W[2], 0, 1, 2);
            }
        }

        std::array<V, 4> reduced;
        for (int i = 0; i < r.keepCount; ++i) reduced[i] = W[r.keep[static_cast<std::size_t>(i)]];
        nW = r.keepCount;
        for (int i = 0; i < nW; ++i) W[i] = reduced[i];

        v = r.point;
        const double nv = v.norm();
        if (nv >= upper - 1e-16 * scale && iter > 0) {
            upper = std::min(upper, nv);
            break;  // no progress
        }
        upper = nv;
    }

    Vec3 dir = Vec3::Zero();
    if (upper > 0) {
        if constexpr (Dim == 2)
            dir = Vec3(-v.x() / upper, -v.y() / upper, 0.0);
        else
            dir = -v / upper;
    }
    return {std::max(upper, 0.0), dir};
}

// --- core shapes (balls peeled to their centers) ----------------------------

Vec2 core_point(const Polygon& p, const Vec2& u) {
    double best = -std::numeric_limits<double>::infinity();
    Vec2 out = Vec2::Zero();
    for (const Vec2& v : p.vertices) {
        const double d = v.dot(u);
        if (d > best) {
            best = d;
            out = v;
        }
    }
    return out;
}

Vec2 core_point(const SupportBody2& b, const Vec2& u) {
    return b.boundary_point(std::atan2(u.y(), u.x()));
}

Vec2 core_point(const Ball2& b, const Vec2&) { return b.center; }

Vec3 core_point(const Polytope3& p, const Vec3& u) {
    double best = -std::numeric_limits<double>::infinity();
    Vec3 out = Vec3::Zero();
    for (const Vec3& v : p.vertices) {
        const double d = v.dot(u);
        if (d > best) {
            best = d;
            out = v;
        }
    }
    return out;
}

Vec3 core_point(const Ball3& b, const Vec3&) { return b.center; }

template <class T>
double core_radius(const T& b) {
    if constexpr (std::is_same_v<T, Ball2> || std::is_same_v<T, Ball3>)
        return b.radius;
    else
        return 0.0;
}

}  // namespace

GapResult closest_gap2(const ConvexBody& A, const ConvexBody& B, const Mat2& R, const Vec2& t) {
    if (dimension(A) != 2 || dimension(B) != 2)
        throw ValidationError("closest_gap2 expects 2D bodies");
    return std::visit(
        [&](const auto& a, const auto& b) -> GapResult {
            using TA = std::decay_t<decltype(a)>;
            using TB = std::decay_t<decltype(b)>;
            if constexpr ((std::is_same_v<TA, Polytope3> || std::is_same_v<TA, Ball3>) ||
                          (std::is_same_v<TB, Polytope3> || std::is_same_v<TB, Ball3>)) {
                throw ValidationError("dimension mismatch");
            } else {
                const double rA = core_radius(a), rB = core_radius(b);
                if constexpr (std::is_same_v<TA, Ball2> && std::is_same_v<TB, Ball2>) {
                    const Vec2 d = (R * b.center + t) - a.center;
                    const double nd = d.norm();
                    GapResult out;
                    out.gap = std::max(0.0, nd - rA - rB);
                    if (out.gap > 0 && nd > 0) out.direction = Vec3(d.x() / nd, d.y() / nd, 0.0);
                    return out;
                } else {
                    const Mat2 Rt = R.transpose();
                    auto suppD = [&](const Vec2& u) -> Vec2 {
                        return core_point(a, u) - (R * core_point(b, Vec2(-(Rt * u))) + t);
                    };
                    const double scale =
                        1.0 + circumradius_bound(A) + circumradius_bound(B) + t.norm();
                    GapResult core = gjk_distance<2>(suppD, scale);
                    GapResult out;
                    out.gap = std::max(0.0, core.gap - rA - rB);
                    if (out.gap > 0) out.direction = core.direction;
                    return out;
                }
            }
        },
        A, B);
}

GapResult closest_gap(const ConvexBody& A, const ConvexBody& B, const Mat3& R, const Vec3& t) {
    if (dimension(A) != 3 || dimension(B) != 3)
        throw ValidationError("closest_gap expects 3D bodies");
    return std::visit(
        [&](const auto& a, const auto& b) -> GapResult {
            using TA = std::decay_t<decltype(a)>;
            using TB = std::decay_t<decltype(b)>;
            if constexpr (!(std::is_same_v<TA, Polytope3> || std::is_same_v<TA, Ball3>) ||
                          !(std::is_same_v<TB, Polytope3> || std::is_same_v<TB, Ball3>)) {
                throw ValidationError("dimension mismatch");
            } else {
                const double rA = core_radius(a), rB = core_radius(b);
                if constexpr (std::is_same_v<TA, Ball3> && std::is_same_v<TB, Ball3>) {
                    const Vec3 d = (R * b.center + t) - a.center;
                    const double nd = d.norm();
                    GapResult out;
                    out.gap = std::max(0.0, nd - rA - rB);
                    if (out.gap > 0 && nd > 0) out.direction = d / nd;
                    return out;
                } else {
                    const Mat3 Rt = R.transpose();
                    auto suppD = [&](const Vec3& u) -> Vec3 {
                        return core_point(a, u) - (R * core_point(b, Vec3(-(Rt * u))) + t);
                    };
                    const double scale =
                        1.0 + circumradius_bound(A) + circumradius_bound(B) + t.norm();
                    GapResult core = gjk_distance<3>(suppD, scale);
                    GapResult out;
                    out.gap = std::max(0.0, core.gap - rA - rB);
                    if (out.gap > 0) out.direction = core.direction;
                    return out;
                }
            }
        },
        A, B);
}

int euler_intersects2(const ConvexBody& A, const ConvexBody& B, const RigidMotion2& g) {
    return closest_gap2(A, B, g.R, g.t).gap <= kContactTol ? 1 : 0;
}

int euler_intersects3(const ConvexBody& A, const ConvexBody& B, const RigidMotion3& g) {
    return closest_gap(A, B, g.R, g.t).gap <= kContactTol ? 1 : 0;
}

}  // namespace kinemetry
