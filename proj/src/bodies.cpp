#include "kinemetry/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace kinemetry {

Polygon make_polygon(std::vector<Vec2> vertices) {
    Polygon p{std::move(vertices)};
    validate(p);
    return p;
}

void validate(const Polygon& p) {
    const auto& v = p.vertices;
    const std::size_t n = v.size();
    if (n < 3) throw ValidationError("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        if ((b - a).norm() == 0.0) throw ValidationError("polygon has duplicate consecutive vertices");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e1 = v[(i + 1) % n] - v[i];
        const Vec2 e2 = v[(i + 2) % n] - v[(i + 1) % n];
        const double cross = e1.x() * e2.y() - e1.y() * e2.x();
        if (cross <= kConvexityTol2d * e1.norm() * e2.norm())
            throw ValidationError("polygon is not strictly convex counterclockwise");
    }
}

namespace {

Vec3 polygon_newell_normal(const std::vector<Vec3>& pts) {
    Vec3 nrm = Vec3::Zero();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec3& a = pts[i];
        const Vec3& b = pts[(i + 1) % pts.size()];
        nrm += a.cross(b);
    }
    return nrm;
}

}  // namespace

Polytope3 make_polytope3(std::vector<Vec3> vertices, std::vector<std::vector<int>> faces) {
    Polytope3 p;
    p.vertices = std::move(vertices);
    p.faces = std::move(faces);
    const int nv = static_cast<int>(p.vertices.size());
    if (nv < 4 || p.faces.size() < 4) throw ValidationError("polytope needs >= 4 vertices and faces");

    Vec3 bodyCentroid = Vec3::Zero();
    for (const Vec3& v : p.vertices) bodyCentroid += v;
    bodyCentroid /= nv;

    std::vector<int> vertexFaceCount(nv, 0);
    std::map<std::pair<int, int>, std::vector<int>> edgeFaces;

    for (std::size_t f = 0; f < p.faces.size(); ++f) {
        const auto& idx = p.faces[f];
        if (idx.size() < 3) throw ValidationError("face needs at least 3 vertices");
        std::vector<Vec3> pts;
        for (int i : idx) {
            if (i < 0 || i >= nv) throw ValidationError("face references a missing vertex");
            pts.push_back(p.vertices[i]);
            ++vertexFaceCount[i];
        }
        Vec3 nrm = polygon_newell_normal(pts);
        const double nn = nrm.norm();
        if (nn <= kGeomTol3d) throw ValidationError("degenerate face");
        nrm /= nn;

        Vec3 faceCentroid = Vec3::Zero();
        for (const Vec3& q : pts) faceCentroid += q;
        faceCentroid /= static_cast<double>(pts.size());

        for (const Vec3& q : pts)
            if (std::abs(nrm.dot(q - faceCentroid)) > kGeomTol3d)
                throw ValidationError("face vertices are not coplanar");

        // outward orientation
        if (nrm.dot(faceCentroid - bodyCentroid) <= 0.0)
            throw ValidationError("face normal does not point outward");

        // face convexity in its plane
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Vec3 e1 = pts[(i + 1) % pts.size()] - pts[i];
            const Vec3 e2 = pts[(i + 2) % pts.size()] - pts[(i + 1) % pts.size()];
            if (e1.cross(e2).dot(nrm) <= kGeomTol3d * e1.norm() * e2.norm())
                throw ValidationError("face polygon is not strictly convex");
        }

        // hull property: all vertices on or behind the face plane
        for (const Vec3& q : p.vertices)
            if (nrm.dot(q - faceCentroid) > kGeomTol3d)
                throw ValidationError("vertex lies outside a face plane");

        double area = 0.5 * polygon_newell_normal(pts).norm();
        p.faceNormals.push_back(nrm);
        p.faceAreas.push_back(area);
        p.faceCentroids.push_back(faceCentroid);

        for (std::size_t i = 0; i < idx.size(); ++i) {
            int a = idx[i], b = idx[(i + 1) % idx.size()];
            edgeFaces[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(f));
        }
    }

    for (int c : vertexFaceCount)
        if (c < 3) throw ValidationError("vertex is not extreme (fewer than 3 incident faces)");

    for (const auto& [key, fs] : edgeFaces) {
        if (fs.size() != 2) throw ValidationError("edge is not shared by exactly two faces");
        p.edges.push_back({key.first, key.second, fs[0], fs[1]});
        // adjacent coplanar faces would make the edge angle degenerate
        if (p.faceNormals[fs[0]].cross(p.faceNormals[fs[1]]).norm() <= kGeomTol3d)
            throw ValidationError("adjacent faces are coplanar");
    }

    const long V = nv, E = static_cast<long>(p.edges.size()), F = static_cast<long>(p.faces.size());
    if (V - E + F != 2) throw ValidationError("polytope is not a closed surface (Euler check)");
    return p;
}

double SupportBody2::h(double theta) const {
    double s = a0;
    for (std::size_t m = 1; m <= cosCoeffs.size(); ++m) s += cosCoeffs[m - 1] * std::cos(m * theta);
    for (std::size_t m = 1; m <= sinCoeffs.size(); ++m) s += sinCoeffs[m - 1] * std::sin(m * theta);
    return s;
}

double SupportBody2::dh(double theta) const {
    double s = 0;
    for (std::size_t m = 1; m <= cosCoeffs.size(); ++m) s -= m * cosCoeffs[m - 1] * std::sin(m * theta);
    for (std::size_t m = 1; m <= sinCoeffs.size(); ++m) s += m * sinCoeffs[m - 1] * std::cos(m * theta);
    return s;
}

double SupportBody2::ddh(double theta) const {
    double s = 0;
    for (std::size_t m = 1; m <= cosCoeffs.size(); ++m)
        s -= m * m * cosCoeffs[m - 1] * std::cos(m * theta);
    for (std::size_t m = 1; m <= sinCoeffs.size(); ++m)
        s -= m * m * sinCoeffs[m - 1] * std::sin(m * theta);
    return s;
}

Vec2 SupportBody2::boundary_point(double theta) const {
    const Vec2 u(std::cos(theta), std::sin(theta));
    const Vec2 uPerp(-u.y(), u.x());
    return h(theta) * u + dh(theta) * uPerp;
}

SupportBody2 make_support_body(double a0, std::vector<double> cosCoeffs,
                               std::vector<double> sinCoeffs) {
    SupportBody2 b{a0, std::move(cosCoeffs), std::move(sinCoeffs)};
    if (b.degree() > kMaxHarmonicDegree)
        throw ValidationError("support body harmonic degree exceeds 64");
    for (int i = 0; i < kConvexityGrid; ++i) {
        const double theta = kTwoPi * i / kConvexityGrid;
        if (!(b.curvature_radius(theta) > 0.0))
            throw ValidationError("support body is not strictly convex (h + h'' <= 0)");
    }
    return b;
}

int dimension(const ConvexBody& body) {
    return std::visit(
        [](const auto& b) -> int {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polytope3> || std::is_same_v<T, Ball3>)
                return 3;
            else
                return 2;
        },
        body);
}

Mat2 rotation_matrix2(double phi) {
    Mat2 R;
    R << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    return R;
}

RigidMotion2 rotation2(double phi) { return RigidMotion2{rotation_matrix2(phi), Vec2::Zero()}; }

Polygon transformed(const Polygon& p, const RigidMotion2& g) {
    Polygon out;
    out.vertices.reserve(p.vertices.size());
    for (const Vec2& v : p.vertices) out.vertices.push_back(g(v));
    return out;
}

SupportBody2 transformed(const SupportBody2& b, const RigidMotion2& g) {
    // rotation angle of g.R
    const double phi = std::atan2(g.R(1, 0), g.R(0, 0));
    SupportBody2 out;
    out.a0 = b.a0;
    const std::size_t deg = static_cast<std::size_t>(b.degree());
    out.cosCoeffs.assign(deg, 0.0);
    out.sinCoeffs.assign(deg, 0.0);
    // h_out(t) = h(t - phi)
    for (std::size_t m = 1; m <= deg; ++m) {
        const double am = m <= b.cosCoeffs.size() ? b.cosCoeffs[m - 1] : 0.0;
        const double bm = m <= b.sinCoeffs.size() ? b.sinCoeffs[m - 1] : 0.0;
        const double c = std::cos(m * phi), s = std::sin(m * phi);
        out.cosCoeffs[m - 1] = am * c - bm * s;
        out.sinCoeffs[m - 1] = am * s + bm * c;
    }
    // translation adds <t, u(theta)>
    if (!out.cosCoeffs.empty()) {
        out.cosCoeffs[0] += g.t.x();
        out.sinCoeffs[0] += g.t.y();
    } else if (g.t.norm() != 0.0) {
        out.cosCoeffs = {g.t.x()};
        out.sinCoeffs = {g.t.y()};
    }
    return out;
}

Ball2 transformed(const Ball2& b, const RigidMotion2& g) { return Ball2{g(b.center), b.radius}; }

Polytope3 transformed(const Polytope3& p, const RigidMotion3& g) {
    std::vector<Vec3> verts;
    verts.reserve(p.vertices.size());
    for (const Vec3& v : p.vertices) verts.push_back(g(v));
    return make_polytope3(std::move(verts), p.faces);
}

Ball3 transformed(const Ball3& b, const RigidMotion3& g) { return Ball3{g(b.center), b.radius}; }

ConvexBody point_reflected(const ConvexBody& body) {
    return std::visit(
        [](const auto& b) -> ConvexBody {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polygon>) {
                // negation is the rotation by pi in 2D; orientation is preserved
                Polygon out;
                out.vertices.reserve(b.vertices.size());
                for (const Vec2& v : b.vertices) out.vertices.push_back(-v);
                return out;
            } else if constexpr (std::is_same_v<T, SupportBody2>) {
                // h_{-K}(t) = h_K(t + pi): degree-m coefficients flip by (-1)^m
                SupportBody2 out = b;
                for (std::size_t m = 1; m <= out.cosCoeffs.size(); ++m)
                    if (m % 2 == 1) out.cosCoeffs[m - 1] = -out.cosCoeffs[m - 1];
                for (std::size_t m = 1; m <= out.sinCoeffs.size(); ++m)
                    if (m % 2 == 1) out.sinCoeffs[m - 1] = -out.sinCoeffs[m - 1];
                return out;
            } else if constexpr (std::is_same_v<T, Ball2> || std::is_same_v<T, Ball3>) {
                auto out = b;
                out.center = -out.center;
                return out;
            } else {
                static_assert(std::is_same_v<T, Polytope3>);
                std::vector<Vec3> verts;
                verts.reserve(b.vertices.size());
                for (const Vec3& v : b.vertices) verts.push_back(-v);
                // negation reverses orientation in 3D; flip each face
                std::vector<std::vector<int>> faces = b.faces;
                for (auto& f : faces) std::reverse(f.begin(), f.end());
                return make_polytope3(std::move(verts), std::move(faces));
            }
        },
        body);
}

double circumradius_bound(const ConvexBody& body) {
    return std::visit(
        [](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polygon>) {
                double r = 0;
                for (const Vec2& v : b.vertices) r = std::max(r, v.norm());
                return r;
            } else if constexpr (std::is_same_v<T, SupportBody2>) {
                double r = std::abs(b.a0);
                for (std::size_t m = 1; m <= static_cast<std::size_t>(b.degree()); ++m) {
                    const double am = m <= b.cosCoeffs.size() ? b.cosCoeffs[m - 1] : 0.0;
                    const double bm = m <= b.sinCoeffs.size() ? b.sinCoeffs[m - 1] : 0.0;
                    r += std::hypot(am, bm);
                }
                return r;
            } else if constexpr (std::is_same_v<T, Ball2> || std::is_same_v<T, Ball3>) {
                return b.center.norm() + b.radius;
            } else {
                static_assert(std::is_same_v<T, Polytope3>);
                double r = 0;
                for (const Vec3& v : b.vertices) r = std::max(r, v.norm());
                return r;
            }
        },
        body);
}

}  // namespace kinemetry
