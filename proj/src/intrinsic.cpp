#include "kinemetry/intrinsic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kinemetry {

double unit_ball_volume(int m) {
    // pi^(m/2) / Gamma(m/2 + 1)
    if (m < 0) throw ValidationError("unit_ball_volume: negative dimension");
    double v = 1.0;
    for (int k = m; k >= 2; k -= 2) v *= kTwoPi / k;
    if (m % 2 == 1) v *= 2.0;
    return v;
}

double polygon_area(const Polygon& p) {
    double s = 0;
    const auto& v = p.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        s += a.x() * b.y() - b.x() * a.y();
    }
    return 0.5 * s;
}

double polygon_perimeter(const Polygon& p) {
    double s = 0;
    const auto& v = p.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) s += (v[(i + 1) % v.size()] - v[i]).norm();
    return s;
}

double polytope_volume(const Polytope3& p) {
    double s = 0;
    for (std::size_t f = 0; f < p.faces.size(); ++f)
        s += p.faceAreas[f] * p.faceNormals[f].dot(p.faceCentroids[f]);
    return s / 3.0;
}

double polytope_surface(const Polytope3& p) {
    double s = 0;
    for (double a : p.faceAreas) s += a;
    return s;
}

double support_body_area(const SupportBody2& b) {
    double s = b.a0 * b.a0 * kPi;
    for (std::size_t m = 1; m <= static_cast<std::size_t>(b.degree()); ++m) {
        const double am = m <= b.cosCoeffs.size() ? b.cosCoeffs[m - 1] : 0.0;
        const double bm = m <= b.sinCoeffs.size() ? b.sinCoeffs[m - 1] : 0.0;
        s += 0.5 * kPi * (1.0 - static_cast<double>(m) * m) * (am * am + bm * bm);
    }
    return s;
}

namespace {

// Cyclic list of faces around a vertex, consecutive faces sharing an edge.
std::vector<int> faces_around_vertex(const Polytope3& p, int v) {
    std::vector<int> incident;
    for (std::size_t f = 0; f < p.faces.size(); ++f)
        if (std::find(p.faces[f].begin(), p.faces[f].end(), v) != p.faces[f].end())
            incident.push_back(static_cast<int>(f));
    if (incident.size() < 3) throw ValidationError("vertex has fewer than 3 incident faces");

    auto next_face = [&](int f) {
        const auto& idx = p.faces[static_cast<std::size_t>(f)];
        const std::size_t pos =
            static_cast<std::size_t>(std::find(idx.begin(), idx.end(), v) - idx.begin());
        const int vNext = idx[(pos + 1) % idx.size()];
        const int a = std::min(v, vNext), b = std::max(v, vNext);
        for (const auto& e : p.edges)
            if (e.v0 == a && e.v1 == b) return e.faceA == f ? e.faceB : e.faceA;
        throw ValidationError("edge lookup failed while walking a vertex");
    };

    std::vector<int> cycle{incident[0]};
    int f = incident[0];
    for (std::size_t step = 1; step < incident.size(); ++step) {
        f = next_face(f);
        cycle.push_back(f);
    }
    if (next_face(f) != cycle.front())
        throw ValidationError("faces around vertex do not close a cycle");
    return cycle;
}

// Girard excess of the convex spherical polygon with the given unit vertices.
double spherical_polygon_area(const std::vector<Vec3>& u) {
    const std::size_t m = u.size();
    double angleSum = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const Vec3& prev = u[(i + m - 1) % m];
        const Vec3& cur = u[i];
        const Vec3& next = u[(i + 1) % m];
        Vec3 tPrev = prev - prev.dot(cur) * cur;
        Vec3 tNext = next - next.dot(cur) * cur;
        const double np = tPrev.norm(), nn = tNext.norm();
        if (np <= kGeomTol3d || nn <= kGeomTol3d)
            throw ValidationError("degenerate spherical polygon at a vertex normal cone");
        angleSum += std::acos(std::clamp(tPrev.dot(tNext) / (np * nn), -1.0, 1.0));
    }
    return angleSum - static_cast<double>(m - 2) * kPi;
}

}  // namespace

double external_angle(const Polytope3& p, Feature feature, int index) {
    switch (feature) {
        case Feature::Facet:
            if (index < 0 || index >= static_cast<int>(p.faces.size()))
                throw ValidationError("facet index out of range");
            return 0.5;
        case Feature::Edge: {
            if (index < 0 || index >= static_cast<int>(p.edges.size()))
                throw ValidationError("edge index out of range");
            const auto& e = p.edges[static_cast<std::size_t>(index)];
            const double c =
                std::clamp(p.faceNormals[e.faceA].dot(p.faceNormals[e.faceB]), -1.0, 1.0);
            return std::acos(c) / kTwoPi;  // (pi - dihedral) / 2pi
        }
        case Feature::Vertex: {
            if (index < 0 || index >= static_cast<int>(p.vertices.size()))
                throw ValidationError("vertex index out of range");
            const std::vector<int> cycle = faces_around_vertex(p, index);
            std::vector<Vec3> normals;
            normals.reserve(cycle.size());
            for (int f : cycle) normals.push_back(p.faceNormals[static_cast<std::size_t>(f)]);
            return spherical_polygon_area(normals) / (4.0 * kPi);
        }
    }
    throw ValidationError("unknown feature");
}

IntrinsicVolumes intrinsic_volumes(const ConvexBody& body) {
    return std::visit(
        [](const auto& b) -> IntrinsicVolumes {
            using T = std::decay_t<decltype(b)>;
            IntrinsicVolumes out;
            if constexpr (std::is_same_v<T, Polygon>) {
                out.dim = 2;
                out.mu = {1.0, 0.5 * polygon_perimeter(b), polygon_area(b), 0.0};
            } else if constexpr (std::is_same_v<T, SupportBody2>) {
                out.dim = 2;
                out.mu = {1.0, kPi * b.a0, support_body_area(b), 0.0};
            } else if constexpr (std::is_same_v<T, Ball2> || std::is_same_v<T, Ball3>) {
                const int n = std::is_same_v<T, Ball2> ? 2 : 3;
                out.dim = n;
                double binom = 1.0;
                for (int i = 0; i <= n; ++i) {
                    out.mu[static_cast<std::size_t>(i)] = binom * unit_ball_volume(n) /
                                                          unit_ball_volume(n - i) *
                                                          std::pow(b.radius, i);
                    binom = binom * (n - i) / (i + 1);
                }
            } else {
                static_assert(std::is_same_v<T, Polytope3>);
                out.dim = 3;
                double mu1 = 0;
                for (std::size_t e = 0; e < b.edges.size(); ++e) {
                    const double len =
                        (b.vertices[static_cast<std::size_t>(b.edges[e].v1)] -
                         b.vertices[static_cast<std::size_t>(b.edges[e].v0)])
                            .norm();
                    mu1 += len * external_angle(b, Feature::Edge, static_cast<int>(e));
                }
                out.mu = {1.0, mu1, 0.5 * polytope_surface(b), polytope_volume(b)};
            }
            return out;
        },
        body);
}

namespace {

double edge_normal_angle(const Vec2& a, const Vec2& b) {
    const Vec2 e = b - a;
    return std::atan2(-e.x(), e.y());
}

// Antiderivative of h + h'' for a support body.
double curvature_antiderivative(const SupportBody2& b, double theta) {
    double s = b.a0 * theta;
    for (std::size_t m = 1; m <= static_cast<std::size_t>(b.degree()); ++m) {
        const double am = m <= b.cosCoeffs.size() ? b.cosCoeffs[m - 1] : 0.0;
        const double bm = m <= b.sinCoeffs.size() ? b.sinCoeffs[m - 1] : 0.0;
        const double md = static_cast<double>(m);
        s += (1.0 - md * md) / md * (am * std::sin(md * theta) - bm * std::cos(md * theta));
    }
    return s;
}

}  // namespace

double surface_measure_arcs(const ConvexBody& body, const std::vector<Arc>& arcs) {
    return std::visit(
        [&](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polygon>) {
                double s = 0;
                const auto& v = b.vertices;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    const Vec2& a = v[i];
                    const Vec2& c = v[(i + 1) % v.size()];
                    const double ang = wrap_angle(edge_normal_angle(a, c));
                    for (const Arc& arc : arcs) {
                        if ((ang >= arc.lo - 1e-12 && ang <= arc.hi + 1e-12) ||
                            (ang + kTwoPi >= arc.lo - 1e-12 && ang + kTwoPi <= arc.hi + 1e-12)) {
                            s += (c - a).norm();
                            break;
                        }
                    }
                }
                return s;
            } else if constexpr (std::is_same_v<T, SupportBody2>) {
                double s = 0;
                for (const Arc& arc : arcs)
                    s += curvature_antiderivative(b, arc.hi) - curvature_antiderivative(b, arc.lo);
                return s;
            } else if constexpr (std::is_same_v<T, Ball2>) {
                if (b.radius <= 0.0)
                    throw UnsupportedError("surface area measure needs a full-dimensional body");
                return b.radius * arcs_length(arcs);
            } else {
                throw UnsupportedError("arc regions apply to 2D bodies");
            }
        },
        body);
}

double surface_area_measure(const ConvexBody& body, const SphereRegion& U) {
    const int n = dimension(body);
    if (n == 2) return surface_measure_arcs(body, as_arcs(U));

    return std::visit(
        [&](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polytope3>) {
                double s = 0;
                for (std::size_t f = 0; f < b.faces.size(); ++f)
                    if (U.contains_dir(b.faceNormals[f])) s += b.faceAreas[f];
                return s;
            } else if constexpr (std::is_same_v<T, Ball3>) {
                if (b.radius <= 0.0)
                    throw UnsupportedError("surface area measure needs a full-dimensional body");
                return b.radius * b.radius * U.sphere_measure();
            } else {
                throw UnsupportedError("dimension mismatch");
            }
        },
        body);
}

double support_value(const Polygon& p, const Vec2& u) {
    double s = -std::numeric_limits<double>::infinity();
    for (const Vec2& v : p.vertices) s = std::max(s, v.dot(u));
    return s;
}

double support_value(const SupportBody2& b, const Vec2& u) {
    return b.h(std::atan2(u.y(), u.x()));
}

double support_value(const Ball2& b, const Vec2& u) { return b.center.dot(u) + b.radius; }

double support_value(const Polytope3& p, const Vec3& u) {
    double s = -std::numeric_limits<double>::infinity();
    for (const Vec3& v : p.vertices) s = std::max(s, v.dot(u));
    return s;
}

double support_value(const Ball3& b, const Vec3& u) { return b.center.dot(u) + b.radius; }

double support_eval(const ConvexBody& body, const Eigen::VectorXd& u) {
    if (std::abs(u.norm() - 1.0) > kUnitTol)
        throw ValidationError("support_eval direction must be a unit vector");
    const int n = dimension(body);
    if (u.size() != n) throw ValidationError("direction dimension does not match the body");
    if (n == 2) {
        const Vec2 d(u[0], u[1]);
        return std::visit(
            [&](const auto& b) -> double {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, Polygon> || std::is_same_v<T, SupportBody2> ||
                              std::is_same_v<T, Ball2>)
                    return support_value(b, d);
                else
                    throw ValidationError("dimension mismatch");
            },
            body);
    }
    const Vec3 d(u[0], u[1], u[2]);
    return std::visit(
        [&](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polytope3> || std::is_same_v<T, Ball3>)
                return support_value(b, d);
            else
                throw ValidationError("dimension mismatch");
        },
        body);
}

Polygon minkowski_sum(const Polygon& a, const Polygon& b) {
    validate(a);
    validate(b);

    auto bottom_index = [](const Polygon& p) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < p.vertices.size(); ++i) {
            const Vec2& v = p.vertices[i];
            const Vec2& w = p.vertices[best];
            if (v.y() < w.y() || (v.y() == w.y() && v.x() < w.x())) best = i;
        }
        return best;
    };

    // Edge vectors in counterclockwise order starting at the bottom-most
    // vertex; their polar angles increase monotonically from [0, pi).
    auto edge_fan = [&](const Polygon& p) {
        const std::size_t n = p.vertices.size();
        const std::size_t start = bottom_index(p);
        std::vector<Vec2> edges(n);
        std::vector<double> angles(n);
        double prev = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const Vec2& v0 = p.vertices[(start + k) % n];
            const Vec2& v1 = p.vertices[(start + k + 1) % n];
            edges[k] = v1 - v0;
            double ang = std::atan2(edges[k].y(), edges[k].x());
            if (ang < 0) ang += kTwoPi;
            while (k > 0 && ang < prev - 1e-12) ang += kTwoPi;
            angles[k] = ang;
            prev = ang;
        }
        return std::pair{edges, angles};
    };

    const auto [ea, aa] = edge_fan(a);
    const auto [eb, ab] = edge_fan(b);

    Polygon out;
    Vec2 cur = a.vertices[bottom_index(a)] + b.vertices[bottom_index(b)];
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        out.vertices.push_back(cur);
        if (j >= eb.size()) {
            cur += ea[i++];
        } else if (i >= ea.size()) {
            cur += eb[j++];
        } else if (std::abs(aa[i] - ab[j]) <= 1e-12) {
            cur += ea[i++] + eb[j++];  // parallel edges merge
        } else if (aa[i] < ab[j]) {
            cur += ea[i++];
        } else {
            cur += eb[j++];
        }
    }
    validate(out);
    return out;
}

}  // namespace kinemetry
