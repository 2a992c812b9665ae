#pragma once

#include <optional>
#include <vector>

#include "kinemetry/common.hpp"

namespace kinemetry {

// Closed arc [lo, hi] on S^1, angles in radians, 0 < hi - lo <= 2*pi.
struct Arc {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

// Spherical cap on S^2: unit axis and half-angle in (0, pi].
struct Cap {
    Vec3 axis = Vec3::UnitZ();
    double halfAngle = 0.0;
};

// Borel test region on the unit sphere: a finite union of closed arcs on S^1,
// or the full sphere, or a finite union of caps on S^2.  "Full" adapts to the
// dimension of the query it is used in.
class SphereRegion {
public:
    enum class Kind { Arcs, Full, Caps };

    static SphereRegion full() { return SphereRegion(Kind::Full); }
    static SphereRegion arcs(std::vector<Arc> arcs);
    static SphereRegion caps(std::vector<Cap> caps);
    static SphereRegion empty_arcs() { return SphereRegion(Kind::Arcs); }

    Kind kind() const { return kind_; }
    const std::vector<Arc>& arc_list() const { return arcs_; }
    const std::vector<Cap>& cap_list() const { return caps_; }

    bool contains_angle(double theta) const;  // S^1 query
    bool contains_dir(const Vec3& u) const;   // S^2 query

    // Total arc length on S^1 (Full -> 2*pi).
    double circle_measure() const;
    // Spherical Lebesgue measure on S^2; caps must be pairwise disjoint.
    double sphere_measure() const;

    SphereRegion rotated(double phi) const;    // S^1 regions
    SphereRegion rotated(const Mat3& R) const; // S^2 regions
    SphereRegion antipodal() const;

private:
    explicit SphereRegion(Kind k) : kind_(k) {}

    Kind kind_ = Kind::Full;
    std::vector<Arc> arcs_;  // normalized: lo in [0, 2*pi), sorted, disjoint
    std::vector<Cap> caps_;
};

// Intersection of two arc unions (inputs normalized as in SphereRegion).
std::vector<Arc> intersect_arcs(const std::vector<Arc>& a, const std::vector<Arc>& b);

// Splits arcs at 2*pi, sorts by lo, and verifies pairwise disjointness.
std::vector<Arc> normalize_arcs(std::vector<Arc> arcs);

inline double arcs_length(const std::vector<Arc>& arcs) {
    double s = 0;
    for (const auto& a : arcs) s += a.length();
    return s;
}

// Arc union for an S^1 region in concrete form (Full -> [0, 2*pi]).
std::vector<Arc> as_arcs(const SphereRegion& region);

}  // namespace kinemetry
