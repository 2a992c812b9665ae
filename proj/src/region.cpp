#include "kinemetry/region.hpp"

#include <algorithm>
#include <cmath>

namespace kinemetry {

namespace {

constexpr double kArcTol = 1e-12;

}  // namespace

std::vector<Arc> normalize_arcs(std::vector<Arc> arcs) {
    std::vector<Arc> out;
    for (const Arc& a : arcs) {
        double len = a.hi - a.lo;
        if (!(len > 0.0) || len > kTwoPi + kArcTol)
            throw ValidationError("arc length must lie in (0, 2*pi]");
        if (len >= kTwoPi - kArcTol) {
            if (arcs.size() > 1)
                throw ValidationError("full-circle arc cannot be combined with others");
            return {{0.0, kTwoPi}};
        }
        double lo = wrap_angle(a.lo);
        double hi = lo + len;
        if (hi > kTwoPi) {
            out.push_back({lo, kTwoPi});
            out.push_back({0.0, hi - kTwoPi});
        } else {
            out.push_back({lo, hi});
        }
    }
    std::sort(out.begin(), out.end(), [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        if (out[i].hi > out[i + 1].lo + kArcTol)
            throw ValidationError("arcs overlap with positive measure");
    }
    return out;
}

SphereRegion SphereRegion::arcs(std::vector<Arc> arcs) {
    SphereRegion r(Kind::Arcs);
    r.arcs_ = normalize_arcs(std::move(arcs));
    return r;
}

SphereRegion SphereRegion::caps(std::vector<Cap> caps) {
    SphereRegion r(Kind::Caps);
    for (auto& c : caps) {
        if (std::abs(c.axis.norm() - 1.0) > kUnitTol)
            throw ValidationError("cap axis must be a unit vector");
        if (!(c.halfAngle > 0.0) || c.halfAngle > kPi + kArcTol)
            throw ValidationError("cap half-angle must lie in (0, pi]");
    }
    r.caps_ = std::move(caps);
    return r;
}

bool SphereRegion::contains_angle(double theta) const {
    switch (kind_) {
        case Kind::Full:
            return true;
        case Kind::Arcs: {
            double t = wrap_angle(theta);
            for (const Arc& a : arcs_) {
                if (t >= a.lo - kArcTol && t <= a.hi + kArcTol) return true;
            }
            // wrapped representative near 2*pi
            for (const Arc& a : arcs_) {
                if (t + kTwoPi >= a.lo - kArcTol && t + kTwoPi <= a.hi + kArcTol) return true;
            }
            return false;
        }
        case Kind::Caps:
            throw UnsupportedError("S^2 cap region queried with an S^1 angle");
    }
    return false;
}

bool SphereRegion::contains_dir(const Vec3& u) const {
    switch (kind_) {
        case Kind::Full:
            return true;
        case Kind::Caps: {
            for (const Cap& c : caps_) {
                double cosang = std::clamp(c.axis.dot(u), -1.0, 1.0);
                if (std::acos(cosang) <= c.halfAngle + kArcTol) return true;
            }
            return false;
        }
        case Kind::Arcs:
            throw UnsupportedError("S^1 arc region queried with an S^2 direction");
    }
    return false;
}

double SphereRegion::circle_measure() const {
    if (kind_ == Kind::Full) return kTwoPi;
    if (kind_ == Kind::Arcs) return arcs_length(arcs_);
    throw UnsupportedError("S^2 region has no S^1 measure");
}

double SphereRegion::sphere_measure() const {
    if (kind_ == Kind::Full) return 4.0 * kPi;
    if (kind_ == Kind::Caps) {
        for (std::size_t i = 0; i < caps_.size(); ++i)
            for (std::size_t j = i + 1; j < caps_.size(); ++j) {
                double sep = std::acos(std::clamp(caps_[i].axis.dot(caps_[j].axis), -1.0, 1.0));
                if (sep < caps_[i].halfAngle + caps_[j].halfAngle - kArcTol)
                    throw UnsupportedError("overlapping caps have no closed-form measure here");
            }
        double s = 0;
        for (const Cap& c : caps_) s += kTwoPi * (1.0 - std::cos(c.halfAngle));
        return s;
    }
    throw UnsupportedError("S^1 region has no S^2 measure");
}

SphereRegion SphereRegion::rotated(double phi) const {
    if (kind_ == Kind::Full) return *this;
    if (kind_ != Kind::Arcs) throw UnsupportedError("angle rotation applies to S^1 regions");
    std::vector<Arc> moved;
    moved.reserve(arcs_.size());
    for (const Arc& a : arcs_) moved.push_back({a.lo + phi, a.hi + phi});
    return SphereRegion::arcs(std::move(moved));
}

SphereRegion SphereRegion::rotated(const Mat3& R) const {
    if (kind_ == Kind::Full) return *this;
    if (kind_ != Kind::Caps) throw UnsupportedError("matrix rotation applies to S^2 regions");
    std::vector<Cap> moved = caps_;
    for (Cap& c : moved) c.axis = R * c.axis;
    return SphereRegion::caps(std::move(moved));
}

SphereRegion SphereRegion::antipodal() const {
    switch (kind_) {
        case Kind::Full:
            return *this;
        case Kind::Arcs:
            return rotated(kPi);
        case Kind::Caps: {
            std::vector<Cap> moved = caps_;
            for (Cap& c : moved) c.axis = -c.axis;
            return SphereRegion::caps(std::move(moved));
        }
    }
    return *this;
}

std::vector<Arc> intersect_arcs(const std::vector<Arc>& a, const std::vector<Arc>& b) {
    std::vector<Arc> out;
    for (const Arc& x : a) {
        for (const Arc& y : b) {
            double lo = std::max(x.lo, y.lo);
            double hi = std::min(x.hi, y.hi);
            if (hi - lo > 0.0) out.push_back({lo, hi});
        }
    }
    std::sort(out.begin(), out.end(), [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
    return out;
}

std::vector<Arc> as_arcs(const SphereRegion& region) {
    if (region.kind() == SphereRegion::Kind::Full) return {{0.0, kTwoPi}};
    if (region.kind() == SphereRegion::Kind::Arcs) return region.arc_list();
    throw UnsupportedError("S^2 region used where an S^1 region is required");
}

}  // namespace kinemetry
