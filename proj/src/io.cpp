#include "kinemetry/io.hpp"

#include <fstream>

namespace kinemetry {

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

double number_at(const json& j, const char* where) {
    if (!j.is_number()) throw ParseError(std::string(where) + ": expected a number");
    return j.get<double>();
}

}  // namespace

json body_to_json(const ConvexBody& body) {
    return std::visit(
        [](const auto& b) -> json {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polygon>) {
                json verts = json::array();
                for (const Vec2& v : b.vertices) verts.push_back({v.x(), v.y()});
                return {{"type", "polygon"}, {"vertices", verts}};
            } else if constexpr (std::is_same_v<T, SupportBody2>) {
                return {{"type", "support2d"},
                        {"a0", b.a0},
                        {"cos", b.cosCoeffs},
                        {"sin", b.sinCoeffs}};
            } else if constexpr (std::is_same_v<T, Ball2>) {
                return {{"type", "ball"},
                        {"dim", 2},
                        {"center", {b.center.x(), b.center.y()}},
                        {"radius", b.radius}};
            } else if constexpr (std::is_same_v<T, Ball3>) {
                return {{"type", "ball"},
                        {"dim", 3},
                        {"center", {b.center.x(), b.center.y(), b.center.z()}},
                        {"radius", b.radius}};
            } else {
                static_assert(std::is_same_v<T, Polytope3>);
                json verts = json::array();
                for (const Vec3& v : b.vertices) verts.push_back({v.x(), v.y(), v.z()});
                return {{"type", "polytope3"}, {"vertices", verts}, {"faces", b.faces}};
            }
        },
        body);
}

ConvexBody body_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError("body: missing \"type\"");
    const std::string type = j["type"].get<std::string>();
    try {
        if (type == "polygon") {
            std::vector<Vec2> verts;
            for (const auto& v : j.at("vertices"))
                verts.emplace_back(number_at(v.at(0), "vertex"), number_at(v.at(1), "vertex"));
            return make_polygon(std::move(verts));
        }
        if (type == "polytope3") {
            std::vector<Vec3> verts;
            for (const auto& v : j.at("vertices"))
                verts.emplace_back(number_at(v.at(0), "vertex"), number_at(v.at(1), "vertex"),
                                   number_at(v.at(2), "vertex"));
            std::vector<std::vector<int>> faces = j.at("faces").get<std::vector<std::vector<int>>>();
            return make_polytope3(std::move(verts), std::move(faces));
        }
        if (type == "ball") {
            const int dim = j.at("dim").get<int>();
            const auto& c = j.at("center");
            const double r = number_at(j.at("radius"), "radius");
            if (dim == 2) return make_ball<2>(Vec2(number_at(c.at(0), "center"), number_at(c.at(1), "center")), r);
            if (dim == 3)
                return make_ball<3>(Vec3(number_at(c.at(0), "center"), number_at(c.at(1), "center"),
                                         number_at(c.at(2), "center")),
                                    r);
            throw ParseError("ball: dim must be 2 or 3");
        }
        if (type == "support2d") {
            return make_support_body(number_at(j.at("a0"), "a0"),
                                     j.value("cos", std::vector<double>{}),
                                     j.value("sin", std::vector<double>{}));
        }
    } catch (const json::exception& e) {
        throw ParseError("body (" + type + "): " + e.what());
    }
    throw ParseError("body: unknown type \"" + type + "\"");
}

ConvexBody load_body(const std::string& path) { return body_from_json(read_json_file(path)); }

void save_body(const ConvexBody& body, const std::string& path) {
    write_json_file(body_to_json(body), path);
}

json region_to_json(const SphereRegion& region) {
    switch (region.kind()) {
        case SphereRegion::Kind::Full:
            return {{"type", "full"}};
        case SphereRegion::Kind::Arcs: {
            json arcs = json::array();
            for (const Arc& a : region.arc_list()) arcs.push_back({a.lo, a.hi});
            return {{"type", "arcs"}, {"arcs", arcs}};
        }
        case SphereRegion::Kind::Caps: {
            json caps = json::array();
            for (const Cap& c : region.cap_list())
                caps.push_back({{"axis", {c.axis.x(), c.axis.y(), c.axis.z()}},
                                {"angle", c.halfAngle}});
            return {{"type", "caps"}, {"caps", caps}};
        }
    }
    throw ParseError("region: unknown kind");
}

SphereRegion region_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError("region: missing \"type\"");
    const std::string type = j["type"].get<std::string>();
    try {
        if (type == "full") return SphereRegion::full();
        if (type == "arcs") {
            std::vector<Arc> arcs;
            for (const auto& a : j.at("arcs"))
                arcs.push_back({number_at(a.at(0), "arc"), number_at(a.at(1), "arc")});
            return SphereRegion::arcs(std::move(arcs));
        }
        if (type == "caps") {
            std::vector<Cap> caps;
            for (const auto& c : j.at("caps")) {
                const auto& ax = c.at("axis");
                caps.push_back({Vec3(number_at(ax.at(0), "axis"), number_at(ax.at(1), "axis"),
                                     number_at(ax.at(2), "axis")),
                                number_at(c.at("angle"), "angle")});
            }
            return SphereRegion::caps(std::move(caps));
        }
    } catch (const json::exception& e) {
        throw ParseError("region (" + type + "): " + e.what());
    }
    throw ParseError("region: unknown type \"" + type + "\"");
}

SphereRegion load_region(const std::string& path) {
    return region_from_json(read_json_file(path));
}

void save_region(const SphereRegion& region, const std::string& path) {
    write_json_file(region_to_json(region), path);
}

namespace {

std::string family_name(Family f) {
    switch (f) {
        case Family::Mu:
            return "mu";
        case Family::Delta:
            return "delta";
        case Family::N:
            return "N";
        case Family::B:
            break;
    }
    throw ParseError("tensor: B-family symbols are not serialized; convert to Delta/N first");
}

Family family_from_name(const std::string& s, const std::string& where) {
    if (s == "mu") return Family::Mu;
    if (s == "delta") return Family::Delta;
    if (s == "N") return Family::N;
    throw ParseError(where + ": unknown family \"" + s + "\"");
}

json coeff_to_json(const LambdaPiPoly& c) {
    json out = json::array();
    for (const auto& [key, r] : c.terms()) {
        out.push_back({{"num", r.num().to_decimal()},
                       {"den", r.den().to_decimal()},
                       {"halfpi", key.second},
                       {"lambda", key.first}});
    }
    return out;
}

LambdaPiPoly coeff_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": \"coeff\" must be an array");
    LambdaPiPoly out;
    for (const auto& t : j) {
        Rational r;
        try {
            r = Rational::from_strings(t.at("num").get<std::string>(),
                                       t.at("den").get<std::string>());
        } catch (const json::exception& e) {
            throw ParseError(where + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ": malformed rational: " + e.what());
        }
        const int lambda = t.value("lambda", 0);
        const int halfpi = t.value("halfpi", 0);
        if (lambda < 0) throw ParseError(where + ": negative lambda degree");
        out += LambdaPiPoly::monomial(r, lambda, halfpi);
    }
    return out;
}

}  // namespace

json tensor_to_json(const KinTensor& T) {
    json terms = json::array();
    for (const auto& [key, c] : T.terms) {
        terms.push_back({{"k", key.first.k},
                         {"q", key.first.q},
                         {"family", family_name(key.first.family)},
                         {"k2", key.second.k},
                         {"q2", key.second.q},
                         {"family2", family_name(key.second.family)},
                         {"coeff", coeff_to_json(c)}});
    }
    return {{"n", T.n},
            {"slots",
             {T.slot1 == KinTensor::Slot::Val ? "val" : "area",
              T.slot2 == KinTensor::Slot::Val ? "val" : "area"}},
            {"terms", terms}};
}

KinTensor tensor_from_json(const json& j) {
    KinTensor T;
    try {
        T.n = j.at("n").get<int>();
        if (T.n < 1) throw ParseError("tensor: n must be >= 1");
        const auto slots = j.at("slots").get<std::vector<std::string>>();
        if (slots.size() != 2) throw ParseError("tensor: exactly two slots expected");
        auto parse_slot = [](const std::string& s) {
            if (s == "val") return KinTensor::Slot::Val;
            if (s == "area") return KinTensor::Slot::Area;
            throw ParseError("tensor: unknown slot \"" + s + "\"");
        };
        T.slot1 = parse_slot(slots[0]);
        T.slot2 = parse_slot(slots[1]);

        std::size_t n = 0;
        for (const auto& term : j.at("terms")) {
            const std::string where = "term " + std::to_string(n++);
            const BasisIndex i{term.at("k").get<int>(), term.at("q").get<int>(),
                               family_from_name(term.at("family").get<std::string>(), where)};
            const BasisIndex k{term.at("k2").get<int>(), term.at("q2").get<int>(),
                               family_from_name(term.at("family2").get<std::string>(), where)};
            const LambdaPiPoly coeff = coeff_from_json(term.at("coeff"), where);
            try {
                T.add(i, k, coeff);
            } catch (const ValidationError& e) {
                throw ParseError(where + ": index out of range: " + e.what());
            }
            if (T.slot1 == KinTensor::Slot::Val && T.slot2 == KinTensor::Slot::Val &&
                i.k + k.k != 2 * T.n)
                throw ParseError(where + ": degree pairing violated (k + k2 != 2n)");
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("tensor: ") + e.what());
    }
    return T;
}

KinTensor load_tensor(const std::string& path) { return tensor_from_json(read_json_file(path)); }

void save_tensor(const KinTensor& T, const std::string& path) {
    write_json_file(tensor_to_json(T), path);
}

}  // namespace kinemetry
