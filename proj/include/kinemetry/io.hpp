#pragma once

#include <json.hpp>
#include <string>

#include "kinemetry/bodies.hpp"
#include "kinemetry/hermitian.hpp"
#include "kinemetry/region.hpp"

namespace kinemetry {

// Body schema:
//   {"type":"polygon","vertices":[[x,y],...]}
//   {"type":"polytope3","vertices":[[x,y,z],...],"faces":[[i,...],...]}
//   {"type":"ball","dim":2|3,"center":[...],"radius":r}
//   {"type":"support2d","a0":r,"cos":[...],"sin":[...]}
nlohmann::json body_to_json(const ConvexBody& body);
ConvexBody body_from_json(const nlohmann::json& j);
ConvexBody load_body(const std::string& path);
void save_body(const ConvexBody& body, const std::string& path);

// Region schema:
//   {"type":"arcs","arcs":[[lo,hi],...]} | {"type":"full"} |
//   {"type":"caps","caps":[{"axis":[x,y,z],"angle":a},...]}
nlohmann::json region_to_json(const SphereRegion& region);
SphereRegion region_from_json(const nlohmann::json& j);
SphereRegion load_region(const std::string& path);
void save_region(const SphereRegion& region, const std::string& path);

// Tensor schema:
//   {"n":N,"slots":["val"|"area","val"|"area"],
//    "terms":[{"k":..,"q":..,"family":"mu"|"delta"|"N",
//              "k2":..,"q2":..,"family2":..,
//              "coeff":[{"num":"...","den":"...","halfpi":int,"lambda":int},...]},...]}
// Rationals are decimal strings so arbitrary precision survives the round
// trip.  Val/Val tensors must be degree-paired (k + k2 = 2n).
nlohmann::json tensor_to_json(const KinTensor& T);
KinTensor tensor_from_json(const nlohmann::json& j);
KinTensor load_tensor(const std::string& path);
void save_tensor(const KinTensor& T, const std::string& path);

}  // namespace kinemetry
