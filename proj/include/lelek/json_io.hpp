#pragma once

#include <json.hpp>

#include "lelek/invlim.hpp"
#include "lelek/orbit.hpp"
#include "lelek/search.hpp"

namespace lelek {

using Json = nlohmann::ordered_json;

// Wire formats.  All numeric values travel as exact lowest-terms rational
// strings; nothing floating crosses this boundary.
//
//   slope pair   {"r":"1/2","rho":"3"}
//   word         {"prefix":["R","P"],"tail":{"kind":"const-r"}}
//                tail kinds: const-r | const-p | periodic (data: letters)
//                | climb (data: start index)
//   fan point    {"x":"27/64","word":...}
//   cylinder     {"depth":3,"u1":["2/5","11/25"],"word":["R","P"]}
//   program      {"blocks":[{"bridge":{"dk":6,"dl":3}},{"traverse":0}],
//                 "visits":[[0,8]]}
//   invlim point {"kind":"vertex"} | {"kind":"regular","x":...,"a":...,"c":...}

Json slope_pair_to_json(const SlopePair& sp);
SlopePair slope_pair_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

Json fan_point_to_json(const FanPoint& p);
FanPoint fan_point_from_json(const Json& j);

Json cylinder_to_json(const Cylinder& c);
Cylinder cylinder_from_json(const SlopePair& sp, const Json& j);
std::vector<Cylinder> cylinders_from_json(const SlopePair& sp, const Json& j);

Json monomial_to_json(const SlopePair& sp, const Monomial& m);

Json program_to_json(const OrbitProgram& p);
// Traverse blocks carry only the cylinder index on the wire; the letters
// are rebound from the cylinder list.
OrbitProgram program_from_json(const SlopePair& sp, const Json& j,
                               const std::vector<Cylinder>& cyls);

Json certificate_to_json(const VisitCertificate& cert);
Json certificates_to_json(const std::vector<VisitCertificate>& certs);

Json invlim_point_to_json(const InvLimPoint& p);
InvLimPoint invlim_point_from_json(const Json& j);

Json density_profile_to_json(const SlopePair& sp, const DensityProfile& profile);

Json endpoint_class_to_json(const EndpointClass& c);

}  // namespace lelek
