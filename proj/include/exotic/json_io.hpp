#ifndef EXOTIC_JSON_IO_HPP
#define EXOTIC_JSON_IO_HPP

#include "exotic/correspondence.hpp"

#include <json.hpp>

namespace exotic {

using nlohmann::json;

// Matrix encoding: {"rows":r,"cols":c,"entries":["num/den",...]} row-major,
// rationals as "a/b" or "a".
json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j); // throws std::invalid_argument on bad shape

// A subspace is encoded by its canonical basis matrix; decoding accepts any
// spanning rows and canonicalizes.
json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j);

json partition_to_json(const Partition& p); // integer array
json ambient_to_json(const Ambient& amb);   // {"p":..,"q":..,"k":..}
Ambient ambient_from_json(const json& j);

// {"p","q","k","r","s","type":"I|II0|IIstar|III"} -- type is the refined one.
json label_to_json(const ExoticOrbitLabel& lab);

// {"p","q","k","n1","n2","ell","mark"}
json tableau_to_json(const MarkedTableau& t);

// Tagged inputs for the classify command:
//   {"kind":"exotic_point","p","q","k","L":matrix,"a":matrix,"b":matrix}
//   {"kind":"flag_pair","p","q","k","W":matrix,"L":matrix}
ExoticPoint exotic_point_from_json(const json& j);
FlagPair flag_pair_from_json(const json& j);

json exotic_point_to_json(const ExoticPoint& pt);
json flag_pair_to_json(const FlagPair& fp);

// {"ambient":{...},"entries":[{"tableau":{...},"label":{...},"lambda":[..],
//  "witness":{"x":...,"W":...,"L":...}}],"bijective":bool}
json table_to_json(const CorrespondenceTable& table);

} // namespace exotic

#endif
