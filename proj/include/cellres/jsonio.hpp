#pragma once

// JSON helpers shared by the CLI and the file formats. All integers are
// serialized as decimal strings so arbitrary precision survives the trip;
// rationals as "p/q". Key order is fixed (insertion order) so output is
// byte-stable.

#include <json.hpp>

#include "cellres/matrix.hpp"

namespace cellres {

using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);  // accepts numbers and decimal strings

Json rat_to_json(const Rat& v);  // "p" or "p/q"
Rat rat_from_json(const Json& j);

Json intvec_to_json(const IntVec& v);
IntVec intvec_from_json(const Json& j);

Json ratvec_to_json(const RatVec& v);
RatVec ratvec_from_json(const Json& j);

Json mat_to_json(const IntMat& m);  // {"rows", "cols", "entries"}
IntMat mat_from_json(const Json& j);

}  // namespace cellres
