#ifndef GPI_JSON_IO_HPP
#define GPI_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "gpi/algebra.hpp"
#include "gpi/group.hpp"

namespace gpi {

using Json = nlohmann::json;

// Group document: {"name": str, "elements": [str], "table": [[int]]}.
Json group_to_json(const GroupPtr& g);
GroupPtr group_from_json(const Json& doc);

// Shorthand names accepted wherever a group document is: "trivial",
// "C<n>", "D<n>", "S<n>", and products like "C3xC3".
GroupPtr group_from_name(const std::string& name);

// Algebra document: {"m": int, "group": <doc or name>,
//   "basis": [{"name": str, "deg": str}], "unit": [scalars] | null,
//   "sc": [{"i": int, "j": int, "k": int, "c": scalar}]}.
Json algebra_to_json(const AlgebraPtr& a);
AlgebraPtr algebra_from_json(const Json& doc);

Json load_json_file(const std::string& path);

}  // namespace gpi

#endif
