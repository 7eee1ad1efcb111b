#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "hypertrees/big_count.hpp"
#include "hypertrees/bipartite_codec.hpp"
#include "hypertrees/core_model.hpp"
#include "hypertrees/hypertree_codec.hpp"
#include "hypertrees/oracle.hpp"

namespace hypertrees {

/// Keys are written in insertion order so the wire format matches the
/// documented layout byte for byte.
using Json = nlohmann::ordered_json;

// Readers accept unsorted input and canonicalize; writers emit canonical
// form. Schema violations throw MalformedInput.

Json to_json(const Hypergraph& graph);             // {"n":..,"edges":[[..],..]}
Json to_json(const Hypertree& tree);
Json to_json(const HypertreeCode& code);           // {"n":..,"partition":[[..],..],"word":[..]}
Json to_json(const BipartiteTree& tree);           // {"a":..,"b":..,"edges":[[i,j],..]}
Json to_json(const BipartiteCode& code);           // {"a":..,"b":..,"w":[..],"wprime":[..]}
Json to_json(const Probability& p);                // {"num":"..","den":".."}
Json to_json(const EnumerationReport& report);

Hypergraph hypergraph_from_json(const Json& json);
HypertreeCode hypertree_code_from_json(const Json& json);
BipartiteTree bipartite_tree_from_json(const Json& json);
BipartiteCode bipartite_code_from_json(const Json& json);

/// Parses text, mapping syntax errors to MalformedInput.
Json parse_json(const std::string& text);

/// Compact single-line serialization.
std::string dump(const Json& json);

}  // namespace hypertrees
