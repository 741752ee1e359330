#pragma once

#include "json.hpp"
#include "tiltgraph/graph/graph.hpp"

namespace tiltgraph::graph {

/// Typed JSON encoding of attribute maps (sorted keys, round-trip exact for
/// all four scalar types). Shared by snapshot files and the JSON exporter.
nlohmann::json attrs_to_json(const AttrMap& attrs);
AttrMap attrs_from_json(const nlohmann::json& j);

} // namespace tiltgraph::graph
