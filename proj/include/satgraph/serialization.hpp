#ifndef SATGRAPH_SERIALIZATION_HPP
#define SATGRAPH_SERIALIZATION_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "satgraph/graph_map.hpp"
#include "satgraph/tower.hpp"

namespace satgraph {

using Json = nlohmann::ordered_json;

/// {"v": vertex_count, "edges": [[a, b], ...]} with a < b, sorted, loops implied.
Json graph_to_json(const FiniteGraph& g);
FiniteGraph graph_from_json(const Json& j);

/// Parent array: entry v is the image of source vertex v.
Json parent_array_to_json(const GraphMap& h);
GraphMap parent_array_from_json(const Json& j, GraphPtr source, GraphPtr target);

/// {"n", "seed", "levels", "bonds", "per_level_m"} in that order.
Json tower_to_json(const Tower& t);

/// Shape-only decode; throws MalformedInput. Invariants are left to verify_tower.
Tower tower_from_json(const Json& j);

/// Compact canonical text with a trailing newline.
std::string encode_tower(const Tower& t);
Tower decode_tower(const std::string& text);

void save_tower(const Tower& t, const std::filesystem::path& path);

/// Decodes and, when `verify` is set, re-validates every tower invariant
/// (throws InvariantViolation naming the violated invariant).
Tower load_tower(const std::filesystem::path& path, bool verify = true);

/// Graphviz text for one level; product vertices are labeled "(i,s)".
std::string export_dot(const Tower& t, std::size_t level);

}  // namespace satgraph

#endif  // SATGRAPH_SERIALIZATION_HPP
