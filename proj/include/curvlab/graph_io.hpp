#pragma once

#include "curvlab/graph.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace curvlab {

// graph6 (McKay). The optional ">>graph6<<" header and trailing whitespace are
// accepted on decode; encode never writes the header.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

// {"n": int, "edges": [[u,v],...], "labels": [..] (optional)}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Dispatches on extension: ".json" is the edge list, anything else graph6.
Graph read_graph(const std::filesystem::path& path);
void write_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace curvlab
