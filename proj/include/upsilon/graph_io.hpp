#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "upsilon/graph.hpp"

namespace upsilon {

/// Edge-list text: a header line "n m", then m lines "u v" with u < v.
/// Lines starting with '#' and blank lines are ignored on input; output lists
/// edges in lexicographic order so that write(read(x)) == x byte for byte.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

/// {"n": ..., "edges": [[u, v], ...]}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

void save_edge_list(const std::string& path, const Graph& g);
Graph load_edge_list(const std::string& path);
/// Dispatches on extension: ".json" reads the JSON form, anything else the edge list.
Graph load_graph(const std::string& path);

} // namespace upsilon
