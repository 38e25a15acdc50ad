#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "throttlekit/graph.hpp"

namespace throttle {

enum class GraphFormat { edge_list, graph6 };

/// Parses one graph.
///
/// edge_list: one "u v" pair per line, whitespace separated; `#` starts a
/// comment; a line holding a single token declares an (optionally isolated)
/// vertex. Labels are arbitrary tokens, numbered 0.. in order of first
/// appearance and kept as the graph's label table.
///
/// graph6: the first non-empty line, with or without the `>>graph6<<` header.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Every graph6 line in `text`, in order.
std::vector<Graph> parse_graph6_all(std::string_view text);

/// Writes the graph so that `parse_graph(emit_edge_list(g), edge_list) == g`.
std::string emit_edge_list(const Graph& g);
std::string emit_graph6(const Graph& g);

/// Vertex labels are the graph's labels. `groups`, when non-empty, assigns a
/// cluster index to every vertex and is drawn as subgraph clusters.
std::string emit_dot(const Graph& g, const std::vector<int>& groups = {}, std::string_view name = "G");

GraphFormat format_from_path(std::string_view path);

}  // namespace throttle
