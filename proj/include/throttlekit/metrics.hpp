#pragma once

#include <span>
#include <vector>

#include "throttlekit/graph.hpp"

namespace throttle {

inline constexpr int kUnreachable = -1;

/// BFS distances from `sources`; unreachable vertices get kUnreachable.
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources);
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// All-pairs distances, row-major n*n.
std::vector<int> distance_matrix(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Connected components, each sorted; components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// BFS spanning tree rooted at `root`, neighbors visited in increasing id.
RootedTree spanning_tree(const Graph& g, Vertex root);

struct CenterRadius {
  VertexSet centers;
  int radius = 0;
};

/// Minimum-eccentricity vertices of the subgraph induced by `within`.
/// Throws PreconditionError when that subgraph is empty or disconnected.
CenterRadius center_and_radius(const Graph& g, std::span<const Vertex> within);

/// Biconnected components as vertex sets. A bridge gives a 2-vertex block.
/// Isolated vertices produce no block.
std::vector<VertexSet> biconnected_blocks(const Graph& g);

/// True when every block is a single edge or a chordless cycle, i.e. each
/// block with m vertices has exactly m edges (m >= 3) or is a bridge.
bool is_cactus(const Graph& g);

}  // namespace throttle
