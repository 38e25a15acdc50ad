#pragma once

#include <vector>

#include "throttlekit/graph.hpp"

namespace throttle::detail {

struct Block {
  VertexSet vertices;
  std::size_t edge_count = 0;
};

/// Biconnected components with their edge counts, sorted by vertex set.
std::vector<Block> blocks_with_edges(const Graph& g);

}  // namespace throttle::detail
