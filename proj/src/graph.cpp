#include "throttlekit/graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace throttle {

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (n < 0) throw PreconditionError("negative vertex count");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
    throw PreconditionError("label table size does not match vertex count");
  Graph g;
  g.adj_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += nbrs.size();
  }
  g.edge_count_ = degree_sum / 2;
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_[static_cast<std::size_t>(v)];
}

VertexSet make_vertex_set(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

VertexSet all_vertices(const Graph& g) {
  VertexSet all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  return all;
}

RootedTree::RootedTree(Graph tree, Vertex root) : tree_(std::move(tree)), root_(root) {
  const Vertex n = tree_.order();
  if (root < 0 || root >= n) throw PreconditionError("root " + std::to_string(root) + " out of range");
  if (tree_.edge_count() != static_cast<std::size_t>(n - 1))
    throw PreconditionError("rooted tree needs exactly n-1 edges");
  parent_.assign(static_cast<std::size_t>(n), -2);
  children_.assign(static_cast<std::size_t>(n), {});
  parent_[static_cast<std::size_t>(root)] = -1;
  order_.reserve(static_cast<std::size_t>(n));
  order_.push_back(root);
  for (std::size_t head = 0; head < order_.size(); ++head) {
    Vertex u = order_[head];
    for (Vertex w : tree_.neighbors(u)) {
      if (parent_[static_cast<std::size_t>(w)] != -2) continue;
      parent_[static_cast<std::size_t>(w)] = u;
      children_[static_cast<std::size_t>(u)].push_back(w);
      order_.push_back(w);
    }
  }
  if (order_.size() != static_cast<std::size_t>(n)) throw PreconditionError("rooted tree is not connected");
}

std::optional<Vertex> RootedTree::parent(Vertex v) const {
  Vertex p = parent_[static_cast<std::size_t>(v)];
  if (p < 0) return std::nullopt;
  return p;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members) {
  InducedSubgraph out;
  out.mapping.assign(members.begin(), members.end());
  // Small subsets of large graphs use a hash map instead of an n-sized table.
  const bool sparse = members.size() * 16 < static_cast<std::size_t>(g.order());
  std::vector<Vertex> table(sparse ? 0 : static_cast<std::size_t>(g.order()), -1);
  std::unordered_map<Vertex, Vertex> hashed;
  auto local = [&](Vertex v) -> Vertex {
    if (!sparse) return table[static_cast<std::size_t>(v)];
    auto it = hashed.find(v);
    return it == hashed.end() ? -1 : it->second;
  };
  for (std::size_t i = 0; i < out.mapping.size(); ++i) {
    Vertex v = out.mapping[i];
    if (v < 0 || v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    if (local(v) != -1) throw PreconditionError("duplicate vertex in subset");
    if (sparse) hashed.emplace(v, static_cast<Vertex>(i));
    else table[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.mapping.size(); ++i)
    for (Vertex w : g.neighbors(out.mapping[i])) {
      Vertex j = local(w);
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Vertex v : out.mapping) labels.push_back(g.label(v));
  out.graph = Graph::from_edges(static_cast<Vertex>(out.mapping.size()), edges, std::move(labels));
  return out;
}

}  // namespace throttle
