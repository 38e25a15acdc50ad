#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace throttle {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exact search would exceed the configured state budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error("state budget exceeded: need " + std::to_string(required) + " states, budget is " +
              std::to_string(budget)),
        required_(required),
        budget_(budget) {}
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Self-loops and out-of-range ids throw
  /// PreconditionError; repeated edges collapse to one.
  static Graph from_edges(Vertex n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  Vertex order() const noexcept { return static_cast<Vertex>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Original input label of `v`; defaults to the decimal id.
  std::string label(Vertex v) const;
  bool has_labels() const noexcept { return !labels_.empty(); }

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Sorted, duplicate-free set of vertex ids.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> members);
VertexSet all_vertices(const Graph& g);

/// A spanning tree view with parent links. Invariants are checked on
/// construction: `graph` must be a tree and `root` a vertex of it.
class RootedTree {
 public:
  RootedTree(Graph tree, Vertex root);

  const Graph& graph() const noexcept { return tree_; }
  Vertex root() const noexcept { return root_; }
  Vertex order() const noexcept { return tree_.order(); }
  /// Parent of `v`, or nullopt for the root.
  std::optional<Vertex> parent(Vertex v) const;
  std::span<const Vertex> children(Vertex v) const { return children_[static_cast<std::size_t>(v)]; }
  /// Vertices in BFS order from the root.
  std::span<const Vertex> bfs_order() const noexcept { return order_; }

 private:
  Graph tree_;
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> order_;
};

/// Induced subgraph on `members`; `mapping[i]` is the source id of local vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> mapping;
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members);

}  // namespace throttle
