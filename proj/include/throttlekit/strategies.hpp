#pragma once

#include <optional>
#include <string>
#include <vector>

#include "throttlekit/decomposition.hpp"
#include "throttlekit/graph.hpp"
#include "throttlekit/solvers.hpp"

namespace throttle {

enum class RobberKind { greedy_far, stationary, exact_best };

std::string to_string(RobberKind kind);
RobberKind robber_kind_from_string(const std::string& text);

/// greedy_far starts as far from the cops as possible and each round moves
/// to the closed neighbor maximizing its distance to the nearest cop (ties
/// to the lowest id). stationary never moves. exact_best plays a longest
/// evasion against the fixed cop strategy. `start` overrides the opening
/// vertex for every kind.
struct RobberPolicy {
  RobberKind kind = RobberKind::greedy_far;
  std::optional<Vertex> start;
};

struct PursuitStep {
  std::vector<Vertex> cops;
  Vertex robber = 0;
};

/// history[0] is the placement; history[t] holds positions at the end of
/// round t (after the cop move when round t captured).
struct PursuitTrace {
  int rounds = 0;
  std::vector<PursuitStep> history;
  bool captured = false;
  std::optional<int> region_of_capture;
};

/// One cop per region starts at the region center; every round each cop
/// steps along the tree path toward the robber.
PursuitTrace tree_pursuit(const Graph& tree, const CoverPlan& plan, const RobberPolicy& robber,
                          const SolverOptions& options = {});

/// Interval cover of a spider (or a path) with r = sqrt(4/3).
CoverPlan spider_cover(const Graph& spider);

/// An odd cycle edge v_{2k-1} v_{2k} that the flattening maps to tree
/// vertices two apart; `middle` is the tree vertex of v_{2k+1} between them.
struct StretchedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Vertex middle = 0;
};

struct FlattenResult {
  Graph tree;
  Vertex root = 0;                     // tree vertex of the starting vertex
  std::vector<VertexSet> fibers;       // tree vertex -> 1 or 2 source vertices
  std::vector<Vertex> anchor_map;      // source vertex -> tree vertex
  std::vector<StretchedEdge> stretched;
};

/// Flattens every cycle of a connected cactus into a path.
FlattenResult cactus_flatten(const Graph& g);

/// Cover of a cactus through its flattening: guards on the fibers of the
/// partition anchors and six cops per region. Regions are source-vertex
/// preimages.
CoverPlan cactus_plan(const Graph& g);
CoverPlan cactus_plan(const Graph& g, const FlattenResult& flat);

/// Largest distance from a vertex to the nearest cop.
int stationary_escape(const Graph& g, const VertexSet& cops);

}  // namespace throttle
