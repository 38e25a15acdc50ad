#pragma once

#include <optional>
#include <string>
#include <vector>

#include "throttlekit/graph.hpp"

namespace throttle {

/// A limb S of a rooted tree with its attachment vertex v: S induces a
/// connected subtree and (V - S) + v is still connected.
struct LimbSplit {
  VertexSet s;
  Vertex v = 0;
};

/// Two connected vertex sets covering the tree and sharing at most one vertex.
struct Bipartition {
  VertexSet s0;
  VertexSet s1;
};

/// Disjoint parts Y_0..Y_s covering the tree; Y_i + anchors[i] is connected.
/// The last part is the residual tree and is anchored at the root.
struct TreePartition {
  std::vector<VertexSet> parts;
  std::vector<Vertex> anchors;
  double x = 0.0;

  int s() const { return static_cast<int>(parts.size()) - 1; }
};

enum class CaseTag { big_b, small_b, spider, cactus };

std::string to_string(CaseTag tag);
CaseTag case_tag_from_string(const std::string& text);

/// Quantities recorded by a cover construction.
struct PlanDiagnostics {
  double r = 0.0;
  int b = 0;
  int s = 0;
  std::optional<double> c;
  double x = 0.0;            // part-size threshold handed to the tree partition
  double b_threshold = 0.0;  // a part or leg remainder counts toward b above this size
  double b_limit = 0.0;      // the big case applies when b exceeds this
};

/// Connected regions covering a graph, one cop per region unless the
/// construction says otherwise.
struct CoverPlan {
  Vertex n = 0;
  std::vector<VertexSet> regions;
  std::vector<Vertex> anchors;   // attachment vertex of each region
  std::vector<Vertex> centers;   // a minimum-eccentricity vertex of each region
  std::vector<Vertex> guards;    // stationary guard cops (cactus plans only)
  int cop_count = 0;
  int max_region = 0;
  int max_radius = 0;            // max over regions of the center's eccentricity
  CaseTag case_tag = CaseTag::small_b;
  PlanDiagnostics diagnostics;
};

/// Finds a limb with x < |S| <= 2x - 1 by descending into maximum branches.
/// Requires 1.5 <= x < n.
LimbSplit limb_split(const RootedTree& t, double x);

/// Splits a tree (n >= 2) into two connected sets sharing one vertex, with
/// ceil(n/3) <= |s0| <= floor(2n/3) + 1. s0 is a limb; s1 is the rest plus
/// the shared vertex.
Bipartition balanced_bipartition(const RootedTree& t);

/// Repeatedly cuts limbs off the residual tree until at most x vertices
/// remain. Requires x >= 1.5; x >= n yields the single part V.
TreePartition tree_partition(const RootedTree& t, double x);

/// Connected cover of a graph through its BFS spanning tree from vertex 0,
/// sized for an adversary that needs at most c*x rounds in a region of order x.
CoverPlan plan_cover(const Graph& g, double c);

/// Fills max_region, max_radius and centers of a plan from its regions;
/// `tree` supplies the connectivity the regions are measured in.
void finalize_plan(const Graph& tree, CoverPlan& plan);

/// Sizes of the certificate: r = sqrt(4 / (7c)).
double cover_ratio(double c);

}  // namespace throttle
