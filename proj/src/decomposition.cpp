#include "throttlekit/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "throttlekit/metrics.hpp"

namespace throttle {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::big_b: return "big_b";
    case CaseTag::small_b: return "small_b";
    case CaseTag::spider: return "spider";
    case CaseTag::cactus: return "cactus";
  }
  return "small_b";
}

CaseTag case_tag_from_string(const std::string& text) {
  if (text == "big_b") return CaseTag::big_b;
  if (text == "small_b") return CaseTag::small_b;
  if (text == "spider") return CaseTag::spider;
  if (text == "cactus") return CaseTag::cactus;
  throw PreconditionError("unknown case tag '" + text + "'");
}

double cover_ratio(double c) {
  if (!(c > 0)) throw PreconditionError("cover constant c must be positive");
  return std::sqrt(4.0 / (7.0 * c));
}

namespace {

// The part of a rooted tree that survives repeated limb removal. Subtree
// sizes count live vertices only; dead children are dropped lazily.
class ResidualTree {
 public:
  explicit ResidualTree(const RootedTree& t)
      : t_(t),
        alive_(static_cast<std::size_t>(t.order()), 1),
        size_(static_cast<std::size_t>(t.order()), 1),
        kids_(static_cast<std::size_t>(t.order())) {
    auto order = t.bfs_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex u = *it;
      auto ch = t.children(u);
      kids_[idx(u)].assign(ch.begin(), ch.end());
      for (Vertex w : ch) size_[idx(u)] += size_[idx(w)];
    }
  }

  Vertex live_count() const { return size_[idx(t_.root())]; }

  // Requires 1.5 <= x < live_count().
  LimbSplit split(double x) {
    const double upper = 2 * x - 1;
    Vertex u = t_.root();
    for (;;) {
      if (size_[idx(u)] <= upper) return {collect(u), u};
      const auto& kids = live_children(u);
      Vertex best = kids.front();
      for (Vertex w : kids)
        if (size_[idx(w)] > size_[idx(best)] || (size_[idx(w)] == size_[idx(best)] && w < best)) best = w;
      const Vertex branch = size_[idx(best)] + 1;
      if (branch > upper) {
        u = best;
        continue;
      }
      if (branch > x) {
        VertexSet s = collect(best);
        s.push_back(u);
        return {s, u};
      }
      std::vector<Vertex> sorted = kids;
      std::sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) {
        if (size_[idx(a)] != size_[idx(b)]) return size_[idx(a)] > size_[idx(b)];
        return a < b;
      });
      VertexSet s{u};
      for (Vertex w : sorted) {
        append_subtree(w, s);
        if (static_cast<double>(s.size()) > x) break;
      }
      return {s, u};
    }
  }

  // Removes `dead` (all inside the live subtree of `v`, v excluded).
  void remove(const VertexSet& dead, Vertex v) {
    for (Vertex y : dead) alive_[idx(y)] = 0;
    const auto removed = static_cast<Vertex>(dead.size());
    for (std::optional<Vertex> a = v; a; a = t_.parent(*a)) size_[idx(*a)] -= removed;
  }

  VertexSet live_vertices() const {
    VertexSet out;
    for (Vertex v = 0; v < t_.order(); ++v)
      if (alive_[idx(v)]) out.push_back(v);
    return out;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  const std::vector<Vertex>& live_children(Vertex u) {
    auto& k = kids_[idx(u)];
    k.erase(std::remove_if(k.begin(), k.end(), [&](Vertex w) { return !alive_[idx(w)]; }), k.end());
    return k;
  }

  void append_subtree(Vertex u, VertexSet& out) {
    std::vector<Vertex> stack{u};
    while (!stack.empty()) {
      Vertex w = stack.back();
      stack.pop_back();
      out.push_back(w);
      for (Vertex c : live_children(w)) stack.push_back(c);
    }
  }

  VertexSet collect(Vertex u) {
    VertexSet out;
    append_subtree(u, out);
    return out;
  }

  const RootedTree& t_;
  std::vector<char> alive_;
  std::vector<Vertex> size_;
  std::vector<std::vector<Vertex>> kids_;
};

void check_threshold(double x) {
  if (!(x >= 1.5)) throw PreconditionError("threshold x must be at least 1.5");
}

}  // namespace

LimbSplit limb_split(const RootedTree& t, double x) {
  check_threshold(x);
  if (!(x < t.order())) throw PreconditionError("threshold x must be below the tree order");
  ResidualTree residual(t);
  LimbSplit out = residual.split(x);
  std::sort(out.s.begin(), out.s.end());
  return out;
}

Bipartition balanced_bipartition(const RootedTree& t) {
  const Vertex n = t.order();
  if (n < 2) throw PreconditionError("balanced bipartition needs at least 2 vertices");
  if (n == 2) {
    Vertex other = t.root() == 0 ? 1 : 0;
    return {{other}, {0, 1}};
  }
  const double x = std::max(1.5, (n + 1) / 3.0);
  LimbSplit split = limb_split(t, x);
  VertexSet rest;
  std::vector<char> in_s(static_cast<std::size_t>(n), 0);
  for (Vertex v : split.s) in_s[static_cast<std::size_t>(v)] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (!in_s[static_cast<std::size_t>(v)] || v == split.v) rest.push_back(v);
  return {std::move(split.s), std::move(rest)};
}

TreePartition tree_partition(const RootedTree& t, double x) {
  check_threshold(x);
  TreePartition out;
  out.x = x;
  ResidualTree residual(t);
  while (residual.live_count() > x) {
    LimbSplit split = residual.split(x);
    VertexSet y;
    y.reserve(split.s.size() - 1);
    for (Vertex w : split.s)
      if (w != split.v) y.push_back(w);
    residual.remove(y, split.v);
    std::sort(y.begin(), y.end());
    out.parts.push_back(std::move(y));
    out.anchors.push_back(split.v);
  }
  out.parts.push_back(residual.live_vertices());
  out.anchors.push_back(t.root());
  return out;
}

namespace {

VertexSet with_anchor(const VertexSet& part, Vertex anchor) {
  VertexSet region = part;
  auto it = std::lower_bound(region.begin(), region.end(), anchor);
  if (it == region.end() || *it != anchor) region.insert(it, anchor);
  return region;
}

}  // namespace

CoverPlan plan_cover(const Graph& g, double c) {
  const double r = cover_ratio(c);
  if (g.order() == 0) throw PreconditionError("empty graph");
  if (!is_connected(g)) throw PreconditionError("plan_cover needs a connected graph");
  const Vertex n = g.order();
  RootedTree tree = spanning_tree(g, 0);

  CoverPlan plan;
  plan.n = n;
  plan.diagnostics.r = r;
  plan.diagnostics.c = c;
  if (n < 9) {
    plan.regions.push_back(all_vertices(g));
    plan.anchors.push_back(0);
    plan.cop_count = 1;
    plan.case_tag = CaseTag::small_b;
    plan.diagnostics.x = n;
    finalize_plan(tree.graph(), plan);
    return plan;
  }

  const double rn = r * std::sqrt(static_cast<double>(n));
  const double x = std::max(rn, 1.5);
  TreePartition parts = tree_partition(tree, x);
  const int s = parts.s();
  const double threshold = 1.5 * (rn - 1);
  const double limit = r * c / 2 * std::sqrt(static_cast<double>(n));
  int b = 0;
  for (int i = 0; i < s; ++i)
    if (static_cast<double>(parts.parts[static_cast<std::size_t>(i)].size()) > threshold) ++b;
  const bool big = b > limit;

  for (int i = 0; i <= s; ++i) {
    const auto& part = parts.parts[static_cast<std::size_t>(i)];
    const Vertex anchor = parts.anchors[static_cast<std::size_t>(i)];
    VertexSet region = with_anchor(part, anchor);
    if (big || i == s || static_cast<double>(part.size()) <= threshold) {
      plan.regions.push_back(std::move(region));
      plan.anchors.push_back(anchor);
      continue;
    }
    InducedSubgraph sub = induced_subgraph(tree.graph(), region);
    const auto local_anchor =
        static_cast<Vertex>(std::lower_bound(region.begin(), region.end(), anchor) - region.begin());
    RootedTree local(sub.graph, local_anchor);
    Bipartition halves = balanced_bipartition(local);
    auto lift = [&](const VertexSet& local_set) {
      VertexSet out;
      out.reserve(local_set.size());
      for (Vertex v : local_set) out.push_back(sub.mapping[static_cast<std::size_t>(v)]);
      return out;
    };
    VertexSet s0 = lift(halves.s0);
    VertexSet s1 = lift(halves.s1);
    std::vector<Vertex> common;
    std::set_intersection(s0.begin(), s0.end(), s1.begin(), s1.end(), std::back_inserter(common));
    plan.regions.push_back(s0);
    plan.anchors.push_back(common.empty() ? s0.front() : common.front());
    plan.regions.push_back(s1);
    plan.anchors.push_back(anchor);
  }

  plan.case_tag = big ? CaseTag::big_b : CaseTag::small_b;
  plan.cop_count = big ? 1 + s : 1 + s + b;
  plan.diagnostics.b = b;
  plan.diagnostics.s = s;
  plan.diagnostics.x = x;
  plan.diagnostics.b_threshold = threshold;
  plan.diagnostics.b_limit = limit;
  finalize_plan(tree.graph(), plan);
  return plan;
}

void finalize_plan(const Graph& tree, CoverPlan& plan) {
  plan.centers.clear();
  plan.max_region = 0;
  plan.max_radius = 0;
  for (const auto& region : plan.regions) {
    CenterRadius cr = center_and_radius(tree, region);
    plan.centers.push_back(cr.centers.front());
    plan.max_region = std::max(plan.max_region, static_cast<int>(region.size()));
    plan.max_radius = std::max(plan.max_radius, cr.radius);
  }
}

}  // namespace throttle
