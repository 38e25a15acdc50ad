#include "throttlekit/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <unordered_map>

#include "metrics_detail.hpp"
#include "throttlekit/bounds.hpp"
#include "throttlekit/metrics.hpp"

namespace throttle {

std::string to_string(RobberKind kind) {
  switch (kind) {
    case RobberKind::greedy_far: return "greedy_far";
    case RobberKind::stationary: return "stationary";
    case RobberKind::exact_best: return "exact_best";
  }
  return "greedy_far";
}

RobberKind robber_kind_from_string(const std::string& text) {
  if (text == "greedy_far") return RobberKind::greedy_far;
  if (text == "stationary") return RobberKind::stationary;
  if (text == "exact_best") return RobberKind::exact_best;
  throw PreconditionError("unknown robber policy '" + text + "'");
}

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Checks that the regions cover V and each induces a subtree.
void check_tree_plan(const Graph& tree, const CoverPlan& plan) {
  if (!is_tree(tree)) throw PreconditionError("pursuit needs a tree");
  if (plan.n != tree.order()) throw PreconditionError("plan was built for a different order");
  std::vector<int> stamp(idx(tree.order()), -1);
  std::vector<char> covered(idx(tree.order()), 0);
  for (std::size_t i = 0; i < plan.regions.size(); ++i) {
    const auto& region = plan.regions[i];
    if (region.empty()) throw PreconditionError("empty region");
    for (Vertex v : region) {
      if (v < 0 || v >= tree.order()) throw PreconditionError("region vertex out of range");
      stamp[idx(v)] = static_cast<int>(i);
      covered[idx(v)] = 1;
    }
    std::size_t inner = 0;
    for (Vertex v : region)
      for (Vertex w : tree.neighbors(v))
        if (v < w && stamp[idx(w)] == static_cast<int>(i)) ++inner;
    if (inner + 1 != region.size())
      throw PreconditionError("region " + std::to_string(i) + " is not connected");
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    throw PreconditionError("plan does not cover the tree");
}

// Parent pointers of a BFS from `root`: the first step from v toward root.
std::vector<Vertex> toward(const Graph& tree, Vertex root) {
  std::vector<Vertex> par(idx(tree.order()), -1);
  std::vector<Vertex> queue{root};
  par[idx(root)] = root;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : tree.neighbors(u))
      if (par[idx(w)] < 0) {
        par[idx(w)] = u;
        queue.push_back(w);
      }
  }
  return par;
}

bool holds(const std::vector<Vertex>& cops, Vertex v) { return std::find(cops.begin(), cops.end(), v) != cops.end(); }

int first_holder(const std::vector<Vertex>& cops, Vertex v) {
  return static_cast<int>(std::find(cops.begin(), cops.end(), v) - cops.begin());
}

Vertex farthest_from(const Graph& g, const std::vector<Vertex>& cops, std::span<const Vertex> candidates) {
  auto dist = bfs_distances(g, cops);
  Vertex best = candidates.front();
  for (Vertex v : candidates)
    if (dist[idx(v)] > dist[idx(best)] || (dist[idx(v)] == dist[idx(best)] && v < best)) best = v;
  return best;
}

// Longest evasion against cops that always step toward the robber.
class BestResponse {
 public:
  BestResponse(const Graph& tree, std::uint64_t budget) : tree_(tree), budget_(budget) {
    const auto n = idx(tree.order());
    if (n * n > budget) throw BudgetExceeded(n * n, budget);
    next_.resize(n * n);
    for (Vertex r = 0; r < tree.order(); ++r) {
      auto par = toward(tree, r);
      std::copy(par.begin(), par.end(), next_.begin() + static_cast<std::ptrdiff_t>(idx(r) * n));
    }
  }

  std::vector<Vertex> step(const std::vector<Vertex>& cops, Vertex r) const {
    std::vector<Vertex> out(cops.size());
    for (std::size_t i = 0; i < cops.size(); ++i) out[i] = next_[idx(r) * idx(tree_.order()) + idx(cops[i])];
    return out;
  }

  // Rounds until capture with cops to move; INT_MAX when the robber can
  // evade forever.
  int value(const std::vector<Vertex>& cops, Vertex r) {
    std::string key = encode(cops, r);
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (it->second == kOpen) return kInfinite;
      return it->second;
    }
    if (memo_.size() >= budget_) throw BudgetExceeded(memo_.size() + 1, budget_);
    memo_.emplace(key, kOpen);
    auto moved = step(cops, r);
    int result = 1;
    if (!holds(moved, r)) {
      int best = 0;
      for (Vertex w : replies(moved, r)) best = std::max(best, value(moved, w));
      result = best == kInfinite ? kInfinite : 1 + best;
    }
    memo_[key] = result;
    return result;
  }

  std::vector<Vertex> replies(const std::vector<Vertex>& cops, Vertex r) const {
    std::vector<Vertex> out;
    if (!holds(cops, r)) out.push_back(r);
    for (Vertex w : tree_.neighbors(r))
      if (!holds(cops, w)) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
  }

  static constexpr int kInfinite = std::numeric_limits<int>::max();

 private:
  static constexpr int kOpen = -1;

  static std::string encode(std::vector<Vertex> cops, Vertex r) {
    std::sort(cops.begin(), cops.end());
    cops.push_back(r);
    return std::string(reinterpret_cast<const char*>(cops.data()), cops.size() * sizeof(Vertex));
  }

  const Graph& tree_;
  std::uint64_t budget_;
  std::vector<Vertex> next_;
  std::unordered_map<std::string, int> memo_;
};

}  // namespace

PursuitTrace tree_pursuit(const Graph& tree, const CoverPlan& plan, const RobberPolicy& robber,
                          const SolverOptions& options) {
  check_tree_plan(tree, plan);
  const Vertex n = tree.order();
  std::vector<Vertex> cops = plan.centers;
  if (cops.size() != plan.regions.size()) {
    CoverPlan copy = plan;
    finalize_plan(tree, copy);
    cops = copy.centers;
  }
  if (robber.start && (*robber.start < 0 || *robber.start >= n)) throw PreconditionError("robber start out of range");

  PursuitTrace trace;
  std::optional<BestResponse> oracle;
  if (robber.kind == RobberKind::exact_best) oracle.emplace(tree, options.state_budget);

  Vertex r;
  if (robber.start) {
    r = *robber.start;
  } else if (robber.kind == RobberKind::exact_best) {
    std::vector<Vertex> open;
    for (Vertex v = 0; v < n; ++v)
      if (!holds(cops, v)) open.push_back(v);
    r = open.empty() ? cops.front() : open.front();
    int best = -1;
    for (Vertex v : open)
      if (int val = oracle->value(cops, v); val > best) {
        best = val;
        r = v;
      }
  } else {
    auto all = all_vertices(tree);
    r = farthest_from(tree, cops, all);
  }
  trace.history.push_back({cops, r});
  if (holds(cops, r)) {
    trace.captured = true;
    trace.region_of_capture = first_holder(cops, r);
    return trace;
  }

  const int max_rounds = 4 * n + 4;
  for (int round = 1; round <= max_rounds; ++round) {
    auto par = toward(tree, r);
    for (auto& c : cops) c = par[idx(c)];
    trace.rounds = round;
    if (holds(cops, r)) {
      trace.history.push_back({cops, r});
      trace.captured = true;
      trace.region_of_capture = first_holder(cops, r);
      return trace;
    }
    switch (robber.kind) {
      case RobberKind::stationary: break;
      case RobberKind::greedy_far: {
        std::vector<Vertex> options_r;
        options_r.push_back(r);
        for (Vertex w : tree.neighbors(r))
          if (!holds(cops, w)) options_r.push_back(w);
        std::sort(options_r.begin(), options_r.end());
        r = farthest_from(tree, cops, options_r);
        break;
      }
      case RobberKind::exact_best: {
        int best = -1;
        for (Vertex w : oracle->replies(cops, r))
          if (int val = oracle->value(cops, w); val > best) {
            best = val;
            r = w;
          }
        break;
      }
    }
    trace.history.push_back({cops, r});
  }
  return trace;
}

CoverPlan spider_cover(const Graph& spider) {
  if (!is_tree(spider)) throw PreconditionError("spider cover needs a tree");
  const Vertex n = spider.order();
  std::optional<Vertex> center;
  for (Vertex v = 0; v < n; ++v)
    if (spider.degree(v) > 2) {
      if (center) throw PreconditionError("not a spider: vertices " + std::to_string(*center) + " and " +
                                          std::to_string(v) + " both have degree above 2");
      center = v;
    }
  if (!center)
    for (Vertex v = 0; v < n && !center; ++v)
      if (spider.degree(v) <= 1) center = v;

  // Legs listed from the center outward.
  std::vector<std::vector<Vertex>> legs;
  for (Vertex w : spider.neighbors(*center)) {
    std::vector<Vertex> leg{w};
    Vertex prev = *center, cur = w;
    while (spider.degree(cur) == 2) {
      Vertex next = spider.neighbors(cur)[0] == prev ? spider.neighbors(cur)[1] : spider.neighbors(cur)[0];
      prev = cur;
      cur = next;
      leg.push_back(cur);
    }
    legs.push_back(std::move(leg));
  }

  const double r = std::sqrt(4.0 / 3.0);
  const double rn = r * std::sqrt(static_cast<double>(n));
  const auto len = std::max<std::int64_t>(1, guarded_floor(rn));
  const double threshold = 0.5 * (rn - 1);
  const double limit = r / 2 * std::sqrt(static_cast<double>(n));

  CoverPlan plan;
  plan.n = n;
  plan.case_tag = CaseTag::spider;
  std::vector<VertexSet> intervals;
  std::vector<Vertex> interval_anchors;
  std::vector<std::vector<Vertex>> remainders;
  for (const auto& leg : legs) {
    const auto size = static_cast<std::int64_t>(leg.size());
    const std::int64_t rem = size % len;
    remainders.emplace_back(leg.begin(), leg.begin() + rem);
    for (std::int64_t start = rem; start < size; start += len) {
      intervals.emplace_back(leg.begin() + start, leg.begin() + start + len);
      interval_anchors.push_back(leg[static_cast<std::size_t>(start)]);
    }
  }
  int b = 0;
  for (const auto& rem : remainders)
    if (static_cast<double>(rem.size()) > threshold) ++b;
  const bool big = b > limit;

  for (std::size_t i = 0; i < intervals.size(); ++i) {
    plan.regions.push_back(make_vertex_set(intervals[i]));
    plan.anchors.push_back(interval_anchors[i]);
  }
  VertexSet star{*center};
  std::vector<std::vector<Vertex>> long_remainders;
  for (const auto& rem : remainders) {
    if (!big && static_cast<double>(rem.size()) > threshold) long_remainders.push_back(rem);
    else star.insert(star.end(), rem.begin(), rem.end());
  }
  plan.regions.push_back(make_vertex_set(star));
  plan.anchors.push_back(*center);
  for (const auto& rem : long_remainders) {
    plan.regions.push_back(make_vertex_set(rem));
    plan.anchors.push_back(rem.front());
  }

  const auto s = static_cast<int>(intervals.size());
  plan.cop_count = big ? s + 1 : s + 1 + b;
  plan.diagnostics.r = r;
  plan.diagnostics.b = b;
  plan.diagnostics.s = s;
  plan.diagnostics.x = static_cast<double>(len);
  plan.diagnostics.b_threshold = threshold;
  plan.diagnostics.b_limit = limit;
  finalize_plan(spider, plan);
  return plan;
}

FlattenResult cactus_flatten(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("empty graph");
  if (!is_connected(g)) throw PreconditionError("cactus flattening needs a connected graph");
  const Vertex n = g.order();
  auto blocks = detail::blocks_with_edges(g);
  for (const auto& b : blocks) {
    const std::size_t m = b.vertices.size();
    if (!((m == 2 && b.edge_count == 1) || (m >= 3 && b.edge_count == m)))
      throw PreconditionError("not a cactus: a block on " + std::to_string(m) + " vertices has " +
                              std::to_string(b.edge_count) + " edges");
  }

  FlattenResult out;
  out.anchor_map.assign(idx(n), -1);
  const bool acyclic = std::none_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.vertices.size() > 2; });
  if (acyclic) {
    out.tree = g;
    out.root = 0;
    for (Vertex v = 0; v < n; ++v) {
      out.fibers.push_back({v});
      out.anchor_map[idx(v)] = v;
    }
    return out;
  }

  std::vector<std::vector<std::size_t>> blocks_at(idx(n));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (Vertex v : blocks[i].vertices) blocks_at[idx(v)].push_back(i);

  std::vector<Edge> tree_edges;
  auto new_tree_vertex = [&](VertexSet fiber) {
    const auto t = static_cast<Vertex>(out.fibers.size());
    for (Vertex v : fiber) out.anchor_map[idx(v)] = t;
    out.fibers.push_back(std::move(fiber));
    return t;
  };

  // Lowest vertex on a cycle, and the first cycle block through it.
  std::size_t start_block = blocks.size();
  Vertex start = n;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].vertices.size() > 2 && blocks[i].vertices.front() < start) {
      start = blocks[i].vertices.front();
      start_block = i;
    }

  std::vector<char> in_block(idx(n), 0);
  auto flatten_block = [&](std::size_t bi, Vertex p) {
    const auto& verts = blocks[bi].vertices;
    if (verts.size() == 2) {
      Vertex q = verts[0] == p ? verts[1] : verts[0];
      Vertex tq = new_tree_vertex({q});
      tree_edges.emplace_back(out.anchor_map[idx(p)], tq);
      return;
    }
    for (Vertex v : verts) in_block[idx(v)] = 1;
    auto cycle_neighbors = [&](Vertex v) {
      std::vector<Vertex> nb;
      for (Vertex w : g.neighbors(v))
        if (in_block[idx(w)]) nb.push_back(w);
      return nb;
    };
    // Cyclic order from p, stepping first to p's lower-id cycle neighbor.
    std::vector<Vertex> seq{p};
    Vertex prev = p, cur = cycle_neighbors(p).front();
    while (cur != p) {
      seq.push_back(cur);
      auto nb = cycle_neighbors(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    for (Vertex v : verts) in_block[idx(v)] = 0;

    const auto m = static_cast<int>(seq.size());
    const bool odd = m % 2 == 1;
    const int k = m / 2;
    // label(j) = v_j for 1 <= j <= 2k-1; p is v_{2k}; seq[1] is v_{2k+1} when odd.
    auto label = [&](int j) { return seq[static_cast<std::size_t>(odd ? j + 1 : j)]; };
    std::vector<VertexSet> groups;
    groups.push_back({label(k)});
    for (int i = 1; i <= k - 1; ++i) groups.push_back(make_vertex_set({label(k - i), label(k + i)}));
    if (odd) groups.push_back({seq[1]});
    const bool fresh = out.anchor_map[idx(p)] < 0;
    std::vector<Vertex> path;
    for (auto& grp : groups) path.push_back(new_tree_vertex(std::move(grp)));
    path.push_back(fresh ? new_tree_vertex({p}) : out.anchor_map[idx(p)]);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) tree_edges.emplace_back(path[i], path[i + 1]);
    if (odd) out.stretched.push_back({label(2 * k - 1), p, out.anchor_map[idx(seq[1])]});
  };

  std::vector<char> block_done(blocks.size(), 0);
  std::deque<std::pair<std::size_t, Vertex>> queue;
  queue.emplace_back(start_block, start);
  block_done[start_block] = 1;
  while (!queue.empty()) {
    auto [bi, p] = queue.front();
    queue.pop_front();
    flatten_block(bi, p);
    for (Vertex u : blocks[bi].vertices)
      for (std::size_t other : blocks_at[idx(u)])
        if (!block_done[other]) {
          block_done[other] = 1;
          queue.emplace_back(other, u);
        }
  }
  out.root = out.anchor_map[idx(start)];
  out.tree = Graph::from_edges(static_cast<Vertex>(out.fibers.size()), tree_edges);
  return out;
}

CoverPlan cactus_plan(const Graph& g) { return cactus_plan(g, cactus_flatten(g)); }

CoverPlan cactus_plan(const Graph& g, const FlattenResult& flat) {
  const Vertex n = g.order();
  RootedTree rooted(flat.tree, flat.root);
  const double x = std::sqrt(static_cast<double>(n)) + 1;
  TreePartition parts = tree_partition(rooted, x);
  const int s = parts.s();

  CoverPlan plan;
  plan.n = n;
  plan.case_tag = CaseTag::cactus;
  std::vector<Vertex> guards;
  for (int i = 0; i < s; ++i) {
    const Vertex anchor = parts.anchors[static_cast<std::size_t>(i)];
    const auto& fiber = flat.fibers[idx(anchor)];
    guards.insert(guards.end(), fiber.begin(), fiber.end());
    for (const auto& e : flat.stretched)
      if (e.middle == anchor) guards.push_back(e.v);
  }
  plan.guards = make_vertex_set(std::move(guards));

  Graph tree_copy = flat.tree;
  int max_radius = 0;
  for (int i = 0; i <= s; ++i) {
    const Vertex anchor = parts.anchors[static_cast<std::size_t>(i)];
    VertexSet tree_region = parts.parts[static_cast<std::size_t>(i)];
    if (!std::binary_search(tree_region.begin(), tree_region.end(), anchor)) {
      tree_region.push_back(anchor);
      std::sort(tree_region.begin(), tree_region.end());
    }
    std::vector<Vertex> pre;
    for (Vertex t : tree_region) pre.insert(pre.end(), flat.fibers[idx(t)].begin(), flat.fibers[idx(t)].end());
    plan.regions.push_back(make_vertex_set(std::move(pre)));
    plan.anchors.push_back(flat.fibers[idx(anchor)].front());
    CenterRadius cr = center_and_radius(tree_copy, tree_region);
    plan.centers.push_back(flat.fibers[idx(cr.centers.front())].front());
    max_radius = std::max(max_radius, cr.radius);
  }
  plan.cop_count = static_cast<int>(plan.guards.size()) + 6 * static_cast<int>(plan.regions.size());
  plan.max_region = 0;
  for (const auto& region : plan.regions) plan.max_region = std::max(plan.max_region, static_cast<int>(region.size()));
  plan.max_radius = max_radius;
  plan.diagnostics.s = s;
  plan.diagnostics.x = x;
  return plan;
}

int stationary_escape(const Graph& g, const VertexSet& cops) {
  if (cops.empty()) throw PreconditionError("no cops");
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  for (Vertex c : cops)
    if (c < 0 || c >= g.order()) throw PreconditionError("cop vertex out of range");
  auto dist = bfs_distances(g, cops);
  return *std::max_element(dist.begin(), dist.end());
}

}  // namespace throttle
