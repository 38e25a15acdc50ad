#include "throttlekit/metrics.hpp"

#include <algorithm>
#include <limits>

#include "metrics_detail.hpp"

namespace throttle {

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex s : sources) {
    if (dist[static_cast<std::size_t>(s)] == 0) continue;
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    int du = dist[static_cast<std::size_t>(u)];
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] != kUnreachable) continue;
      dist[static_cast<std::size_t>(w)] = du + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, std::span<const Vertex>(&source, 1));
}

std::vector<int> distance_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> d(n * n);
  for (Vertex s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), d.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(s) * n));
  }
  return d;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_distances(g, Vertex{0});
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

bool is_tree(const Graph& g) {
  return g.order() > 0 && g.edge_count() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbors(comp[head]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

RootedTree spanning_tree(const Graph& g, Vertex root) {
  if (root < 0 || root >= g.order()) throw PreconditionError("root " + std::to_string(root) + " out of range");
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> queue{root};
  seen[static_cast<std::size_t>(root)] = 1;
  std::vector<Edge> edges;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      edges.emplace_back(u, w);
      queue.push_back(w);
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw PreconditionError("graph is disconnected: vertex " + std::to_string(v) + " is unreachable from " +
                              std::to_string(root));
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
  return RootedTree(Graph::from_edges(g.order(), edges, std::move(labels)), root);
}

namespace {

// Double sweep: exact for trees.
CenterRadius tree_center(const Graph& sub) {
  auto far_from = [&](Vertex s, std::vector<int>& dist) {
    dist = bfs_distances(sub, s);
    return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
  };
  std::vector<int> d0, da, db;
  Vertex a = far_from(0, d0);
  Vertex b = far_from(a, da);
  far_from(b, db);
  const int diameter = da[static_cast<std::size_t>(b)];
  CenterRadius out;
  out.radius = (diameter + 1) / 2;
  for (Vertex v = 0; v < sub.order(); ++v)
    if (da[static_cast<std::size_t>(v)] + db[static_cast<std::size_t>(v)] == diameter &&
        std::max(da[static_cast<std::size_t>(v)], db[static_cast<std::size_t>(v)]) == out.radius)
      out.centers.push_back(v);
  return out;
}

}  // namespace

CenterRadius center_and_radius(const Graph& g, std::span<const Vertex> within) {
  if (within.empty()) throw PreconditionError("center_and_radius: empty vertex set");
  auto sub = induced_subgraph(g, within);
  if (!is_connected(sub.graph)) throw PreconditionError("center_and_radius: induced subgraph is disconnected");
  CenterRadius local;
  if (sub.graph.edge_count() + 1 == static_cast<std::size_t>(sub.graph.order())) {
    local = tree_center(sub.graph);
  } else {
    local.radius = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < sub.graph.order(); ++v) {
      auto d = bfs_distances(sub.graph, v);
      int ecc = *std::max_element(d.begin(), d.end());
      if (ecc < local.radius) {
        local.radius = ecc;
        local.centers.clear();
      }
      if (ecc == local.radius) local.centers.push_back(v);
    }
  }
  CenterRadius out;
  out.radius = local.radius;
  for (Vertex v : local.centers) out.centers.push_back(sub.mapping[static_cast<std::size_t>(v)]);
  std::sort(out.centers.begin(), out.centers.end());
  return out;
}

namespace detail {

std::vector<Block> blocks_with_edges(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Block> blocks;
  std::vector<Edge> edge_stack;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  int timer = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (disc[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (w == f.parent) continue;
        auto& dw = disc[static_cast<std::size_t>(w)];
        if (dw == -1) {
          edge_stack.emplace_back(f.v, w);
          dw = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (dw < disc[static_cast<std::size_t>(f.v)]) {
          edge_stack.emplace_back(f.v, w);
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], dw);
        }
        continue;
      }
      Vertex v = f.v, p = f.parent;
      stack.pop_back();
      if (p < 0) continue;
      low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
      if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) {
        Block b;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          b.vertices.push_back(e.first);
          b.vertices.push_back(e.second);
          ++b.edge_count;
          if (e == Edge{p, v}) break;
        }
        b.vertices = make_vertex_set(std::move(b.vertices));
        blocks.push_back(std::move(b));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  return blocks;
}

}  // namespace detail

std::vector<VertexSet> biconnected_blocks(const Graph& g) {
  std::vector<VertexSet> out;
  for (auto& b : detail::blocks_with_edges(g)) out.push_back(std::move(b.vertices));
  return out;
}

bool is_cactus(const Graph& g) {
  if (!is_connected(g)) return false;
  for (const auto& b : detail::blocks_with_edges(g)) {
    const std::size_t m = b.vertices.size();
    if (m == 2 && b.edge_count == 1) continue;
    if (m >= 3 && b.edge_count == m) continue;
    return false;
  }
  return true;
}

}  // namespace throttle
