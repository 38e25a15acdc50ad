#include "throttlekit/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "throttlekit/bounds.hpp"
#include "throttlekit/metrics.hpp"
#include "throttlekit/rng.hpp"

namespace throttle {

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::path, "path"},
    {Family::star, "star"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::spider, "spider"},
    {Family::random_tree, "random_tree"},
    {Family::random_cactus, "random_cactus"},
    {Family::random_chordal, "random_chordal"},
    {Family::random_spider, "random_spider"},
    {Family::lower_spider, "lower_spider"},
};

bool is_random(Family f) {
  return f == Family::random_tree || f == Family::random_cactus || f == Family::random_chordal ||
         f == Family::random_spider;
}

template <typename Int>
Int parse_int(std::string_view text, std::string_view what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw PreconditionError("family spec: bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Uniform labeled tree from a Pruefer sequence.
Graph pruefer_tree(Vertex n, CounterRng& rng) {
  if (n == 1) return Graph::from_edges(1, {});
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (Vertex c : code) ++degree[static_cast<std::size_t>(c)];
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  Vertex ptr = 0;
  while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex c : code) {
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--degree[static_cast<std::size_t>(c)] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
  return Graph::from_edges(n, edges);
}

Graph make_spider(const std::vector<Vertex>& legs) {
  if (legs.empty()) throw PreconditionError("spider needs at least one leg");
  std::vector<Edge> edges;
  Vertex next = 1;
  for (Vertex len : legs) {
    if (len < 1) throw PreconditionError("spider leg length must be positive");
    Vertex prev = 0;
    for (Vertex i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(next, edges);
}

Graph random_cactus(Vertex n, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  std::vector<Edge> edges;
  Vertex count = 1;
  while (count < n) {
    const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(count)));
    const Vertex remaining = n - count;
    Vertex len = 0;
    if (rng.below(3) == 0) len = std::min<Vertex>(3 + static_cast<Vertex>(rng.below(6)), remaining + 1);
    if (len >= 3) {
      Vertex prev = v;
      for (Vertex i = 1; i < len; ++i) {
        edges.emplace_back(prev, count);
        prev = count++;
      }
      edges.emplace_back(prev, v);
    } else {
      edges.emplace_back(v, count++);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_chordal(Vertex n, std::uint64_t seed) {
  CounterRng tree_rng(seed, 1);
  Graph tree = pruefer_tree(n, tree_rng);
  CounterRng rng(seed, 2);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  // Elimination game: eliminating v turns its remaining neighbors into a
  // clique, so `order` is a perfect elimination ordering of the result.
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : tree.edges()) {
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  std::vector<char> eliminated(static_cast<std::size_t>(n), 0);
  std::set<Edge> all;
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex w : adj[static_cast<std::size_t>(v)])
      if (!eliminated[static_cast<std::size_t>(w)]) later.push_back(w);
    for (Vertex w : later) all.emplace(std::min(v, w), std::max(v, w));
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        adj[static_cast<std::size_t>(later[i])].insert(later[j]);
        adj[static_cast<std::size_t>(later[j])].insert(later[i]);
      }
    eliminated[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Edge> edges(all.begin(), all.end());
  return Graph::from_edges(n, edges);
}

Graph random_spider(Vertex n, std::uint64_t seed) {
  if (n < 2) return make_spider({});
  CounterRng rng(seed, 3);
  const Vertex max_legs = std::min<Vertex>(n - 1, std::max<Vertex>(3, static_cast<Vertex>(2 * std::sqrt(n))));
  const Vertex min_legs = std::min<Vertex>(3, max_legs);
  const Vertex legs = min_legs + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(max_legs - min_legs + 1)));
  // Cut n-1 leg vertices into `legs` positive parts at distinct points.
  std::set<Vertex> cuts;
  const Vertex total = n - 1;
  for (Vertex j = total - legs + 1; j < total; ++j) {
    auto t = static_cast<Vertex>(1 + rng.below(static_cast<std::uint64_t>(j)));
    if (!cuts.insert(t).second) cuts.insert(j);
  }
  std::vector<Vertex> lengths;
  Vertex prev = 0;
  for (Vertex c : cuts) {
    lengths.push_back(c - prev);
    prev = c;
  }
  lengths.push_back(total - prev);
  return make_spider(lengths);
}

// AHU code of the tree rooted at `root`.
std::string ahu_code(const Graph& t, Vertex root) {
  RootedTree rt(t, root);
  std::vector<std::string> code(static_cast<std::size_t>(t.order()));
  auto order = rt.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<std::string> kids;
    for (Vertex c : rt.children(*it)) kids.push_back(std::move(code[static_cast<std::size_t>(c)]));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    code[static_cast<std::size_t>(*it)] = std::move(s);
  }
  return code[static_cast<std::size_t>(root)];
}

std::string canonical_tree_code(const Graph& t) {
  auto centers = center_and_radius(t, all_vertices(t)).centers;
  std::string best;
  for (Vertex c : centers) {
    auto code = ahu_code(t, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

Graph tree_from_code(const std::string& code) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (char ch : code) {
    if (ch == '(') {
      if (!stack.empty()) edges.emplace_back(stack.back(), next);
      stack.push_back(next++);
    } else {
      stack.pop_back();
    }
  }
  return Graph::from_edges(next, edges);
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  auto parts = split(text, ':');
  FamilySpec spec;
  auto it = std::find_if(std::begin(kFamilyNames), std::end(kFamilyNames),
                         [&](const FamilyName& f) { return f.name == parts[0]; });
  if (it == std::end(kFamilyNames)) throw PreconditionError("unknown family '" + std::string(parts[0]) + "'");
  spec.family = it->family;
  if (parts.size() < 2 || parts[1].empty()) throw PreconditionError("family spec '" + std::string(text) + "' needs a size");
  if (spec.family == Family::spider) {
    for (auto leg : split(parts[1], ',')) spec.legs.push_back(parse_int<Vertex>(leg, "leg length"));
  } else {
    spec.n = parse_int<Vertex>(parts[1], "order");
  }
  for (std::size_t i = 2; i < parts.size(); ++i) {
    auto field = parts[i];
    if (field.substr(0, 5) == "seed=") field.remove_prefix(5);
    spec.seed = parse_int<std::uint64_t>(field, "seed");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  auto it = std::find_if(std::begin(kFamilyNames), std::end(kFamilyNames),
                         [&](const FamilyName& f) { return f.family == family; });
  std::string out(it->name);
  out += ':';
  if (family == Family::spider) {
    for (std::size_t i = 0; i < legs.size(); ++i) out += (i ? "," : "") + std::to_string(legs[i]);
  } else {
    out += std::to_string(n);
  }
  if (is_random(family)) out += ":seed=" + std::to_string(seed);
  return out;
}

Graph generate(const FamilySpec& spec) {
  if (spec.family != Family::spider && spec.n <= 0) throw PreconditionError("family spec has empty order");
  const Vertex n = spec.n;
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::path:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      return Graph::from_edges(n, edges);
    case Family::star:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      return Graph::from_edges(n, edges);
    case Family::cycle:
      if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      edges.emplace_back(0, n - 1);
      return Graph::from_edges(n, edges);
    case Family::complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      return Graph::from_edges(n, edges);
    case Family::spider:
      return make_spider(spec.legs);
    case Family::random_tree: {
      CounterRng rng(spec.seed, 0);
      return pruefer_tree(n, rng);
    }
    case Family::random_cactus:
      return random_cactus(n, spec.seed);
    case Family::random_chordal:
      return random_chordal(n, spec.seed);
    case Family::random_spider:
      return random_spider(n, spec.seed);
    case Family::lower_spider:
      return realize(spider_lower_family(n));
  }
  throw PreconditionError("unhandled family");
}

std::vector<Graph> enumerate_free_trees(Vertex n) {
  if (n <= 0) return {};
  std::map<std::string, Graph> level;
  level.emplace("()", Graph::from_edges(1, {}));
  for (Vertex m = 2; m <= n; ++m) {
    std::map<std::string, Graph> next;
    for (const auto& [code, t] : level) {
      auto edges = t.edges();
      for (Vertex v = 0; v < t.order(); ++v) {
        auto grown = edges;
        grown.emplace_back(v, t.order());
        auto g = Graph::from_edges(t.order() + 1, grown);
        auto key = canonical_tree_code(g);
        if (!next.contains(key)) next.emplace(key, tree_from_code(key));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

}  // namespace throttle
