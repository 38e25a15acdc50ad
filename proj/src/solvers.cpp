#include "throttlekit/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "throttlekit/metrics.hpp"

namespace throttle {

std::string to_string(Objective objective) {
  switch (objective) {
    case Objective::robber: return "robber";
    case Objective::psd: return "psd";
    case Objective::radius: return "radius";
  }
  return "robber";
}

Objective objective_from_string(const std::string& text) {
  if (text == "robber") return Objective::robber;
  if (text == "psd") return Objective::psd;
  if (text == "radius") return Objective::radius;
  throw PreconditionError("unknown objective '" + text + "'");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t a = result / g, b = i / g;
    const std::uint64_t m = num / b;
    if (a != 0 && m > kMax / a) return kMax;
    result = a * m;
  }
  return result;
}

std::uint64_t robber_state_count(Vertex n, int k) {
  const std::uint64_t sets = binomial(static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(k) - 1,
                                      static_cast<std::uint64_t>(k));
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (sets > kMax / static_cast<std::uint64_t>(std::max<Vertex>(n, 1))) return kMax;
  return sets * static_cast<std::uint64_t>(n);
}

namespace {

constexpr std::uint16_t kUnlabelled = 0;

void require_connected(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("empty graph");
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
}

void check_budget(std::uint64_t required, const SolverOptions& options) {
  if (required > options.state_budget) throw BudgetExceeded(required, options.state_budget);
}

// Cop multisets c_0 <= ... <= c_{k-1} ranked in colex order through the
// combination d_i = c_i + i: rank = sum_i C(d_i, i + 1).
class MultisetIndex {
 public:
  MultisetIndex(Vertex n, int k) : k_(k) {
    const auto rows = static_cast<std::size_t>(n + k);
    table_.assign(rows * static_cast<std::size_t>(k + 1), 0);
    for (std::size_t m = 0; m < rows; ++m)
      for (int j = 0; j <= k; ++j) table_[m * static_cast<std::size_t>(k + 1) + static_cast<std::size_t>(j)] = binomial(m, static_cast<std::uint64_t>(j));
    count_ = binomial(static_cast<std::uint64_t>(n + k - 1), static_cast<std::uint64_t>(k));
  }

  std::uint64_t count() const { return count_; }

  // `sorted` must be non-decreasing.
  std::uint64_t rank(const Vertex* sorted) const {
    std::uint64_t r = 0;
    for (int i = 0; i < k_; ++i) {
      const auto d = static_cast<std::size_t>(sorted[i] + i);
      r += table_[d * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(i + 1)];
    }
    return r;
  }

  // Advances to the colex successor; returns false after the last multiset.
  static bool next(std::vector<Vertex>& c, Vertex n) {
    const auto k = c.size();
    for (std::size_t i = 0; i < k; ++i) {
      const bool can = i + 1 < k ? c[i] < c[i + 1] : c[i] < n - 1;
      if (!can) continue;
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = 0;
      return true;
    }
    return false;
  }

 private:
  int k_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> table_;
};

class RobberGame {
 public:
  RobberGame(const Graph& g, int k) : g_(g), n_(g.order()), k_(k), index_(g.order(), k) {
    value_.assign(index_.count() * static_cast<std::size_t>(n_), kUnlabelled);
    pending_.assign(index_.count(), 0);
  }

  // Runs sweeps 1..limit; returns capt_k if found within them.
  std::optional<GameOutcome> run(int limit) {
    if (limit < 1) return std::nullopt;
    if (first_sweep()) return GameOutcome::captured(1);
    for (int t = 2; t <= limit; ++t) {
      bool changed = false;
      if (sweep(t, changed)) return GameOutcome::captured(t);
      if (!changed) return GameOutcome::evasion();
    }
    return std::nullopt;
  }

 private:
  std::size_t slot(std::uint64_t rank, Vertex r) const {
    return static_cast<std::size_t>(rank) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(r);
  }

  bool first_sweep() {
    std::vector<Vertex> c(static_cast<std::size_t>(k_), 0);
    std::vector<char> in_c(static_cast<std::size_t>(n_)), adj_c(static_cast<std::size_t>(n_));
    std::uint64_t rank = 0;
    bool full = false;
    do {
      std::fill(in_c.begin(), in_c.end(), 0);
      std::fill(adj_c.begin(), adj_c.end(), 0);
      for (Vertex v : c) {
        in_c[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g_.neighbors(v)) adj_c[static_cast<std::size_t>(w)] = 1;
      }
      std::uint32_t open = 0;
      for (Vertex r = 0; r < n_; ++r) {
        if (in_c[static_cast<std::size_t>(r)]) continue;
        if (adj_c[static_cast<std::size_t>(r)]) value_[slot(rank, r)] = 1;
        else ++open;
      }
      pending_[static_cast<std::size_t>(rank)] = open;
      if (open == 0) full = true;
      ++rank;
    } while (MultisetIndex::next(c, n_));
    return full;
  }

  // Distinct cop multisets reachable in one cop move from c, as sorted
  // position blocks of size k followed by their ranks.
  void cop_moves(const std::vector<Vertex>& c, std::vector<Vertex>& positions, std::vector<std::uint64_t>& ranks) {
    const auto k = static_cast<std::size_t>(k_);
    std::vector<std::pair<std::uint64_t, std::vector<Vertex>>> found;
    std::vector<Vertex> sorted(k);
    std::vector<std::size_t> choice(k, 0);
    // Each cop stays (choice 0) or moves to its choice-th neighbor.
    for (;;) {
      for (std::size_t i = 0; i < k; ++i) sorted[i] = choice[i] == 0 ? c[i] : g_.neighbors(c[i])[choice[i] - 1];
      std::sort(sorted.begin(), sorted.end());
      found.emplace_back(index_.rank(sorted.data()), sorted);
      std::size_t i = 0;
      while (i < k) {
        if (++choice[i] <= g_.degree(c[i])) break;
        choice[i] = 0;
        ++i;
      }
      if (i == k) break;
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    positions.clear();
    ranks.clear();
    for (auto& [rank, pos] : found) {
      ranks.push_back(rank);
      positions.insert(positions.end(), pos.begin(), pos.end());
    }
  }

  bool sweep(int t, bool& changed) {
    const auto prior = static_cast<std::uint16_t>(t - 1);
    const auto k = static_cast<std::size_t>(k_);
    std::vector<Vertex> c(k, 0);
    std::vector<char> occ(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> positions;
    std::vector<std::uint64_t> ranks;
    std::vector<Vertex> open;
    std::uint64_t rank = 0;
    do {
      if (pending_[static_cast<std::size_t>(rank)] != 0) {
        for (Vertex v : c) occ[static_cast<std::size_t>(v)] = 1;
        open.clear();
        for (Vertex r = 0; r < n_; ++r)
          if (!occ[static_cast<std::size_t>(r)] && value_[slot(rank, r)] == kUnlabelled) open.push_back(r);
        for (Vertex v : c) occ[static_cast<std::size_t>(v)] = 0;
        cop_moves(c, positions, ranks);
        for (std::size_t m = 0; m < ranks.size() && !open.empty(); ++m) {
          const Vertex* pos = &positions[m * k];
          for (std::size_t i = 0; i < k; ++i) occ[static_cast<std::size_t>(pos[i])] = 1;
          const std::uint16_t* row = &value_[slot(ranks[m], 0)];
          // Robber at r, cops now at D: every robber reply must already be
          // decided within t - 1 rounds.
          auto decided = [&](Vertex w) { return row[w] != kUnlabelled && row[w] <= prior; };
          for (std::size_t j = 0; j < open.size();) {
            const Vertex r = open[j];
            bool ok = !occ[static_cast<std::size_t>(r)] && decided(r);
            if (ok)
              for (Vertex w : g_.neighbors(r))
                if (!occ[static_cast<std::size_t>(w)] && !decided(w)) {
                  ok = false;
                  break;
                }
            if (!ok) {
              ++j;
              continue;
            }
            value_[slot(rank, r)] = static_cast<std::uint16_t>(t);
            changed = true;
            open[j] = open.back();
            open.pop_back();
            if (--pending_[static_cast<std::size_t>(rank)] == 0) return true;
          }
          for (std::size_t i = 0; i < k; ++i) occ[static_cast<std::size_t>(pos[i])] = 0;
        }
      }
      ++rank;
    } while (MultisetIndex::next(c, n_));
    return false;
  }

  const Graph& g_;
  Vertex n_;
  int k_;
  MultisetIndex index_;
  std::vector<std::uint16_t> value_;
  std::vector<std::uint32_t> pending_;
};

}  // namespace

std::optional<GameOutcome> capture_time_within(const Graph& g, int k, int limit, const SolverOptions& options) {
  require_connected(g);
  if (k < 1) throw PreconditionError("need at least one cop");
  if (limit < 0) return std::nullopt;
  if (k >= g.order()) return GameOutcome::captured(0);
  check_budget(robber_state_count(g.order(), k), options);
  RobberGame game(g, k);
  return game.run(limit);
}

GameOutcome capture_time(const Graph& g, int k, const SolverOptions& options) {
  auto out = capture_time_within(g, k, std::numeric_limits<std::uint16_t>::max() - 1, options);
  return out ? *out : GameOutcome::evasion();
}

namespace {

int k_upper(const Graph& g, const SolverOptions& options) {
  int k_max = g.order();
  if (options.k_max) k_max = std::min(k_max, *options.k_max);
  if (k_max < 1) throw PreconditionError("k_max must be at least 1");
  return k_max;
}

// Shared k loop: `cost(k, limit)` returns cost(k) if it is at most `limit`
// (limit < 0 means unbounded) and nullopt otherwise.
template <typename CostFn>
ThrottleResult throttle_loop(const Graph& g, Objective objective, const SolverOptions& options, CostFn cost) {
  ThrottleResult out;
  out.objective = objective;
  constexpr int kNone = std::numeric_limits<int>::max();
  int best = kNone;
  const int k_max = k_upper(g, options);
  out.complete = false;
  for (int k = 1; k <= k_max; ++k) {
    if (best != kNone && k >= best) {
      out.complete = true;
      break;
    }
    const int limit = best == kNone ? -1 : best - k - 1;
    std::optional<GameOutcome> result = cost(k, limit);
    if (!result) {
      out.per_k.push_back({k, limit + 1, false});
      continue;
    }
    out.per_k.push_back({k, result->rounds, true});
    if (result->rounds && k + *result->rounds < best) {
      best = k + *result->rounds;
      out.best_k = k;
    }
  }
  if (!out.complete && k_max == g.order()) out.complete = true;
  if (best == kNone) throw PreconditionError("no k up to k_max finishes the game");
  out.value = best;
  return out;
}

}  // namespace

ThrottleResult throttle_robber(const Graph& g, const SolverOptions& options) {
  require_connected(g);
  return throttle_loop(g, Objective::robber, options, [&](int k, int limit) -> std::optional<GameOutcome> {
    if (limit < 0) return capture_time(g, k, options);
    return capture_time_within(g, k, limit, options);
  });
}

namespace {

// One synchronous round. Returns the newly forced vertices.
std::vector<Vertex> psd_round(const Graph& g, const std::vector<char>& blue) {
  const Vertex n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int comps = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (blue[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = comps;
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (!blue[static_cast<std::size_t>(w)] && comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = comps;
          stack.push_back(w);
        }
    }
    ++comps;
  }
  std::vector<Vertex> forced;
  std::vector<std::pair<int, Vertex>> white;
  for (Vertex v = 0; v < n; ++v) {
    if (!blue[static_cast<std::size_t>(v)]) continue;
    white.clear();
    for (Vertex w : g.neighbors(v))
      if (!blue[static_cast<std::size_t>(w)]) white.emplace_back(comp[static_cast<std::size_t>(w)], w);
    std::sort(white.begin(), white.end());
    for (std::size_t i = 0; i < white.size();) {
      std::size_t j = i;
      while (j < white.size() && white[j].first == white[i].first) ++j;
      if (j - i == 1) forced.push_back(white[i].second);
      i = j;
    }
  }
  std::sort(forced.begin(), forced.end());
  forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
  return forced;
}

std::vector<char> initial_blue(const Graph& g, const VertexSet& initial) {
  if (initial.empty()) throw PreconditionError("initial blue set is empty");
  std::vector<char> blue(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : initial) {
    if (v < 0 || v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    blue[static_cast<std::size_t>(v)] = 1;
  }
  return blue;
}

// Propagation time if at most `limit` rounds (limit < 0: unbounded).
std::optional<GameOutcome> psd_within(const Graph& g, std::vector<char> blue, int limit) {
  auto count = static_cast<Vertex>(std::count(blue.begin(), blue.end(), 1));
  for (int round = 0;; ++round) {
    if (count == g.order()) return GameOutcome::captured(round);
    if (limit >= 0 && round >= limit) return std::nullopt;
    auto forced = psd_round(g, blue);
    if (forced.empty()) return limit >= 0 ? std::nullopt : std::optional(GameOutcome::evasion());
    for (Vertex w : forced) blue[static_cast<std::size_t>(w)] = 1;
    count += static_cast<Vertex>(forced.size());
  }
}

// Calls fn(subset) for every k-subset of 0..n-1 in lexicographic order.
template <typename Fn>
void for_each_subset(Vertex n, int k, Fn fn) {
  std::vector<Vertex> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
  for (;;) {
    fn(s);
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::uint64_t subset_states(Vertex n, int k) {
  const std::uint64_t sets = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (sets > kMax / static_cast<std::uint64_t>(std::max<Vertex>(n, 1))) return kMax;
  return sets * static_cast<std::uint64_t>(n);
}

}  // namespace

GameOutcome psd_prop_time(const Graph& g, const VertexSet& initial) {
  return *psd_within(g, initial_blue(g, initial), -1);
}

std::vector<ForcingState> psd_forcing_trace(const Graph& g, const VertexSet& initial) {
  std::vector<char> blue = initial_blue(g, initial);
  std::vector<ForcingState> trace;
  auto snapshot = [&](int round) {
    ForcingState st;
    st.round = round;
    for (Vertex v = 0; v < g.order(); ++v)
      if (blue[static_cast<std::size_t>(v)]) st.blue.push_back(v);
    trace.push_back(std::move(st));
  };
  snapshot(0);
  for (int round = 1; trace.back().blue.size() < static_cast<std::size_t>(g.order()); ++round) {
    auto forced = psd_round(g, blue);
    if (forced.empty()) break;
    for (Vertex w : forced) blue[static_cast<std::size_t>(w)] = 1;
    snapshot(round);
  }
  return trace;
}

ThrottleResult throttle_psd(const Graph& g, const SolverOptions& options) {
  if (g.order() == 0) throw PreconditionError("empty graph");
  return throttle_loop(g, Objective::psd, options, [&](int k, int limit) -> std::optional<GameOutcome> {
    check_budget(subset_states(g.order(), k), options);
    std::optional<int> best;
    for_each_subset(g.order(), k, [&](const std::vector<Vertex>& s) {
      int cap = limit;
      if (best) cap = cap >= 0 ? std::min(cap, *best - 1) : *best - 1;
      if (best && cap < 0) return;
      auto r = psd_within(g, initial_blue(g, s), cap);
      if (r && r->rounds) best = *r->rounds;
    });
    if (best) return GameOutcome::captured(*best);
    if (limit >= 0) return std::nullopt;
    return GameOutcome::evasion();
  });
}

int k_radius(const Graph& g, int k, const SolverOptions& options) {
  require_connected(g);
  const Vertex n = g.order();
  if (k < 1) throw PreconditionError("need k >= 1");
  if (k >= n) return 0;
  check_budget(subset_states(n, k), options);
  const std::vector<int> dist = distance_matrix(g);
  const auto un = static_cast<std::size_t>(n);
  // near[d] holds min distance to the first d chosen centers.
  std::vector<std::vector<int>> near(static_cast<std::size_t>(k + 1), std::vector<int>(un, std::numeric_limits<int>::max()));
  int best = std::numeric_limits<int>::max();
  auto extend = [&](auto&& self, int depth, Vertex start) -> void {
    if (depth == k) {
      int worst = *std::max_element(near[static_cast<std::size_t>(k)].begin(), near[static_cast<std::size_t>(k)].end());
      best = std::min(best, worst);
      return;
    }
    for (Vertex v = start; v <= n - (k - depth); ++v) {
      const auto& prev = near[static_cast<std::size_t>(depth)];
      auto& cur = near[static_cast<std::size_t>(depth + 1)];
      const int* row = &dist[static_cast<std::size_t>(v) * un];
      for (std::size_t u = 0; u < un; ++u) cur[u] = std::min(prev[u], row[u]);
      self(self, depth + 1, v + 1);
    }
  };
  extend(extend, 0, 0);
  return best;
}

ThrottleResult throttle_radius(const Graph& g, const SolverOptions& options) {
  require_connected(g);
  return throttle_loop(g, Objective::radius, options, [&](int k, int) -> std::optional<GameOutcome> {
    return GameOutcome::captured(k_radius(g, k, options));
  });
}

ThrottleResult solve(const Graph& g, Objective objective, const SolverOptions& options) {
  switch (objective) {
    case Objective::robber: return throttle_robber(g, options);
    case Objective::psd: return throttle_psd(g, options);
    case Objective::radius: return throttle_radius(g, options);
  }
  return throttle_robber(g, options);
}

}  // namespace throttle
