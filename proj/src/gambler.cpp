#include "throttlekit/gambler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "throttlekit/bounds.hpp"
#include "throttlekit/metrics.hpp"
#include "throttlekit/rng.hpp"

namespace throttle {

std::string to_string(GamblerVariant variant) {
  switch (variant) {
    case GamblerVariant::known: return "known";
    case GamblerVariant::unknown: return "unknown";
    case GamblerVariant::one_observed: return "one_observed";
  }
  return "unknown";
}

GamblerVariant gambler_variant_from_string(const std::string& text) {
  if (text == "known") return GamblerVariant::known;
  if (text == "unknown") return GamblerVariant::unknown;
  if (text == "one_observed") return GamblerVariant::one_observed;
  throw PreconditionError("unknown gambler variant '" + text + "'");
}

GamblerModel GamblerModel::uniform(Vertex n, GamblerVariant variant) {
  if (n < 1) throw PreconditionError("uniform distribution needs n >= 1");
  return {std::vector<double>(static_cast<std::size_t>(n), 1.0 / n), variant};
}

GamblerModel GamblerModel::degree_proportional(const Graph& g, GamblerVariant variant) {
  if (g.edge_count() == 0) throw PreconditionError("degree-proportional distribution needs an edge");
  GamblerModel m;
  m.variant = variant;
  const double total = 2.0 * static_cast<double>(g.edge_count());
  for (Vertex v = 0; v < g.order(); ++v) m.p.push_back(static_cast<double>(g.degree(v)) / total);
  return m;
}

GamblerModel GamblerModel::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("distribution JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("p") || !doc["p"].is_array())
    throw PreconditionError("distribution JSON needs an array field \"p\"");
  GamblerModel m;
  for (const auto& x : doc["p"]) {
    if (!x.is_number()) throw PreconditionError("distribution entries must be numbers");
    m.p.push_back(x.get<double>());
  }
  if (doc.contains("variant")) m.variant = gambler_variant_from_string(doc["variant"].get<std::string>());
  return m;
}

void GamblerModel::validate(Vertex n) const {
  if (p.size() != static_cast<std::size_t>(n))
    throw PreconditionError("distribution has " + std::to_string(p.size()) + " entries for " + std::to_string(n) +
                            " vertices");
  long double sum = 0;
  for (double x : p) {
    if (!(x >= 0) || !std::isfinite(x)) throw PreconditionError("distribution entries must be non-negative");
    sum += x;
  }
  if (std::abs(static_cast<double>(sum - 1.0L)) > 1e-12) throw PreconditionError("distribution does not sum to 1");
}

void CopPolicy::validate(const Graph& g) const {
  if (walks.empty()) throw PreconditionError("policy has no cops");
  for (const auto& w : walks) {
    if (w.empty()) throw PreconditionError("policy walk is empty");
    for (std::size_t i = 0; i < w.size(); ++i) {
      Vertex a = w[i], b = w[(i + 1) % w.size()];
      if (a < 0 || a >= g.order()) throw PreconditionError("policy walk leaves the graph");
      if (a != b && !g.has_edge(a, b)) throw PreconditionError("policy walk takes a non-edge step");
    }
  }
}

CopPolicy camping_policy(const VertexSet& cops) {
  CopPolicy policy;
  policy.id = "camping";
  for (Vertex v : cops) policy.walks.push_back({v});
  return policy;
}

namespace {

// Closed depth-first tour of the BFS tree of g[members] from `root`; the
// return to `root` is implied by the wrap-around.
std::vector<Vertex> tree_tour(const Graph& g, const VertexSet& members, Vertex root) {
  InducedSubgraph sub = induced_subgraph(g, members);
  const auto local_root =
      static_cast<Vertex>(std::lower_bound(members.begin(), members.end(), root) - members.begin());
  if (local_root >= static_cast<Vertex>(members.size()) || members[static_cast<std::size_t>(local_root)] != root)
    throw PreconditionError("tour root is not in its region");
  RootedTree tree = spanning_tree(sub.graph, local_root);
  std::vector<Vertex> tour;
  std::vector<std::pair<Vertex, std::size_t>> stack{{local_root, 0}};
  tour.push_back(root);
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    auto kids = tree.children(u);
    if (next < kids.size()) {
      Vertex w = kids[next++];
      tour.push_back(sub.mapping[static_cast<std::size_t>(w)]);
      stack.emplace_back(w, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) tour.push_back(sub.mapping[static_cast<std::size_t>(stack.back().first)]);
    }
  }
  if (tour.size() > 1) tour.pop_back();
  return tour;
}

}  // namespace

CopPolicy sweep_policy(const Graph& g, Vertex root) {
  if (root < 0 || root >= g.order()) throw PreconditionError("sweep root out of range");
  if (!is_connected(g)) throw PreconditionError("sweep needs a connected graph");
  CopPolicy policy;
  policy.id = "sweep";
  policy.walks.push_back(tree_tour(g, all_vertices(g), root));
  return policy;
}

CopPolicy region_sweep_policy(const Graph& g, const CoverPlan& plan) {
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (const auto& region : plan.regions)
    for (Vertex v : region) covered[static_cast<std::size_t>(v)] = 1;
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    throw PreconditionError("region sweep needs regions covering every vertex");
  CopPolicy policy;
  policy.id = "region_sweep";
  for (std::size_t i = 0; i < plan.regions.size(); ++i) {
    Vertex start = i < plan.centers.size() ? plan.centers[i] : plan.regions[i].front();
    policy.walks.push_back(tree_tour(g, plan.regions[i], start));
  }
  return policy;
}

namespace {

// Rounds until a cop stands on the gambler's draw; `hit` is false when
// max_rounds passed without capture.
std::int64_t one_trial(const std::vector<double>& cdf, const CopPolicy& policy, std::uint64_t seed,
                       std::uint64_t trial, std::int64_t max_rounds, bool& hit) {
  CounterRng rng(seed, trial);
  const auto last = static_cast<Vertex>(cdf.size()) - 1;
  for (std::int64_t round = 1; round <= max_rounds; ++round) {
    const double u = rng.uniform01() * cdf.back();
    auto v = static_cast<Vertex>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    v = std::min(v, last);
    for (std::size_t c = 0; c < policy.cop_count(); ++c)
      if (policy.position(c, round) == v) {
        hit = true;
        return round;
      }
  }
  hit = false;
  return max_rounds;
}

std::vector<double> cumulative(const std::vector<double>& p) {
  std::vector<double> cdf(p.size());
  std::partial_sum(p.begin(), p.end(), cdf.begin());
  return cdf;
}

struct TrialRun {
  std::vector<std::int64_t> rounds;
  std::vector<char> captured;
};

void run_trials(const std::vector<double>& cdf, const CopPolicy& policy, std::uint64_t seed, std::int64_t begin,
                std::int64_t end, std::int64_t max_rounds, TrialRun& out) {
  for (std::int64_t trial = begin; trial < end; ++trial) {
    bool hit = false;
    out.rounds[static_cast<std::size_t>(trial)] =
        one_trial(cdf, policy, seed, static_cast<std::uint64_t>(trial), max_rounds, hit);
    out.captured[static_cast<std::size_t>(trial)] = hit ? 1 : 0;
  }
}

}  // namespace

std::int64_t gambler_trial(const GamblerModel& model, const CopPolicy& policy, std::uint64_t seed,
                           std::uint64_t trial, std::int64_t max_rounds) {
  bool hit = false;
  return one_trial(cumulative(model.p), policy, seed, trial, max_rounds, hit);
}

EctEstimate simulate_gambler(const Graph& g, const GamblerModel& model, const CopPolicy& policy,
                             std::int64_t trials, std::uint64_t seed, const SimulationOptions& options) {
  if (trials < 1) throw PreconditionError("need at least one trial");
  if (options.max_rounds < 1) throw PreconditionError("max_rounds must be positive");
  model.validate(g.order());
  policy.validate(g);

  const std::vector<double> cdf = cumulative(model.p);
  TrialRun run;
  run.rounds.assign(static_cast<std::size_t>(trials), 0);
  run.captured.assign(static_cast<std::size_t>(trials), 0);
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(std::min<std::int64_t>(trials, 256))));
  if (jobs == 1) {
    run_trials(cdf, policy, seed, 0, trials, options.max_rounds, run);
  } else {
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      const std::int64_t begin = trials * j / jobs, end = trials * (j + 1) / jobs;
      workers.emplace_back(run_trials, std::cref(cdf), std::cref(policy), seed, begin, end, options.max_rounds,
                           std::ref(run));
    }
    for (auto& w : workers) w.join();
  }

  // Reduction in trial order keeps the result independent of `jobs`.
  EctEstimate est;
  est.trials = trials;
  est.policy_id = policy.id;
  est.seed = seed;
  long double sum = 0;
  for (std::size_t i = 0; i < run.rounds.size(); ++i) {
    sum += static_cast<long double>(run.rounds[i]);
    if (!run.captured[i]) ++est.censored;
  }
  const long double mean = sum / static_cast<long double>(trials);
  long double ss = 0;
  for (auto r : run.rounds) ss += (r - mean) * (r - mean);
  est.mean_rounds = static_cast<double>(mean);
  if (trials > 1) {
    const long double sigma = std::sqrt(ss / static_cast<long double>(trials - 1));
    est.std_error = static_cast<double>(sigma / std::sqrt(static_cast<long double>(trials)));
  }
  return est;
}

double gambler_bound(std::int64_t n, GamblerVariant variant) {
  if (n < 0) throw PreconditionError("n must be non-negative");
  const double c = variant == GamblerVariant::unknown ? gambler_unknown_constant() : 1.5;
  return std::sqrt(7 * c) * std::sqrt(static_cast<double>(n));
}

}  // namespace throttle
