#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "throttlekit/decomposition.hpp"
#include "throttlekit/graph.hpp"

namespace throttle {

enum class GamblerVariant { known, unknown, one_observed };

std::string to_string(GamblerVariant variant);
GamblerVariant gambler_variant_from_string(const std::string& text);

/// The gambler's per-round distribution over vertices.
struct GamblerModel {
  std::vector<double> p;
  GamblerVariant variant = GamblerVariant::unknown;

  static GamblerModel uniform(Vertex n, GamblerVariant variant = GamblerVariant::unknown);
  static GamblerModel degree_proportional(const Graph& g, GamblerVariant variant = GamblerVariant::unknown);
  /// {"p": [...], "variant": "unknown"}; variant is optional.
  static GamblerModel from_json(std::string_view text);

  /// Throws PreconditionError unless p has n non-negative entries summing to
  /// 1 within 1e-12.
  void validate(Vertex n) const;
};

/// Cops following fixed closed walks: cop i stands on walks[i][t mod len] in
/// round t. Positions never depend on the gambler, which plays unseen.
struct CopPolicy {
  std::string id;
  std::vector<std::vector<Vertex>> walks;

  std::size_t cop_count() const { return walks.size(); }
  Vertex position(std::size_t cop, std::int64_t round) const {
    const auto& w = walks[cop];
    return w[static_cast<std::size_t>(round % static_cast<std::int64_t>(w.size()))];
  }

  /// Throws PreconditionError when a walk leaves the graph or takes a step
  /// that is neither a stay nor an edge.
  void validate(const Graph& g) const;
};

CopPolicy camping_policy(const VertexSet& cops);
/// One cop walking the depth-first tour of the BFS tree from `root`.
CopPolicy sweep_policy(const Graph& g, Vertex root);
/// One cop per region, each touring its region from the region center.
CopPolicy region_sweep_policy(const Graph& g, const CoverPlan& plan);

struct EctEstimate {
  double mean_rounds = 0.0;
  std::int64_t trials = 0;
  double std_error = 0.0;
  std::string policy_id;
  std::uint64_t seed = 0;
  std::int64_t censored = 0;  // trials stopped at max_rounds without capture
};

struct SimulationOptions {
  int jobs = 1;
  std::int64_t max_rounds = 10'000'000;
};

/// Monte Carlo expected capture time. Trial i draws from CounterRng(seed, i),
/// so the estimate does not depend on `jobs`.
EctEstimate simulate_gambler(const Graph& g, const GamblerModel& model, const CopPolicy& policy,
                             std::int64_t trials, std::uint64_t seed, const SimulationOptions& options = {});

/// Rounds of one trial (capped at max_rounds).
std::int64_t gambler_trial(const GamblerModel& model, const CopPolicy& policy, std::uint64_t seed,
                           std::uint64_t trial, std::int64_t max_rounds);

/// sqrt(7c) sqrt(n) with c = 3 (1/(1 - e^-2) - 1/2) for the unknown gambler
/// and c = 3/2 otherwise.
double gambler_bound(std::int64_t n, GamblerVariant variant);

}  // namespace throttle
