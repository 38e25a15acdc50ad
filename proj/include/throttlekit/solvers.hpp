#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "throttlekit/graph.hpp"

namespace throttle {

/// Rounds until capture (or until every vertex is blue); empty = never.
struct GameOutcome {
  std::optional<int> rounds;

  static GameOutcome captured(int r) { return {r}; }
  static GameOutcome evasion() { return {std::nullopt}; }
  bool is_captured() const noexcept { return rounds.has_value(); }
  bool operator==(const GameOutcome&) const = default;
};

enum class Objective { robber, psd, radius };

std::string to_string(Objective objective);
Objective objective_from_string(const std::string& text);

/// cost(k) for one k. When `exact` is false, `cost` is a lower bound proving
/// that k + cost(k) cannot beat the best value already found.
struct KCost {
  int k = 0;
  std::optional<int> cost;  // empty: evasion / stall, treated as infinite
  bool exact = true;
  bool operator==(const KCost&) const = default;
};

struct ThrottleResult {
  int value = 0;
  int best_k = 0;
  std::vector<KCost> per_k;
  Objective objective = Objective::robber;
  /// True when the k loop stopped because k >= value, so no larger k can
  /// improve; false when it stopped at k_max.
  bool complete = true;
};

/// Blue set after `round` synchronous forcing rounds.
struct ForcingState {
  VertexSet blue;
  int round = 0;
};

struct SolverOptions {
  std::uint64_t state_budget = 50'000'000;
  std::optional<int> k_max;
};

/// Number of game states C(n+k-1, k) * n, saturating at UINT64_MAX.
std::uint64_t robber_state_count(Vertex n, int k);

/// Exact capt_k by backward induction. Throws BudgetExceeded when the state
/// count exceeds the budget and PreconditionError when g is disconnected.
GameOutcome capture_time(const Graph& g, int k, const SolverOptions& options = {});

/// capt_k if it is at most `limit`, otherwise nullopt (capt_k > limit, which
/// includes evasion). Only the first `limit` induction sweeps are run.
std::optional<GameOutcome> capture_time_within(const Graph& g, int k, int limit,
                                               const SolverOptions& options = {});

ThrottleResult throttle_robber(const Graph& g, const SolverOptions& options = {});

/// Synchronous positive semidefinite forcing from `initial`.
GameOutcome psd_prop_time(const Graph& g, const VertexSet& initial);
std::vector<ForcingState> psd_forcing_trace(const Graph& g, const VertexSet& initial);

ThrottleResult throttle_psd(const Graph& g, const SolverOptions& options = {});

/// Minimum over k-subsets D of the largest distance from a vertex to D.
int k_radius(const Graph& g, int k, const SolverOptions& options = {});

ThrottleResult throttle_radius(const Graph& g, const SolverOptions& options = {});

ThrottleResult solve(const Graph& g, Objective objective, const SolverOptions& options = {});

/// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace throttle
