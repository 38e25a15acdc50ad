#include "throttlekit/serialize.hpp"

namespace throttle {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

void to_json(json& j, const GameOutcome& v) {
  j = json{{"captured", v.is_captured()}, {"rounds", optional_json(v.rounds)}};
}

void to_json(json& j, const KCost& v) {
  j = json{{"k", v.k}, {"cost", optional_json(v.cost)}, {"exact", v.exact}};
}

void to_json(json& j, const ThrottleResult& v) {
  j = json{{"value", v.value},
           {"best_k", v.best_k},
           {"objective", to_string(v.objective)},
           {"complete", v.complete},
           {"per_k", v.per_k}};
}

void to_json(json& j, const ForcingState& v) { j = json{{"round", v.round}, {"blue", v.blue}}; }

void to_json(json& j, const PlanDiagnostics& v) {
  j = json{{"r", v.r},
           {"b", v.b},
           {"s", v.s},
           {"c", optional_json(v.c)},
           {"x", v.x},
           {"b_threshold", v.b_threshold},
           {"b_limit", v.b_limit}};
}

void to_json(json& j, const CoverPlan& v) {
  j = json{{"n", v.n},
           {"regions", v.regions},
           {"anchors", v.anchors},
           {"centers", v.centers},
           {"guards", v.guards},
           {"k", v.cop_count},
           {"max_region", v.max_region},
           {"max_radius", v.max_radius},
           {"case_tag", to_string(v.case_tag)},
           {"diagnostics", v.diagnostics}};
}

void to_json(json& j, const TreePartition& v) {
  j = json{{"parts", v.parts}, {"anchors", v.anchors}, {"x", v.x}, {"s", v.s()}};
}

void to_json(json& j, const LimbSplit& v) { j = json{{"s", v.s}, {"v", v.v}}; }

void to_json(json& j, const Bipartition& v) { j = json{{"s0", v.s0}, {"s1", v.s1}}; }

void to_json(json& j, const PursuitStep& v) { j = json{{"cops", v.cops}, {"robber", v.robber}}; }

void to_json(json& j, const PursuitTrace& v) {
  j = json{{"rounds", v.rounds},
           {"captured", v.captured},
           {"region_of_capture", optional_json(v.region_of_capture)},
           {"history", v.history}};
}

void to_json(json& j, const StretchedEdge& v) { j = json{{"u", v.u}, {"v", v.v}, {"middle", v.middle}}; }

void to_json(json& j, const FlattenResult& v) {
  json edges = json::array();
  for (auto [a, b] : v.tree.edges()) edges.push_back({a, b});
  j = json{{"tree_order", v.tree.order()},
           {"tree_edges", edges},
           {"root", v.root},
           {"fibers", v.fibers},
           {"anchor_map", v.anchor_map},
           {"stretched", v.stretched}};
}

void to_json(json& j, const SpiderSpec& v) {
  j = json{{"n", v.n},
           {"short_leg_count", v.short_leg_count},
           {"short_leg_length", v.short_leg_length},
           {"long_leg_length", v.long_leg_length},
           {"a", v.a},
           {"c", v.c}};
}

void to_json(json& j, const WitnessSummary& v) {
  j = json{{"cop_count", v.cop_count},
           {"max_region", v.max_region},
           {"max_radius", v.max_radius},
           {"time_term", v.time_term},
           {"case_tag", to_string(v.case_tag)},
           {"regions", v.regions}};
}

void to_json(json& j, const BoundReport& v) {
  j = json{{"n", v.n},
           {"family", to_string(v.family)},
           {"coefficient", v.coefficient},
           {"constant_C", v.constant_C},
           {"threshold_N0", optional_json(v.threshold_N0)},
           {"k_cycles", optional_json(v.k_cycles)},
           {"c", optional_json(v.c)},
           {"upper", v.upper},
           {"witness", optional_json(v.witness)},
           {"achieved", optional_json(v.achieved)},
           {"verdict", v.pass ? json(*v.pass ? "PASS" : "FAIL") : json(nullptr)}};
}

void to_json(json& j, const EctEstimate& v) {
  j = json{{"mean_rounds", v.mean_rounds},
           {"trials", v.trials},
           {"std_error", v.std_error},
           {"policy_id", v.policy_id},
           {"seed", v.seed},
           {"censored", v.censored}};
}

}  // namespace throttle
