#pragma once

#include <json.hpp>

#include "throttlekit/bounds.hpp"
#include "throttlekit/decomposition.hpp"
#include "throttlekit/gambler.hpp"
#include "throttlekit/solvers.hpp"
#include "throttlekit/strategies.hpp"

namespace throttle {

// Key order follows nlohmann::json's sorted object map, so equal values
// always serialize to identical bytes.

void to_json(nlohmann::json& j, const GameOutcome& v);
void to_json(nlohmann::json& j, const KCost& v);
void to_json(nlohmann::json& j, const ThrottleResult& v);
void to_json(nlohmann::json& j, const ForcingState& v);
void to_json(nlohmann::json& j, const PlanDiagnostics& v);
void to_json(nlohmann::json& j, const CoverPlan& v);
void to_json(nlohmann::json& j, const TreePartition& v);
void to_json(nlohmann::json& j, const LimbSplit& v);
void to_json(nlohmann::json& j, const Bipartition& v);
void to_json(nlohmann::json& j, const PursuitStep& v);
void to_json(nlohmann::json& j, const PursuitTrace& v);
void to_json(nlohmann::json& j, const StretchedEdge& v);
void to_json(nlohmann::json& j, const FlattenResult& v);
void to_json(nlohmann::json& j, const SpiderSpec& v);
void to_json(nlohmann::json& j, const WitnessSummary& v);
void to_json(nlohmann::json& j, const BoundReport& v);
void to_json(nlohmann::json& j, const EctEstimate& v);

}  // namespace throttle
