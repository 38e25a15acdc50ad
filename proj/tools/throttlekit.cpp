// throttlekit command-line driver.
//
// Exit codes: 0 ok, 1 error, 2 certify verdict FAIL, 3 state budget exhausted.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "throttlekit/bounds.hpp"
#include "throttlekit/decomposition.hpp"
#include "throttlekit/gambler.hpp"
#include "throttlekit/generators.hpp"
#include "throttlekit/io.hpp"
#include "throttlekit/metrics.hpp"
#include "throttlekit/serialize.hpp"
#include "throttlekit/solvers.hpp"
#include "throttlekit/strategies.hpp"
#include "throttlekit/sweep.hpp"

namespace {

using nlohmann::json;
using namespace throttle;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;
constexpr int kExitBudget = 3;
constexpr int kFormatVersion = 1;

struct Options {
  std::string input;
  std::string family;
  std::string objective = "robber";
  std::optional<int> k;
  double c = 0.5;
  std::uint64_t seed = 1;
  std::int64_t trials = 100000;
  std::optional<std::uint64_t> state_budget;
  int jobs = 1;
  std::string emit = "json";
  std::string out;
  std::optional<int> k_max;

  std::string planner = "auto";
  std::string policy = "camping";
  std::vector<Vertex> cops{0};
  std::string distribution = "uniform";
  std::string variant = "unknown";
  std::int64_t max_rounds = 10'000'000;

  std::string kind = "trees";
  std::vector<std::int64_t> ns;
  std::string log_range;
  int seeds = 1;
  double level = 1.4502;
};

std::uint64_t resolve_budget(const Options& o) {
  if (o.state_budget) return *o.state_budget;
  if (const char* env = std::getenv("THROTTLEKIT_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string("THROTTLEKIT_BUDGET is not a positive integer: '") + env + "'");
  }
  return SolverOptions{}.state_budget;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const Options& o) {
  if (o.input.empty() == o.family.empty()) throw PreconditionError("give exactly one of --input and --family");
  if (!o.family.empty()) return generate(FamilySpec::parse(o.family));
  return parse_graph(read_file(o.input), format_from_path(o.input));
}

// The part of the configuration that determines the artifact.
json base_config(const std::string& command, const Options& o) {
  json j{{"command", command}, {"emit", o.emit}, {"format_version", kFormatVersion}};
  if (!o.input.empty()) j["input"] = o.input;
  if (!o.family.empty()) j["family"] = FamilySpec::parse(o.family).to_string();
  return j;
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw Error("cannot write '" + o.out + "'");
  out << text;
  if (!out) throw Error("write to '" + o.out + "' failed");
}

std::string json_artifact(const json& config, const char* key, const json& value) {
  return json{{"config", config}, {key, value}}.dump(2) + "\n";
}

std::string csv_header(const std::string& command, const json& config, const std::string& columns) {
  return "# throttlekit-" + command + " v" + std::to_string(kFormatVersion) + " config=" + config.dump() + "\n" +
         columns + "\n";
}

std::string dot_artifact(const json& config, const std::string& dot) {
  return "// throttlekit config=" + config.dump() + "\n" + dot;
}

void require_emit(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.emit == a) return;
  throw PreconditionError("--emit " + o.emit + " is not available for this command");
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

int cmd_solve(const Options& o) {
  require_emit(o, {"json", "csv"});
  Graph g = load_graph(o);
  SolverOptions so;
  so.state_budget = resolve_budget(o);
  so.k_max = o.k_max;
  const Objective objective = objective_from_string(o.objective);
  json config = base_config("solve", o);
  config["objective"] = o.objective;
  config["state_budget"] = so.state_budget;
  config["k_max"] = o.k_max ? json(*o.k_max) : json(nullptr);
  config["k"] = o.k ? json(*o.k) : json(nullptr);

  if (o.k) {
    KCost cost{*o.k, std::nullopt, true};
    switch (objective) {
      case Objective::robber: cost.cost = capture_time(g, *o.k, so).rounds; break;
      case Objective::radius: cost.cost = k_radius(g, *o.k, so); break;
      case Objective::psd: throw PreconditionError("--k is available for the robber and radius objectives");
    }
    if (o.emit == "json") {
      write_output(o, json_artifact(config, "result", json(cost)));
    } else {
      write_output(o, csv_header("solve", config, "n,objective,k,cost") + std::to_string(g.order()) + "," +
                          o.objective + "," + std::to_string(*o.k) + "," + opt_str(cost.cost) + "\n");
    }
    return kExitOk;
  }

  ThrottleResult result = solve(g, objective, so);
  if (o.emit == "json") {
    write_output(o, json_artifact(config, "result", json(result)));
  } else {
    std::string text = csv_header("solve", config, "n,objective,k,cost,exact,value,best_k,complete");
    for (const auto& kc : result.per_k)
      text += std::to_string(g.order()) + "," + o.objective + "," + std::to_string(kc.k) + "," + opt_str(kc.cost) +
              "," + (kc.exact ? "1" : "0") + "," + std::to_string(result.value) + "," +
              std::to_string(result.best_k) + "," + (result.complete ? "1" : "0") + "\n";
    write_output(o, text);
  }
  return kExitOk;
}

CoverPlan make_plan(const Graph& g, const Options& o) {
  std::string planner = o.planner;
  if (planner == "auto") {
    if (!is_tree(g) && is_cactus(g))
      planner = "cactus";
    else
      planner = "cover";
  }
  if (planner == "cover") return plan_cover(g, o.c);
  if (planner == "spider") return spider_cover(g);
  if (planner == "cactus") return cactus_plan(g);
  throw PreconditionError("unknown planner '" + o.planner + "'");
}

json plan_config(const std::string& command, const Options& o) {
  json config = base_config(command, o);
  config["planner"] = o.planner;
  config["c"] = o.c;
  return config;
}

std::vector<int> region_groups(const CoverPlan& plan) {
  std::vector<int> groups(static_cast<std::size_t>(plan.n), -1);
  for (std::size_t i = 0; i < plan.regions.size(); ++i)
    for (Vertex v : plan.regions[i])
      if (groups[static_cast<std::size_t>(v)] < 0) groups[static_cast<std::size_t>(v)] = static_cast<int>(i);
  return groups;
}

int cmd_plan(const Options& o) {
  require_emit(o, {"json", "csv", "dot"});
  Graph g = load_graph(o);
  CoverPlan plan = make_plan(g, o);
  json config = plan_config("plan", o);
  if (o.emit == "json") {
    write_output(o, json_artifact(config, "plan", json(plan)));
  } else if (o.emit == "dot") {
    write_output(o, dot_artifact(config, emit_dot(g, region_groups(plan), "plan")));
  } else {
    std::string text = csv_header("plan", config, "region,vertex,center");
    for (std::size_t i = 0; i < plan.regions.size(); ++i)
      for (Vertex v : plan.regions[i])
        text += std::to_string(i) + "," + std::to_string(v) + "," +
                (i < plan.centers.size() ? std::to_string(plan.centers[i]) : std::string()) + "\n";
    write_output(o, text);
  }
  return kExitOk;
}

int cmd_certify(const Options& o) {
  require_emit(o, {"json", "csv"});
  Graph g = load_graph(o);
  CoverPlan plan = make_plan(g, o);
  BoundReport report = certify(g, plan, o.c);
  json config = plan_config("certify", o);
  if (o.emit == "json") {
    write_output(o, json_artifact(config, "report", json(report)));
  } else {
    std::ostringstream row;
    row.precision(10);
    row << report.n << ',' << to_string(report.family) << ',' << report.coefficient << ',' << report.constant_C << ','
        << opt_str(report.threshold_N0) << ',' << (*report.pass ? "PASS" : "FAIL") << '\n';
    write_output(o, csv_header("certify", config, "n,family,coefficient,C,N0,verdict") + row.str());
  }
  return *report.pass ? kExitOk : kExitFail;
}

int cmd_flatten(const Options& o) {
  require_emit(o, {"json", "csv", "dot"});
  Graph g = load_graph(o);
  FlattenResult flat = cactus_flatten(g);
  json config = base_config("flatten", o);
  if (o.emit == "json") {
    write_output(o, json_artifact(config, "flatten", json(flat)));
  } else if (o.emit == "dot") {
    std::vector<int> groups(flat.anchor_map.begin(), flat.anchor_map.end());
    write_output(o, dot_artifact(config, emit_dot(g, groups, "flatten")));
  } else {
    std::string text = csv_header("flatten", config, "vertex,tree_vertex");
    for (std::size_t v = 0; v < flat.anchor_map.size(); ++v)
      text += std::to_string(v) + "," + std::to_string(flat.anchor_map[v]) + "\n";
    write_output(o, text);
  }
  return kExitOk;
}

int cmd_simulate(const Options& o) {
  require_emit(o, {"json", "csv"});
  Graph g = load_graph(o);
  const GamblerVariant variant = gambler_variant_from_string(o.variant);
  GamblerModel model;
  if (o.distribution == "uniform")
    model = GamblerModel::uniform(g.order(), variant);
  else if (o.distribution == "degree")
    model = GamblerModel::degree_proportional(g, variant);
  else
    model = GamblerModel::from_json(read_file(o.distribution));

  CopPolicy policy;
  if (o.policy == "camping")
    policy = camping_policy(make_vertex_set(o.cops));
  else if (o.policy == "sweep")
    policy = sweep_policy(g, o.cops.empty() ? 0 : o.cops.front());
  else if (o.policy == "region_sweep")
    policy = region_sweep_policy(g, plan_cover(g, o.c));
  else
    throw PreconditionError("unknown policy '" + o.policy + "'");

  SimulationOptions so;
  so.jobs = o.jobs;
  so.max_rounds = o.max_rounds;
  EctEstimate est = simulate_gambler(g, model, policy, o.trials, o.seed, so);

  json config = base_config("simulate", o);
  config["policy"] = o.policy;
  config["cops"] = o.cops;
  config["distribution"] = o.distribution;
  config["variant"] = o.variant;
  config["trials"] = o.trials;
  config["seed"] = o.seed;
  config["max_rounds"] = o.max_rounds;
  if (o.policy == "region_sweep") config["c"] = o.c;
  // jobs does not change the result and is left out so artifacts compare equal.

  if (o.emit == "json") {
    json result = est;
    result["cop_count"] = policy.cop_count();
    result["bound"] = gambler_bound(g.order(), variant);
    write_output(o, json_artifact(config, "estimate", result));
  } else {
    std::ostringstream row;
    row.precision(10);
    row << g.order() << ',' << est.policy_id << ',' << policy.cop_count() << ',' << est.trials << ','
        << est.mean_rounds << ',' << est.std_error << ',' << est.censored << '\n';
    write_output(o, csv_header("simulate", config, "n,policy,cops,trials,mean_rounds,std_error,censored") +
                        row.str());
  }
  return kExitOk;
}

int cmd_family(const Options& o) {
  require_emit(o, {"json", "csv", "dot"});
  if (o.family.empty()) throw PreconditionError("family needs --family");
  Graph g = load_graph(o);
  json config = base_config("family", o);
  if (o.emit == "json") {
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    write_output(o, json_artifact(config, "graph", json{{"n", g.order()}, {"edges", edges}}));
  } else if (o.emit == "dot") {
    write_output(o, dot_artifact(config, emit_dot(g)));
  } else {
    std::string text = csv_header("family", config, "u,v");
    for (auto [a, b] : g.edges()) text += std::to_string(a) + "," + std::to_string(b) + "\n";
    write_output(o, text);
  }
  return kExitOk;
}

int cmd_sweep(const Options& o) {
  require_emit(o, {"csv"});
  SweepConfig sc;
  sc.kind = sweep_kind_from_string(o.kind);
  sc.ns = o.ns;
  if (!o.log_range.empty()) {
    // Bounds may be written as 1e6.
    double lo = 0, hi = 0;
    int per = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(o.log_range);
    if (!(in >> lo >> c1 >> hi >> c2 >> per) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof() || lo < 1 ||
        hi > 9e18)
      throw PreconditionError("--log wants lo:hi:per_decade");
    auto more = log_spaced(static_cast<std::int64_t>(std::llround(lo)), static_cast<std::int64_t>(std::llround(hi)), per);
    sc.ns.insert(sc.ns.end(), more.begin(), more.end());
  }
  sc.seeds = o.seeds;
  sc.seed = o.seed;
  sc.c = o.c;
  sc.level = o.level;
  sc.state_budget = resolve_budget(o);
  write_output(o, run_sweep(sc));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"throttlekit: cop throttling solvers, cover planners and bound certificates"};
  app.require_subcommand(1);
  Options o;

  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "graph file (.g6/.graph6 or edge list)");
    sub->add_option("--family", o.family, "family spec, e.g. path:8 or random_tree:400:seed=1");
  };
  auto common = [&](CLI::App* sub, const char* emit_help) {
    sub->add_option("--emit", o.emit, emit_help);
    sub->add_option("--out", o.out, "output path (default stdout)");
  };

  auto* solve = app.add_subcommand("solve", "exact throttling number");
  graph_opts(solve);
  common(solve, "json|csv");
  solve->add_option("--objective", o.objective, "robber|psd|radius")
      ->check(CLI::IsMember({"robber", "psd", "radius"}));
  solve->add_option("--k", o.k, "solve for this many cops only");
  solve->add_option("--k-max", o.k_max, "largest k tried");
  solve->add_option("--state-budget", o.state_budget, "state budget (env THROTTLEKIT_BUDGET)");

  for (auto [name, help] : {std::pair{"plan", "cover plan"}, std::pair{"certify", "bind a cover plan to its bound"}}) {
    auto* sub = app.add_subcommand(name, help);
    graph_opts(sub);
    common(sub, std::string(name) == "plan" ? "json|csv|dot" : "json|csv");
    sub->add_option("--c", o.c, "cover constant");
    sub->add_option("--planner", o.planner, "auto|cover|spider|cactus")
        ->check(CLI::IsMember({"auto", "cover", "spider", "cactus"}));
  }

  auto* flatten = app.add_subcommand("flatten", "flatten a cactus onto a tree");
  graph_opts(flatten);
  common(flatten, "json|csv|dot");

  auto* simulate = app.add_subcommand("simulate", "gambler expected capture time");
  graph_opts(simulate);
  common(simulate, "json|csv");
  simulate->add_option("--policy", o.policy, "camping|sweep|region_sweep")
      ->check(CLI::IsMember({"camping", "sweep", "region_sweep"}));
  simulate->add_option("--cops", o.cops, "camping vertices, or the sweep start")->delimiter(',');
  simulate->add_option("--distribution", o.distribution, "uniform|degree|<path to JSON>");
  simulate->add_option("--variant", o.variant, "known|unknown|one_observed");
  simulate->add_option("--trials", o.trials, "trials");
  simulate->add_option("--seed", o.seed, "seed");
  simulate->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  simulate->add_option("--max-rounds", o.max_rounds, "rounds before a trial is censored");
  simulate->add_option("--c", o.c, "cover constant for region_sweep");

  auto* family = app.add_subcommand("family", "generate a family member");
  family->add_option("--family", o.family, "family spec")->required();
  common(family, "json|csv|dot");

  auto* sweep = app.add_subcommand("sweep", "CSV sweep over orders and seeds");
  sweep->add_option("--kind", o.kind, "paths|lower|trees|spiders|cacti")
      ->check(CLI::IsMember({"paths", "lower", "trees", "spiders", "cacti"}));
  sweep->add_option("--n", o.ns, "orders")->delimiter(',');
  sweep->add_option("--log", o.log_range, "log-spaced orders lo:hi:per_decade");
  sweep->add_option("--seeds", o.seeds, "instances per order");
  sweep->add_option("--seed", o.seed, "first seed");
  sweep->add_option("--c", o.c, "cover constant");
  sweep->add_option("--level", o.level, "ratio level for --kind lower");
  sweep->add_option("--state-budget", o.state_budget, "state budget (env THROTTLEKIT_BUDGET)");
  common(sweep, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*sweep && sweep->count("--emit") == 0) o.emit = "csv";
    if (*solve) return cmd_solve(o);
    if (app.got_subcommand("plan")) return cmd_plan(o);
    if (app.got_subcommand("certify")) return cmd_certify(o);
    if (*flatten) return cmd_flatten(o);
    if (*simulate) return cmd_simulate(o);
    if (*family) return cmd_family(o);
    if (*sweep) return cmd_sweep(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "throttlekit: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "throttlekit: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
