#include "throttlekit/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "throttlekit/bounds.hpp"
#include "throttlekit/decomposition.hpp"
#include "throttlekit/generators.hpp"
#include "throttlekit/solvers.hpp"
#include "throttlekit/strategies.hpp"

namespace throttle {

std::string to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::paths: return "paths";
    case SweepKind::lower: return "lower";
    case SweepKind::trees: return "trees";
    case SweepKind::spiders: return "spiders";
    case SweepKind::cacti: return "cacti";
  }
  return "trees";
}

SweepKind sweep_kind_from_string(const std::string& text) {
  for (auto k : {SweepKind::paths, SweepKind::lower, SweepKind::trees, SweepKind::spiders, SweepKind::cacti})
    if (to_string(k) == text) return k;
  throw PreconditionError("unknown sweep kind '" + text + "'");
}

std::vector<std::int64_t> log_spaced(std::int64_t lo, std::int64_t hi, int per_decade) {
  if (lo < 1 || hi < lo || per_decade < 1) throw PreconditionError("bad log-spaced range");
  std::vector<std::int64_t> out;
  for (int i = 0;; ++i) {
    const auto n = static_cast<std::int64_t>(std::llround(static_cast<double>(lo) * std::pow(10.0, double(i) / per_decade)));
    if (n > hi) break;
    if (out.empty() || n > out.back()) out.push_back(n);
  }
  return out;
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

Vertex order_of(std::int64_t n) {
  if (n < 1 || n > 2'000'000'000) throw PreconditionError("order out of range for a graph");
  return static_cast<Vertex>(n);
}

void plan_row(std::ostringstream& out, std::int64_t n, std::uint64_t seed, const CoverPlan& plan,
              const BoundReport& r) {
  const auto& w = *r.witness;
  out << n << ',' << seed << ',' << to_string(plan.case_tag) << ',' << plan.diagnostics.b << ','
      << plan.diagnostics.s << ',' << w.regions << ',' << w.cop_count << ',' << w.max_region << ','
      << w.max_radius << ',' << w.time_term << ',' << num(*r.achieved) << ',' << num(r.upper) << ','
      << num(*r.achieved / std::sqrt(static_cast<double>(n))) << ',' << (*r.pass ? "PASS" : "FAIL") << '\n';
}

constexpr const char* kPlanColumns =
    "n,seed,case_tag,b,s,regions,cop_count,max_region,max_radius,time_term,achieved,upper,ratio,verdict";

}  // namespace

std::string run_sweep(const SweepConfig& config) {
  if (config.ns.empty()) throw PreconditionError("sweep needs at least one order");
  if (config.seeds < 1) throw PreconditionError("sweep needs at least one seed");
  std::ostringstream out;
  out << "# throttlekit-sweep v" << kSweepCsvVersion << " kind=" << to_string(config.kind) << " ns=";
  for (std::size_t i = 0; i < config.ns.size(); ++i) out << (i ? ";" : "") << config.ns[i];
  out << " seeds=" << config.seeds << " seed=" << config.seed << " c=" << num(config.c)
      << " level=" << num(config.level) << " state_budget=" << config.state_budget << '\n';

  SolverOptions opts;
  opts.state_budget = config.state_budget;

  switch (config.kind) {
    case SweepKind::paths:
      out << "n,robber,psd,radius,formula\n";
      for (auto n : config.ns) {
        Graph g = generate(FamilySpec::path(order_of(n)));
        out << n << ',' << throttle_robber(g, opts).value << ',' << throttle_psd(g, opts).value << ','
            << throttle_radius(g, opts).value << ',' << path_throttle_formula(n) << '\n';
      }
      break;
    case SweepKind::lower:
      out << "n,short_legs,short_length,long_length,case1,case2,lower,ratio,above\n";
      for (auto n : config.ns) {
        SpiderSpec spec = spider_lower_family(n);
        LowerBoundCases cases = lower_bound_cases(spec);
        const double ratio = cases.value() / std::sqrt(static_cast<double>(n));
        out << n << ',' << spec.short_leg_count << ',' << spec.short_leg_length << ',' << spec.long_leg_length << ','
            << num(cases.case1) << ',' << num(cases.case2) << ',' << num(cases.value()) << ',' << num(ratio) << ','
            << (ratio > config.level ? 1 : 0) << '\n';
      }
      break;
    case SweepKind::trees:
    case SweepKind::spiders:
    case SweepKind::cacti:
      out << kPlanColumns << '\n';
      for (auto n : config.ns)
        for (int i = 0; i < config.seeds; ++i) {
          const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
          Graph g;
          CoverPlan plan;
          double c = config.c;
          if (config.kind == SweepKind::trees) {
            g = generate(FamilySpec::random_tree(order_of(n), seed));
            plan = plan_cover(g, c);
          } else if (config.kind == SweepKind::spiders) {
            g = generate(FamilySpec::random_spider(order_of(n), seed));
            plan = spider_cover(g);
          } else {
            g = generate(FamilySpec::random_cactus(order_of(n), seed));
            plan = cactus_plan(g);
          }
          plan_row(out, n, seed, plan, certify(g, plan, c));
        }
      break;
  }
  return out.str();
}

}  // namespace throttle
