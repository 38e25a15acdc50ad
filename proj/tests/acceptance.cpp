// Acceptance suite: one PASS/FAIL line per criterion, with the sub-checks
// that make it up listed underneath.
//
// Usage: acceptance [--expect-fail ID]...
// Exit status is 0 when the failing sub-checks are exactly the expected ones.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "test_util.hpp"
#include "throttlekit/bounds.hpp"
#include "throttlekit/decomposition.hpp"
#include "throttlekit/gambler.hpp"
#include "throttlekit/generators.hpp"
#include "throttlekit/metrics.hpp"
#include "throttlekit/rng.hpp"
#include "throttlekit/solvers.hpp"
#include "throttlekit/strategies.hpp"
#include "throttlekit/sweep.hpp"

using namespace throttle;

namespace {

struct Check {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int number = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;

  void add(const std::string& id, bool pass, const std::string& detail) { checks.push_back({id, pass, detail}); }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

int half_up(int x) { return (x + 1) / 2; }

void path_formula(Criterion& c) {
  int mismatches = 0;
  std::string first;
  for (Vertex n = 2; n <= 25; ++n) {
    const int got = throttle_robber(generate(FamilySpec::path(n))).value;
    if (got != path_throttle_formula(n)) {
      if (!mismatches) first = fmt(" first at n=%d: %d vs %d", n, got, path_throttle_formula(n));
      ++mismatches;
    }
  }
  c.add("1.paths", mismatches == 0, fmt("n=2..25, %d mismatches%s", mismatches, first.c_str()));
}

void trees_psd(Criterion& c) {
  int trees = 0, mismatches = 0;
  for (Vertex n = 1; n <= 9; ++n)
    for (const auto& t : enumerate_free_trees(n)) {
      ++trees;
      if (throttle_psd(t).value != throttle_robber(t).value) ++mismatches;
    }
  c.add("2.trees", mismatches == 0 && trees == 95,
        fmt("%d non-isomorphic trees with n<=9 (47 of them have n=9), %d mismatches", trees, mismatches));
}

void chordal_identity(Criterion& c) {
  int mismatches = 0, not_chordal = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto n = static_cast<Vertex>(4 + seed % 7);
    Graph g = generate(FamilySpec::random_chordal(n, seed));
    if (!test::is_chordal(g)) ++not_chordal;
    if (throttle_robber(g).value != throttle_radius(g).value) ++mismatches;
  }
  c.add("3.chordal", mismatches == 0 && not_chordal == 0,
        fmt("50 random chordal graphs n=4..10, %d mismatches, %d failed the chordality oracle", mismatches,
            not_chordal));
}

void partition_invariants(Criterion& c) {
  CounterRng rng(2024, 0);
  int limb_bad = 0, part_bad = 0;
  std::string first;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto n = static_cast<Vertex>(3 + rng.below(498));
    Graph g = generate(FamilySpec::random_tree(n, rng.next()));
    RootedTree t(g, static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))));
    const double x = 1.5 + rng.uniform01() * (n - 2.5);
    const std::string e1 = test::check_limb(t, x, limb_split(t, x));
    const std::string e2 = test::check_partition(t, x, tree_partition(t, x));
    if (!e1.empty()) ++limb_bad;
    if (!e2.empty()) ++part_bad;
    if (first.empty() && !(e1 + e2).empty()) first = e1 + e2;
  }
  c.add("4.limb", limb_bad == 0, fmt("10^4 (tree, x) instances n<=500, %d limb violations", limb_bad));
  c.add("4.partition", part_bad == 0,
        fmt("%d partition violations%s%s", part_bad, first.empty() ? "" : ": ", first.c_str()));
}

void tree_certification(Criterion& c) {
  int fails = 0, runs = 0;
  double worst_excess = -1e9, worst_C = 0;
  int worst_N0 = 0;
  for (Vertex n : {100, 400, 900, 2500, 10000, 1000000}) {
    const int seeds = n >= 1000000 ? 2 : 10;
    for (int s = 0; s < seeds; ++s) {
      Graph g = generate(FamilySpec::random_tree(n, static_cast<std::uint64_t>(s + 1)));
      BoundReport r = certify(g, plan_cover(g, 0.5), 0.5);
      ++runs;
      if (!*r.pass) ++fails;
      worst_excess = std::max(worst_excess, *r.achieved - (r.upper - r.constant_C));
      worst_C = std::max(worst_C, r.constant_C);
      worst_N0 = std::max(worst_N0, r.threshold_N0.value_or(1 << 30));
    }
  }
  c.add("5.certify", fails == 0 && worst_C <= 10 && worst_N0 <= 100,
        fmt("%d random trees over n in {100..10^6}: %d FAIL; C=%.4g, N0=%d, worst cops+time-(sqrt14/2)sqrt(n)=%.3f",
            runs, fails, worst_C, worst_N0, worst_excess));

  int traces = 0, slow = 0;
  for (int i = 0; i < 1000; ++i) {
    const Vertex n = std::vector<Vertex>{100, 400, 900, 2500}[static_cast<std::size_t>(i % 4)];
    Graph g = generate(FamilySpec::random_tree(n, static_cast<std::uint64_t>(1000 + i)));
    CoverPlan plan = plan_cover(g, 0.5);
    PursuitTrace t = tree_pursuit(g, plan, {RobberKind::greedy_far, std::nullopt});
    ++traces;
    if (!t.captured || t.rounds > half_up(plan.max_region)) ++slow;
  }
  c.add("5.greedy", slow == 0, fmt("%d greedy_far traces, %d over ceil(max_region/2)", traces, slow));

  int exact = 0, exact_slow = 0;
  for (Vertex n = 9; n <= 25; ++n)
    for (std::uint64_t s = 0; s < 6; ++s) {
      Graph g = generate(FamilySpec::random_tree(n, 500 + s));
      CoverPlan plan = plan_cover(g, 0.5);
      PursuitTrace t = tree_pursuit(g, plan, {RobberKind::exact_best, std::nullopt});
      ++exact;
      if (!t.captured || t.rounds > half_up(plan.max_region)) ++exact_slow;
    }
  c.add("5.exact", exact_slow == 0, fmt("%d exact_best traces n=9..25, %d over ceil(max_region/2)", exact, exact_slow));
}

void spider_certification(Criterion& c) {
  int fails = 0, runs = 0;
  double worst_C = 0;
  int worst_N0 = 0;
  double worst_excess = -1e9;
  for (Vertex n : {400, 2500, 10000})
    for (std::uint64_t s = 0; s < 100; ++s) {
      Graph g = generate(FamilySpec::random_spider(n, s + 1));
      BoundReport r = certify(g, spider_cover(g), 0.5);
      ++runs;
      if (!*r.pass || r.family != BoundFamily::spider) ++fails;
      worst_C = std::max(worst_C, r.constant_C);
      worst_N0 = std::max(worst_N0, r.threshold_N0.value_or(1 << 30));
      worst_excess = std::max(worst_excess, *r.achieved - (r.upper - r.constant_C));
    }
  c.add("6.spiders", fails == 0,
        fmt("%d random spiders n in {400,2500,10^4}: %d FAIL against sqrt3*sqrt(n)+C; C=%.4g, N0=%d, worst excess %.3f",
            runs, fails, worst_C, worst_N0, worst_excess));
}

void cactus_checks(Criterion& c) {
  CounterRng rng(77, 0);
  int flatten_bad = 0, cops_bad = 0, sep_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<Vertex>(3 + rng.below(1998));
    Graph g = generate(FamilySpec::random_cactus(n, rng.next()));
    FlattenResult f = cactus_flatten(g);
    if (!test::check_flatten(g, f).empty()) ++flatten_bad;
    CoverPlan plan = cactus_plan(g, f);
    if (plan.cop_count > 16 * std::sqrt(static_cast<double>(n)) + 16) ++cops_bad;
    if (!test::check_guard_separation(g, plan).empty()) ++sep_bad;
  }
  c.add("7.flatten", flatten_bad == 0, fmt("10^3 random cacti n<=2000, %d flatten violations", flatten_bad));
  c.add("7.cops", cops_bad == 0, fmt("%d plans above 16sqrt(n)+16 cops", cops_bad));
  c.add("7.separation", sep_bad == 0, fmt("%d guard-separation violations", sep_bad));

  // Small cacti: every guard-free component lies in one region preimage, and
  // the exact solver captures the robber inside that component with the six
  // cops allotted to its region.
  int small = 0, confined_bad = 0, uncaptured = 0;
  for (std::uint64_t s = 0; s < 150; ++s) {
    const auto n = static_cast<Vertex>(4 + s % 22);
    Graph g = generate(FamilySpec::random_cactus(n, 900 + s));
    CoverPlan plan = cactus_plan(g);
    ++small;
    if (!test::check_guard_separation(g, plan).empty()) ++confined_bad;
    VertexSet free;
    for (Vertex v = 0; v < n; ++v)
      if (!std::binary_search(plan.guards.begin(), plan.guards.end(), v)) free.push_back(v);
    if (free.empty()) continue;
    auto rest = induced_subgraph(g, free);
    for (const auto& comp : connected_components(rest.graph)) {
      auto sub = induced_subgraph(rest.graph, comp);
      const int k = std::min<int>(6, sub.graph.order());
      if (!capture_time(sub.graph, k).is_captured()) ++uncaptured;
    }
  }
  c.add("7.small", confined_bad == 0 && uncaptured == 0,
        fmt("%d cacti n<=25: %d unconfined, %d robber components where 6 cops fail to capture", small, confined_bad,
            uncaptured));
}

void lower_bound(Criterion& c) {
  const double level = 1.4502, guard = 1e-9;
  auto ratio = [](std::int64_t n) { return lower_bound_eval(spider_lower_family(n)) / std::sqrt(static_cast<double>(n)); };
  const double r6 = ratio(1'000'000), r8 = ratio(100'000'000);
  c.add("8.ratio1e6", r6 > level + guard, fmt("lower/sqrt(n) at n=10^6 is %.6f, needs > %.4f", r6, level));
  c.add("8.ratio1e8", r8 > level + guard, fmt("lower/sqrt(n) at n=10^8 is %.6f, needs > %.4f", r8, level));
  c.add("8.growth", r8 > r6, fmt("ratio grows from 10^6 to 10^8: %.6f -> %.6f", r6, r8));

  int bad = 0;
  std::string worst;
  for (std::int64_t n = 2; n <= 18; ++n) {
    SpiderSpec s = spider_lower_family(n);
    const int th = throttle_robber(realize(s)).value;
    const auto lb = guarded_ceil(lower_bound_eval(s));
    if (th < lb) ++bad;
  }
  c.add("8.exact", bad == 0, fmt("n=2..18: %d spiders with th_c < ceil(lower bound)", bad));

  const double a = lower_family_a(kLowerFamilyC);
  c.add("8.constant", std::abs(a - 0.1942879649262619) < 1e-6,
        fmt("a(1.08766) = %.13f, oracle 0.1942879649263", a));

  RatioCrossing cross = lower_bound_crossing(level, 1'000'000, 20'000'000'000, 1.001);
  c.add("8.crossing", true,
        fmt("reported, not asserted: on a 0.1%% grid the ratio first exceeds %.4f at n=%lld; last grid point at or "
            "below it is n=%lld",
            level, static_cast<long long>(cross.first_above.value_or(-1)),
            static_cast<long long>(cross.last_below.value_or(-1))));
}

void gambler_constants(Criterion& c) {
  const double u = std::sqrt(7 * gambler_unknown_constant());
  c.add("9.unknown", u < 3.7131 && std::abs(u - 3.7130675) < 1e-6, fmt("sqrt(7*3(1/(1-e^-2)-1/2)) = %.7f", u));
  const double one = bound_coefficient(BoundFamily::gambler_1);
  c.add("9.one", std::abs(one - std::sqrt(42.0) / 2) < 1e-6 && std::abs(one - 3.2403703) < 1e-6,
        fmt("sqrt(7*1.5) = %.7f", one));

  CounterRng rng(31, 0);
  int within = 0;
  const int triples = 20;
  for (int i = 0; i < triples; ++i) {
    const auto n = static_cast<Vertex>(5 + rng.below(26));
    Graph g = i % 2 ? generate(FamilySpec::random_tree(n, rng.next())) : generate(FamilySpec::random_cactus(n, rng.next()));
    std::vector<double> p(static_cast<std::size_t>(g.order()));
    long double total = 0;
    for (auto& x : p) total += (x = 0.5 + rng.uniform01());
    for (auto& x : p) x = static_cast<double>(x / total);
    long double sum = 0;
    for (double x : p) sum += x;
    p.back() += static_cast<double>(1.0L - sum);
    const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.order())));
    EctEstimate est = simulate_gambler(g, {p, GamblerVariant::unknown}, camping_policy({v}), 100000, rng.next());
    if (std::abs(est.mean_rounds - 1.0 / p[static_cast<std::size_t>(v)]) <= 3 * est.std_error) ++within;
  }
  c.add("9.camping", within >= 0.95 * triples,
        fmt("%d of %d camping estimates within 3 standard errors of 1/p_v (10^5 trials each)", within, triples));
}

void determinism(Criterion& c) {
  int differing = 0, sweeps = 0;
  auto rerun = [&](SweepConfig cfg) {
    ++sweeps;
    if (run_sweep(cfg) != run_sweep(cfg)) ++differing;
  };
  SweepConfig paths;
  paths.kind = SweepKind::paths;
  for (std::int64_t n = 2; n <= 12; ++n) paths.ns.push_back(n);
  rerun(paths);
  SweepConfig lower;
  lower.kind = SweepKind::lower;
  lower.ns = log_spaced(10'000, 100'000'000, 4);
  rerun(lower);
  for (auto kind : {SweepKind::trees, SweepKind::spiders, SweepKind::cacti}) {
    SweepConfig cfg;
    cfg.kind = kind;
    cfg.ns = {100, 400, 900};
    cfg.seeds = 4;
    cfg.seed = 9;
    rerun(cfg);
  }
  c.add("10.sweeps", differing == 0, fmt("%d sweep kinds re-run, %d differ", sweeps, differing));

  Graph g = generate(FamilySpec::random_tree(60, 4));
  CopPolicy policy = region_sweep_policy(g, plan_cover(g, 0.5));
  SimulationOptions serial, parallel;
  parallel.jobs = 4;
  EctEstimate a = simulate_gambler(g, GamblerModel::uniform(60), policy, 20000, 5, serial);
  EctEstimate b = simulate_gambler(g, GamblerModel::uniform(60), policy, 20000, 5, parallel);
  c.add("10.simulate", a.mean_rounds == b.mean_rounds && a.std_error == b.std_error,
        fmt("1 vs 4 workers: mean %.6f vs %.6f", a.mean_rounds, b.mean_rounds));
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> expected;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--expect-fail") expected.insert(argv[++i]);

  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> plan = {
      {"path formula th_c(P_n) = ceil(sqrt(2n) - 1/2)", path_formula},
      {"th_c = th_+ on trees", trees_psd},
      {"chordal identity th_c = min_k(k + rad_k)", chordal_identity},
      {"limb split and tree partition invariants", partition_invariants},
      {"tree cover certification and pursuit", tree_certification},
      {"spider cover certification", spider_certification},
      {"cactus flattening and cover", cactus_checks},
      {"lower-bound spider family", lower_bound},
      {"gambler constants and camping estimates", gambler_constants},
      {"determinism", determinism},
  };

  int unexpected = 0;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    Criterion c;
    c.number = static_cast<int>(i + 1);
    c.title = plan[i].first;
    const auto start = std::chrono::steady_clock::now();
    plan[i].second(c);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%.1fs)\n", c.pass() ? "PASS" : "FAIL", c.number, c.title.c_str(), c.seconds);
    for (const auto& check : c.checks) {
      const bool known = expected.count(check.id) > 0;
      const char* tag = check.pass ? (known ? "XPASS" : "ok") : (known ? "FAIL (expected)" : "FAIL");
      std::printf("    %-14s %-16s %s\n", check.id.c_str(), tag, check.detail.c_str());
      if (check.pass == known) ++unexpected;
    }
    std::fflush(stdout);
  }
  std::printf("%s: %d unexpected result%s\n", unexpected ? "acceptance FAILED" : "acceptance complete", unexpected,
              unexpected == 1 ? "" : "s");
  return unexpected ? 1 : 0;
}
