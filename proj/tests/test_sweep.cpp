#include <doctest.h>

#include "throttlekit/generators.hpp"
#include "throttlekit/serialize.hpp"
#include "throttlekit/sweep.hpp"

using namespace throttle;

TEST_SUITE("sweep") {
  TEST_CASE("csv layout") {
    SweepConfig cfg;
    cfg.kind = SweepKind::paths;
    cfg.ns = {2, 3, 8};
    const std::string csv = run_sweep(cfg);
    CHECK(csv.rfind("# throttlekit-sweep v1 kind=paths ns=2;3;8 ", 0) == 0);
    CHECK(csv.find("\nn,robber,psd,radius,formula\n") != std::string::npos);
    CHECK(csv.find("\n8,4,4,4,4\n") != std::string::npos);
  }

  TEST_CASE("reruns are byte-identical") {
    for (auto kind : {SweepKind::trees, SweepKind::spiders, SweepKind::cacti, SweepKind::lower}) {
      SweepConfig cfg;
      cfg.kind = kind;
      cfg.ns = {100, 400};
      cfg.seeds = 3;
      cfg.seed = 17;
      CHECK(run_sweep(cfg) == run_sweep(cfg));
    }
  }

  TEST_CASE("log spacing") {
    CHECK(log_spaced(100, 10000, 2) == std::vector<std::int64_t>{100, 316, 1000, 3162, 10000});
    CHECK_THROWS_AS(log_spaced(0, 10, 1), PreconditionError);
    CHECK(sweep_kind_from_string("cacti") == SweepKind::cacti);
    CHECK_THROWS_AS(sweep_kind_from_string("x"), PreconditionError);
  }

  TEST_CASE("serialized plans are stable") {
    Graph g = generate(FamilySpec::random_tree(50, 2));
    nlohmann::json a = plan_cover(g, 0.5), b = plan_cover(g, 0.5);
    CHECK(a.dump() == b.dump());
    CHECK(a.contains("k"));
    CHECK(a["case_tag"].is_string());
    nlohmann::json report = certify(g, plan_cover(g, 0.5), 0.5);
    CHECK(report["verdict"] == "PASS");
  }
}
