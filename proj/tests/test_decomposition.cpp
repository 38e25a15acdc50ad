#include <doctest.h>

#include <cmath>

#include "invariants.hpp"
#include "throttlekit/bounds.hpp"
#include "throttlekit/decomposition.hpp"
#include "throttlekit/generators.hpp"
#include "throttlekit/rng.hpp"

using namespace throttle;

namespace {

RootedTree rooted(const Graph& g, Vertex root) { return RootedTree(g, root); }

}  // namespace

TEST_SUITE("decomposition") {
  TEST_CASE("limb split on P4 matches the exhaustive candidate list") {
    RootedTree t = rooted(generate(FamilySpec::path(4)), 0);
    // Oracle: every connected S with 1.5 < |S| <= 2 whose removal (keeping v)
    // leaves a connected remainder containing the root.
    std::vector<LimbSplit> valid;
    for (unsigned mask = 1; mask < 16; ++mask) {
      VertexSet s;
      for (Vertex v = 0; v < 4; ++v)
        if (mask >> v & 1u) s.push_back(v);
      for (Vertex v : s) {
        LimbSplit cand{s, v};
        if (test::check_limb(t, 1.5, cand).empty()) valid.push_back(cand);
      }
    }
    LimbSplit got = limb_split(t, 1.5);
    CHECK(got.s == VertexSet{2, 3});
    CHECK(got.v == 2);
    bool listed = false;
    for (const auto& c : valid) listed |= (c.s == got.s && c.v == got.v);
    CHECK(listed);
  }

  TEST_CASE("limb split on a star accumulates branches at the root") {
    RootedTree t = rooted(generate(FamilySpec::star(5)), 0);
    LimbSplit got = limb_split(t, 2);
    CHECK(got.s.size() == 3);
    CHECK(got.v == 0);
    CHECK(test::check_limb(t, 2, got).empty());
  }

  TEST_CASE("limb split base case takes the whole tree") {
    for (Vertex n = 3; n < 20; ++n) {
      RootedTree t = rooted(generate(FamilySpec::random_tree(n, static_cast<std::uint64_t>(n))), 0);
      const double x = (n + 1) / 2.0;  // x < n <= 2x - 1
      LimbSplit got = limb_split(t, x);
      CHECK(got.s.size() == static_cast<std::size_t>(n));
      CHECK(got.v == 0);
    }
  }

  TEST_CASE("limb split invariants on random rooted trees") {
    CounterRng rng(5, 0);
    for (int trial = 0; trial < 1500; ++trial) {
      const auto n = static_cast<Vertex>(3 + rng.below(200));
      Graph g = generate(FamilySpec::random_tree(n, rng.next()));
      RootedTree t = rooted(g, static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))));
      const double x = 1.5 + rng.uniform01() * (n - 1 - 1.5);
      if (x >= n) continue;
      LimbSplit got = limb_split(t, x);
      const std::string err = test::check_limb(t, x, got);
      CAPTURE(n);
      CAPTURE(x);
      REQUIRE(err.empty());
    }
    CHECK_THROWS_AS(limb_split(rooted(generate(FamilySpec::path(5)), 0), 1.2), PreconditionError);
    CHECK_THROWS_AS(limb_split(rooted(generate(FamilySpec::path(5)), 0), 5), PreconditionError);
  }

  TEST_CASE("balanced bipartition") {
    auto check = [](const RootedTree& t) {
      const Vertex n = t.order();
      Bipartition b = balanced_bipartition(t);
      CHECK(test::connected_subset(t.graph(), b.s0));
      CHECK(test::connected_subset(t.graph(), b.s1));
      VertexSet both, uni;
      std::set_intersection(b.s0.begin(), b.s0.end(), b.s1.begin(), b.s1.end(), std::back_inserter(both));
      std::set_union(b.s0.begin(), b.s0.end(), b.s1.begin(), b.s1.end(), std::back_inserter(uni));
      CHECK(both.size() <= 1);
      CHECK(uni.size() == static_cast<std::size_t>(n));
      const auto s0 = static_cast<int>(b.s0.size());
      CHECK(s0 >= (n + 2) / 3);
      CHECK(s0 <= 2 * n / 3 + 1);
      return b;
    };
    Bipartition p6 = check(rooted(generate(FamilySpec::path(6)), 0));
    CHECK(p6.s0.size() + p6.s1.size() == 7);
    Bipartition p2 = check(rooted(generate(FamilySpec::path(2)), 0));
    CHECK(p2.s0.size() == 1);
    CHECK(p2.s1 == VertexSet{0, 1});
    Bipartition p3 = check(rooted(generate(FamilySpec::path(3)), 0));
    CHECK(p3.s0.size() == 2);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const auto n = static_cast<Vertex>(2 + seed % 80);
      check(rooted(generate(FamilySpec::random_tree(n, seed)), static_cast<Vertex>(seed % n)));
    }
    CHECK_THROWS_AS(balanced_bipartition(rooted(generate(FamilySpec::path(1)), 0)), PreconditionError);
  }

  TEST_CASE("tree partition examples") {
    RootedTree p10 = rooted(generate(FamilySpec::path(10)), 0);
    TreePartition a = tree_partition(p10, 3);
    CHECK(test::check_partition(p10, 3, a).empty());
    for (int i = 0; i < a.s(); ++i) {
      CHECK(a.parts[static_cast<std::size_t>(i)].size() > 2);
      CHECK(a.parts[static_cast<std::size_t>(i)].size() <= 5);
    }
    CHECK(a.parts.back().size() <= 3);

    RootedTree small = rooted(generate(FamilySpec::random_tree(12, 4)), 0);
    TreePartition whole = tree_partition(small, 12.5);
    CHECK(whole.s() == 0);
    CHECK(whole.parts.front().size() == 12);

    RootedTree sp = rooted(generate(FamilySpec::spider({3, 3, 3})), 0);
    TreePartition b = tree_partition(sp, 3.5);
    CHECK(test::check_partition(sp, 3.5, b).empty());
    for (int i = 0; i < b.s(); ++i) {
      CHECK(b.parts[static_cast<std::size_t>(i)].size() > 2.5);
      CHECK(b.parts[static_cast<std::size_t>(i)].size() <= 6);
    }
  }

  TEST_CASE("tree partition invariants on random trees") {
    CounterRng rng(11, 0);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto n = static_cast<Vertex>(2 + rng.below(300));
      RootedTree t = rooted(generate(FamilySpec::random_tree(n, rng.next())), 0);
      const double x = 1.5 + rng.uniform01() * n;
      TreePartition p = tree_partition(t, x);
      CAPTURE(n);
      CAPTURE(x);
      REQUIRE(test::check_partition(t, x, p).empty());
    }
  }

  TEST_CASE("cover ratio") {
    CHECK(cover_ratio(0.5) == doctest::Approx(1.0690450).epsilon(1e-7));
    CHECK(cover_ratio(1.5) == doctest::Approx(std::sqrt(8.0 / 21)).epsilon(1e-12));
  }

  TEST_CASE("plan cover on a random tree of order 400") {
    Graph g = generate(FamilySpec::random_tree(400, 1));
    CoverPlan plan = plan_cover(g, 0.5);
    CHECK(test::check_cover(g, plan).empty());
    const double r = cover_ratio(0.5);
    const double rn = r * 20;
    CHECK(plan.max_region <= 2 * rn);
    const auto& d = plan.diagnostics;
    if (plan.case_tag == CaseTag::big_b) {
      CHECK(plan.cop_count == 1 + d.s);
      CHECK(d.s <= (400 - 1.5 * d.b * (rn - 1)) / (rn - 1) + d.b);
    } else {
      CHECK(plan.cop_count == 1 + d.s + d.b);
    }
  }

  TEST_CASE("plan cover case invariants across sizes") {
    for (Vertex n : {9, 30, 100, 250, 300, 900, 2500}) {
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        for (double c : {0.5, 1.5}) {
          Graph g = seed % 4 == 3 ? generate(FamilySpec::random_chordal(std::min<Vertex>(n, 300), seed))
                                  : generate(FamilySpec::random_tree(n, seed));
          CoverPlan plan = plan_cover(g, c);
          REQUIRE(test::check_cover(g, plan).empty());
          const double rn = cover_ratio(c) * std::sqrt(static_cast<double>(g.order()));
          const auto& d = plan.diagnostics;
          CHECK(plan.regions.size() == static_cast<std::size_t>(plan.case_tag == CaseTag::big_b ? d.s + 1
                                                                                                 : d.s + 1 + d.b));
          if (plan.case_tag == CaseTag::big_b) {
            CHECK(plan.max_region <= 2 * rn);
            CHECK(d.s <= (g.order() - 1.5 * d.b * (rn - 1)) / (rn - 1) + d.b);
            CHECK(plan.cop_count == 1 + d.s);
          } else {
            // Unsplit parts stay at most 1.5 (r sqrt(n) - 1) plus their anchor;
            // halves of split parts are at most (4/3) r sqrt(n) + 1.
            CHECK(plan.max_region <= 1.5 * rn + 1);
            CHECK(plan.cop_count == 1 + d.s + d.b);
          }
        }
      }
    }
  }

  TEST_CASE("plan cover on a path of 900 with c = 3/2") {
    Graph g = generate(FamilySpec::path(900));
    CoverPlan plan = plan_cover(g, 1.5);
    CHECK(plan.diagnostics.r == doctest::Approx(std::sqrt(8.0 / 21)));
    for (const auto& region : plan.regions) CHECK(region.back() - region.front() + 1 == static_cast<Vertex>(region.size()));
    BoundReport report = certify(g, plan, 1.5);
    CHECK(*report.pass);
    CHECK(plan.cop_count + 1.5 * plan.max_region <= std::sqrt(7 * 1.5) * 30 + report.constant_C);
  }

  TEST_CASE("small graphs get a single region") {
    for (Vertex n = 1; n < 9; ++n) {
      CoverPlan plan = plan_cover(generate(FamilySpec::path(n)), 0.5);
      CHECK(plan.regions.size() == 1);
      CHECK(plan.cop_count == 1);
    }
    CHECK_THROWS_AS(plan_cover(Graph::from_edges(3, std::vector<Edge>{{0, 1}}), 0.5), PreconditionError);
    CHECK_THROWS_AS(plan_cover(generate(FamilySpec::path(10)), 0), PreconditionError);
  }
}
