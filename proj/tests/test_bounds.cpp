#include <doctest.h>

#include <cmath>

#include "throttlekit/bounds.hpp"
#include "throttlekit/gambler.hpp"
#include "throttlekit/generators.hpp"
#include "throttlekit/metrics.hpp"
#include "throttlekit/solvers.hpp"
#include "throttlekit/strategies.hpp"

using namespace throttle;

// Reference values below were evaluated with mpmath at 40 digits.

TEST_SUITE("bounds") {
  TEST_CASE("closed-form constants") {
    CHECK(lower_family_a(kLowerFamilyC) == doctest::Approx(0.1942879649262619).epsilon(1e-12));
    CHECK(std::abs(lower_family_a(kLowerFamilyC) - 0.1942879649262619) < 1e-6);
    CHECK(gambler_unknown_constant() == doctest::Approx(1.969552928248997).epsilon(1e-12));
    CHECK(std::sqrt(7 * gambler_unknown_constant()) == doctest::Approx(3.7130675320741176).epsilon(1e-12));
    CHECK(std::sqrt(7 * gambler_unknown_constant()) < 3.7131);
    CHECK(bound_coefficient(BoundFamily::tree) == doctest::Approx(1.8708286933869707).epsilon(1e-12));
    CHECK(bound_coefficient(BoundFamily::chordal) == bound_coefficient(BoundFamily::tree));
    CHECK(bound_coefficient(BoundFamily::gambler_1) == doctest::Approx(3.2403703492039302).epsilon(1e-12));
    CHECK(bound_coefficient(BoundFamily::gambler_u) == doctest::Approx(3.7130675320741176).epsilon(1e-12));
    CHECK(bound_coefficient(BoundFamily::spider) == doctest::Approx(1.7320508075688772).epsilon(1e-12));
    CHECK(bound_coefficient(BoundFamily::cactus) == 16);
  }

  TEST_CASE("path throttle formula") {
    CHECK(path_throttle_formula(1) == 1);
    CHECK(path_throttle_formula(8) == 4);
    for (std::int64_t n = 1; n <= 2'000'000; ++n) {
      const int t = path_throttle_formula(n);
      // Smallest t with (2t + 1)^2 >= 8n.
      REQUIRE((2 * std::int64_t{t} + 1) * (2 * std::int64_t{t} + 1) >= 8 * n);
      REQUIRE((2 * std::int64_t{t} - 1) * (2 * std::int64_t{t} - 1) < 8 * n);
    }
    CHECK_THROWS_AS(path_throttle_formula(0), PreconditionError);
  }

  TEST_CASE("upper bound table") {
    BoundReport cactus = upper_bound(100, BoundFamily::cactus);
    CHECK(cactus.upper == doctest::Approx(176));
    BoundReport tree = upper_bound(400, BoundFamily::tree);
    CHECK(tree.coefficient == doctest::Approx(std::sqrt(14.0) / 2));
    CHECK(tree.constant_C == doctest::Approx(2 + 7.0 / 8 + 0.5));
    CHECK(tree.upper == doctest::Approx(tree.coefficient * 20 + tree.constant_C));
    CHECK(tree.threshold_N0.has_value());
    BoundReport cyc = upper_bound(400, BoundFamily::cycles_k, 5);
    CHECK(cyc.upper == doctest::Approx(tree.upper + 5));
    CHECK_THROWS_AS(upper_bound(400, BoundFamily::cycles_k), PreconditionError);
    CHECK_THROWS_AS(upper_bound(400, BoundFamily::tree, 3), PreconditionError);
    BoundReport spider = upper_bound(400, BoundFamily::spider);
    CHECK(spider.constant_C == doctest::Approx(3.25));
    for (auto f : {BoundFamily::tree, BoundFamily::chordal, BoundFamily::spider, BoundFamily::cactus,
                   BoundFamily::cycles_k, BoundFamily::gambler_u, BoundFamily::gambler_1, BoundFamily::general})
      CHECK(bound_family_from_string(to_string(f)) == f);
  }

  TEST_CASE("lower-bound spider family") {
    SpiderSpec big = spider_lower_family(1'000'000);
    CHECK(big.short_leg_count == 194);
    CHECK(big.short_leg_length == 1087);
    CHECK(big.long_leg_length == 1'000'000 - 1 - 194 * 1087);
    LowerBoundCases cases = lower_bound_cases(big);
    CHECK(cases.case1 == doctest::Approx(1449.3144827586207).epsilon(1e-12));
    CHECK(cases.case2 == 1449);
    CHECK(lower_bound_eval(big) == 1449);

    SpiderSpec huge = spider_lower_family(100'000'000);
    CHECK(lower_bound_cases(huge).case1 == doctest::Approx(14501.611685744495).epsilon(1e-12));
    CHECK(lower_bound_eval(huge) == 14501);

    CHECK_THROWS_AS(spider_lower_family(1), PreconditionError);
    Graph g = realize(spider_lower_family(300));
    CHECK(g.order() == 300);
    CHECK(is_tree(g));
  }

  TEST_CASE("floors move the lower bound by a bounded amount") {
    // Largest gap seen on a 1% grid up to 1e10 is 0.962.
    for (double x = 50; x < 1e9; x *= 1.07) {
      const auto n = static_cast<std::int64_t>(x);
      SpiderSpec s = spider_lower_family(n);
      CHECK(std::abs(lower_bound_eval(s) - lower_bound_unfloored(static_cast<double>(n), s.a, s.c)) <= 1.0);
    }
  }

  TEST_CASE("lower bound never exceeds the exact value on small spiders") {
    for (std::int64_t n = 2; n <= 14; ++n) {
      SpiderSpec s = spider_lower_family(n);
      Graph g = realize(s);
      const int th = throttle_robber(g).value;
      CHECK(th >= static_cast<int>(std::ceil(lower_bound_eval(s) - 1e-9)));
      CHECK(th >= path_throttle_formula(n));
    }
  }

  TEST_CASE("stationary escape") {
    Graph p9 = generate(FamilySpec::path(9));
    CHECK(stationary_escape(p9, all_vertices(p9)) == 0);
    CHECK(stationary_escape(p9, {0}) == 8);
    CHECK(stationary_escape(p9, {4}) == 4);
  }

  TEST_CASE("gambler bounds") {
    CHECK(gambler_bound(0, GamblerVariant::unknown) == 0);
    CHECK(gambler_bound(0, GamblerVariant::one_observed) == 0);
    for (std::int64_t n : {1, 10, 1000, 1000000}) {
      CHECK(gambler_bound(n, GamblerVariant::unknown) / std::sqrt(double(n)) == doctest::Approx(3.7130675320741176));
      CHECK(gambler_bound(n, GamblerVariant::one_observed) <= gambler_bound(n, GamblerVariant::unknown));
    }
    CHECK(gambler_bound(4, GamblerVariant::one_observed) == doctest::Approx(std::sqrt(42.0)));
  }

  TEST_CASE("guarded rounding") {
    CHECK(guarded_ceil(3.0000000001) == 3);
    CHECK(guarded_ceil(3.1) == 4);
    CHECK(guarded_floor(2.9999999999) == 3);
    CHECK(guarded_floor(2.9) == 2);
  }

  TEST_CASE("crossing search") {
    RatioCrossing x = lower_bound_crossing(1.4502, 1'000'000, 100'000'000, 1.01);
    CHECK_FALSE(x.first_above.has_value());
    CHECK(x.last_below.has_value());
    CHECK(x.points > 100);
  }
}
