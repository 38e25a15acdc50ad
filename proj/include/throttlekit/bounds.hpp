#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "throttlekit/decomposition.hpp"
#include "throttlekit/graph.hpp"

namespace throttle {

/// Spider with `short_leg_count` legs of `short_leg_length` vertices and one
/// long leg taking the remaining vertices.
struct SpiderSpec {
  std::int64_t n = 0;
  std::int64_t short_leg_count = 0;
  std::int64_t short_leg_length = 0;
  std::int64_t long_leg_length = 0;
  double a = 0.0;
  double c = 0.0;

  /// Short legs first, long leg last.
  std::vector<Vertex> legs() const;
};

/// Throws PreconditionError when the order does not fit a Graph.
Graph realize(const SpiderSpec& spec);

/// Short-leg length factor of the lower-bound family.
inline constexpr double kLowerFamilyC = 1.08766;

/// a(c) = (3c + 2c^3 - sqrt(48c^4 - 32c^6)) / (9c^2).
double lower_family_a(double c);

/// floor(a sqrt(n)) short legs of floor(c sqrt(n)) vertices plus one long leg.
/// Throws PreconditionError when the long leg would be empty.
SpiderSpec spider_lower_family(std::int64_t n);

struct LowerBoundCases {
  double case1 = 0.0;  // cops cover every short leg
  double case2 = 0.0;  // some short leg is left uncovered
  double value() const { return case1 < case2 ? case1 : case2; }
};

LowerBoundCases lower_bound_cases(const SpiderSpec& spec);
double lower_bound_eval(const SpiderSpec& spec);

/// The same two cases with every floor and ceiling replaced by its argument.
double lower_bound_unfloored(double n, double a, double c);

/// Where lower_bound_eval(spider_lower_family(n)) / sqrt(n) crosses `level`
/// on the geometric grid n_{i+1} = floor(n_i * step) + 1 over [lo, hi].
struct RatioCrossing {
  std::optional<std::int64_t> first_above;  // first grid point above level
  std::optional<std::int64_t> last_below;   // last grid point at or below level
  std::int64_t points = 0;
};

RatioCrossing lower_bound_crossing(double level, std::int64_t lo, std::int64_t hi, double step);

/// ceil(sqrt(2n) - 1/2) by exact integer search.
int path_throttle_formula(std::int64_t n);

enum class BoundFamily { tree, chordal, spider, cactus, cycles_k, gambler_u, gambler_1, general };

std::string to_string(BoundFamily family);
BoundFamily bound_family_from_string(const std::string& text);

/// Covering constant of the one-cop-per-region strategy under the unknown
/// gambler: 3 (1 / (1 - e^-2) - 1/2).
double gambler_unknown_constant();

/// The cover constant c behind a family's coefficient sqrt(7c); cactus and
/// spider are not of that form and return nullopt.
std::optional<double> family_cover_constant(BoundFamily family);

double bound_coefficient(BoundFamily family, std::optional<double> c = std::nullopt);

/// The additive constant of the certified bound: 2 + 1/r^2 + c for the
/// cover families, 2 + 1/r^2 + 1/2 with r^2 = 4/3 for spiders, 16 for cacti.
double certified_constant(BoundFamily family, std::optional<double> c = std::nullopt);

/// Smallest order from which every certification sweep point passed;
/// nullopt when the family was not swept.
std::optional<int> certified_threshold(BoundFamily family);

struct WitnessSummary {
  int cop_count = 0;
  int max_region = 0;
  int max_radius = 0;
  int time_term = 0;
  CaseTag case_tag = CaseTag::small_b;
  int regions = 0;
};

struct BoundReport {
  Vertex n = 0;
  BoundFamily family = BoundFamily::tree;
  double coefficient = 0.0;
  double constant_C = 0.0;
  std::optional<int> threshold_N0;
  std::optional<int> k_cycles;
  std::optional<double> c;
  double upper = 0.0;
  std::optional<WitnessSummary> witness;
  /// Witness value cop_count + time_term; present with the witness.
  std::optional<double> achieved;
  std::optional<bool> pass;
};

BoundReport upper_bound(Vertex n, BoundFamily family, std::optional<int> k_cycles = std::nullopt,
                        std::optional<double> c = std::nullopt);

/// Binds a cover plan to the bound of its family. Tree-style plans are timed
/// by ceil(c * max_region), spider plans by their largest region radius and
/// cactus plans by 2 * max_region (regions measured in source vertices).
/// PASS iff cop_count + time <= coefficient * sqrt(n) + C.
BoundReport certify(const Graph& g, const CoverPlan& plan, double c);

/// ceil with a 1e-9 guard so values within rounding noise of an integer
/// are treated as that integer.
std::int64_t guarded_ceil(double x);
std::int64_t guarded_floor(double x);

}  // namespace throttle
