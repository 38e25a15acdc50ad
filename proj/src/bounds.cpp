#include "throttlekit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "throttlekit/generators.hpp"
#include "throttlekit/metrics.hpp"

namespace throttle {

namespace {
constexpr double kGuard = 1e-9;
}

std::int64_t guarded_ceil(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= kGuard) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::ceil(x));
}

std::int64_t guarded_floor(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= kGuard) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::floor(x));
}

std::vector<Vertex> SpiderSpec::legs() const {
  if (n > std::numeric_limits<Vertex>::max()) throw PreconditionError("spider order does not fit a graph");
  std::vector<Vertex> out(static_cast<std::size_t>(short_leg_count), static_cast<Vertex>(short_leg_length));
  out.push_back(static_cast<Vertex>(long_leg_length));
  return out;
}

Graph realize(const SpiderSpec& spec) { return generate(FamilySpec::spider(spec.legs())); }

double lower_family_a(double c) {
  const double c2 = c * c, c3 = c2 * c, c4 = c2 * c2, c6 = c4 * c2;
  return (3 * c + 2 * c3 - std::sqrt(48 * c4 - 32 * c6)) / (9 * c2);
}

SpiderSpec spider_lower_family(std::int64_t n) {
  if (n < 1) throw PreconditionError("lower-bound family needs n >= 1");
  SpiderSpec spec;
  spec.n = n;
  spec.c = kLowerFamilyC;
  spec.a = lower_family_a(spec.c);
  const double root = std::sqrt(static_cast<double>(n));
  spec.short_leg_count = guarded_floor(spec.a * root);
  spec.short_leg_length = guarded_floor(spec.c * root);
  const std::int64_t rest = n - 1 - spec.short_leg_count * spec.short_leg_length;
  if (rest < 1) throw PreconditionError("n = " + std::to_string(n) + " leaves no vertex for the long leg");
  spec.long_leg_length = rest;
  return spec;
}

LowerBoundCases lower_bound_cases(const SpiderSpec& spec) {
  const auto n = static_cast<double>(spec.n);
  const auto count = static_cast<double>(spec.short_leg_count);
  const auto len = static_cast<double>(spec.short_leg_length);
  LowerBoundCases out;
  out.case1 = len + (n - 1 - (count + 1) * len) / (2 * len + 1);
  const auto rest = static_cast<double>(spec.n - 1 - spec.short_leg_count * spec.short_leg_length);
  out.case2 = static_cast<double>(guarded_ceil(std::sqrt(2 * rest) - 0.5)) - 1 + count;
  return out;
}

double lower_bound_eval(const SpiderSpec& spec) { return lower_bound_cases(spec).value(); }

double lower_bound_unfloored(double n, double a, double c) {
  const double root = std::sqrt(n);
  const double count = a * root, len = c * root;
  const double case1 = len + (n - 1 - (count + 1) * len) / (2 * len + 1);
  const double case2 = std::sqrt(2 * (n - 1 - count * len)) - 0.5 - 1 + count;
  return std::min(case1, case2);
}

RatioCrossing lower_bound_crossing(double level, std::int64_t lo, std::int64_t hi, double step) {
  if (lo < 2 || hi < lo || !(step > 1)) throw PreconditionError("bad crossing search range");
  RatioCrossing out;
  for (std::int64_t n = lo; n <= hi; n = static_cast<std::int64_t>(static_cast<double>(n) * step) + 1) {
    ++out.points;
    const double ratio = lower_bound_eval(spider_lower_family(n)) / std::sqrt(static_cast<double>(n));
    if (ratio > level + kGuard) {
      if (!out.first_above) out.first_above = n;
    } else {
      out.last_below = n;
    }
  }
  return out;
}

int path_throttle_formula(std::int64_t n) {
  if (n < 1) throw PreconditionError("path order must be positive");
  // Smallest t with t + 1/2 >= sqrt(2n), i.e. (2t + 1)^2 >= 8n.
  auto t = static_cast<std::int64_t>(std::sqrt(2.0 * static_cast<double>(n)));
  t = std::max<std::int64_t>(t - 2, 0);
  while ((2 * t + 1) * (2 * t + 1) < 8 * n) ++t;
  return static_cast<int>(t);
}

namespace {

struct FamilyName {
  BoundFamily family;
  const char* name;
};

constexpr FamilyName kBoundFamilies[] = {
    {BoundFamily::tree, "tree"},         {BoundFamily::chordal, "chordal"},     {BoundFamily::spider, "spider"},
    {BoundFamily::cactus, "cactus"},     {BoundFamily::cycles_k, "cycles_k"},   {BoundFamily::gambler_u, "gambler_u"},
    {BoundFamily::gambler_1, "gambler_1"}, {BoundFamily::general, "general"},
};

// Spider covers use r^2 = 4/3 and half-region capture.
constexpr double kSpiderRatioSquared = 4.0 / 3.0;

// Frozen from the certification sweeps: every free tree up to 14 vertices,
// paths, stars and 30 random trees per order up to 200, all spiders up to 30
// vertices and 30 random spiders per order up to 300 passed.
constexpr int kTreeThreshold = 1;
constexpr int kSpiderThreshold = 1;

}  // namespace

std::string to_string(BoundFamily family) {
  for (const auto& f : kBoundFamilies)
    if (f.family == family) return f.name;
  return "tree";
}

BoundFamily bound_family_from_string(const std::string& text) {
  for (const auto& f : kBoundFamilies)
    if (text == f.name) return f.family;
  throw PreconditionError("unknown bound family '" + text + "'");
}

double gambler_unknown_constant() { return 3 * (1 / (1 - std::exp(-2.0)) - 0.5); }

std::optional<double> family_cover_constant(BoundFamily family) {
  switch (family) {
    case BoundFamily::tree:
    case BoundFamily::chordal:
    case BoundFamily::cycles_k: return 0.5;
    case BoundFamily::gambler_u: return gambler_unknown_constant();
    case BoundFamily::gambler_1: return 1.5;
    case BoundFamily::spider:
    case BoundFamily::cactus:
    case BoundFamily::general: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

double cover_constant_for(BoundFamily family, std::optional<double> c) {
  if (auto fixed = family_cover_constant(family)) return *fixed;
  if (!c) throw PreconditionError("family " + to_string(family) + " needs a cover constant c");
  if (!(*c > 0)) throw PreconditionError("cover constant c must be positive");
  return *c;
}

}  // namespace

double bound_coefficient(BoundFamily family, std::optional<double> c) {
  if (family == BoundFamily::spider) return std::sqrt(3.0);
  if (family == BoundFamily::cactus) return 16.0;
  return std::sqrt(7 * cover_constant_for(family, c));
}

double certified_constant(BoundFamily family, std::optional<double> c) {
  if (family == BoundFamily::spider) return 2 + 1 / kSpiderRatioSquared + 0.5;
  if (family == BoundFamily::cactus) return 16.0;
  const double cc = cover_constant_for(family, c);
  const double r = cover_ratio(cc);
  return 2 + 1 / (r * r) + cc;
}

std::optional<int> certified_threshold(BoundFamily family) {
  switch (family) {
    case BoundFamily::tree:
    case BoundFamily::chordal:
    case BoundFamily::cycles_k: return kTreeThreshold;
    case BoundFamily::spider: return kSpiderThreshold;
    case BoundFamily::cactus: return 1;
    case BoundFamily::gambler_u:
    case BoundFamily::gambler_1:
    case BoundFamily::general: return std::nullopt;
  }
  return std::nullopt;
}

BoundReport upper_bound(Vertex n, BoundFamily family, std::optional<int> k_cycles, std::optional<double> c) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (family == BoundFamily::cycles_k && !k_cycles) throw PreconditionError("cycles_k needs the cycle count k");
  if (family != BoundFamily::cycles_k && k_cycles) throw PreconditionError("k_cycles only applies to cycles_k");
  if (k_cycles && *k_cycles < 0) throw PreconditionError("cycle count must be non-negative");
  BoundReport out;
  out.n = n;
  out.family = family;
  out.k_cycles = k_cycles;
  if (family != BoundFamily::spider && family != BoundFamily::cactus) out.c = cover_constant_for(family, c);
  out.coefficient = bound_coefficient(family, out.c);
  out.constant_C = certified_constant(family, out.c);
  out.threshold_N0 = certified_threshold(family);
  out.upper = out.coefficient * std::sqrt(static_cast<double>(n)) + out.constant_C + (k_cycles ? *k_cycles : 0);
  return out;
}

BoundReport certify(const Graph& g, const CoverPlan& plan, double c) {
  if (plan.n != g.order()) throw PreconditionError("plan was built for a different order");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (const auto& region : plan.regions)
    for (Vertex v : region) {
      if (v < 0 || v >= g.order()) throw PreconditionError("plan region holds an out-of-range vertex");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw PreconditionError("plan does not cover the graph");

  WitnessSummary w;
  w.cop_count = plan.cop_count;
  w.max_region = plan.max_region;
  w.max_radius = plan.max_radius;
  w.case_tag = plan.case_tag;
  w.regions = static_cast<int>(plan.regions.size());
  BoundFamily family;
  std::optional<double> cover_c;
  switch (plan.case_tag) {
    case CaseTag::spider:
      family = BoundFamily::spider;
      w.time_term = plan.max_radius;
      break;
    case CaseTag::cactus:
      family = BoundFamily::cactus;
      w.time_term = 2 * plan.max_region;
      break;
    default:
      family = (c == 0.5 && is_tree(g)) ? BoundFamily::tree : BoundFamily::general;
      cover_c = c;
      w.time_term = static_cast<int>(guarded_ceil(c * plan.max_region));
      break;
  }
  BoundReport out = upper_bound(g.order(), family, std::nullopt, family == BoundFamily::general ? cover_c : std::nullopt);
  out.c = cover_c;
  out.witness = w;
  out.achieved = static_cast<double>(w.cop_count + w.time_term);
  out.pass = *out.achieved <= out.upper + kGuard;
  return out;
}

}  // namespace throttle
