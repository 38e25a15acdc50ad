#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace throttle {

enum class SweepKind { paths, lower, trees, spiders, cacti };

std::string to_string(SweepKind kind);
SweepKind sweep_kind_from_string(const std::string& text);

struct SweepConfig {
  SweepKind kind = SweepKind::trees;
  std::vector<std::int64_t> ns;  // orders to visit
  int seeds = 1;                 // random instances per order
  std::uint64_t seed = 1;        // first seed; instance i uses seed + i
  double c = 0.5;                // cover constant for tree sweeps
  double level = 1.4502;         // ratio level for the lower-bound sweep
  std::uint64_t state_budget = 50'000'000;
};

/// Version of the CSV layout; bumped whenever columns change.
inline constexpr int kSweepCsvVersion = 1;

/// Runs the sweep and returns the CSV text: a `#` header line naming the
/// layout version and config, the column row, then one row per instance.
std::string run_sweep(const SweepConfig& config);

/// orders lo, lo * 10^(1/per_decade), ... up to hi, rounded to integers.
std::vector<std::int64_t> log_spaced(std::int64_t lo, std::int64_t hi, int per_decade);

}  // namespace throttle
