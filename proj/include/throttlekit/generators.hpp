#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "throttlekit/graph.hpp"

namespace throttle {

enum class Family {
  path,
  star,
  cycle,
  complete,
  spider,
  random_tree,
  random_cactus,
  random_chordal,
  random_spider,
  lower_spider,
};

/// A named graph family instance. `n` is the order (the spider order is
/// implied by `legs`); `seed` only matters for random families.
struct FamilySpec {
  Family family = Family::path;
  Vertex n = 0;
  std::vector<Vertex> legs;
  std::uint64_t seed = 0;

  static FamilySpec path(Vertex n) { return {Family::path, n, {}, 0}; }
  static FamilySpec star(Vertex n) { return {Family::star, n, {}, 0}; }
  static FamilySpec cycle(Vertex n) { return {Family::cycle, n, {}, 0}; }
  static FamilySpec complete(Vertex n) { return {Family::complete, n, {}, 0}; }
  static FamilySpec spider(std::vector<Vertex> legs) { return {Family::spider, 0, std::move(legs), 0}; }
  static FamilySpec random_tree(Vertex n, std::uint64_t seed) { return {Family::random_tree, n, {}, seed}; }
  static FamilySpec random_cactus(Vertex n, std::uint64_t seed) { return {Family::random_cactus, n, {}, seed}; }
  static FamilySpec random_chordal(Vertex n, std::uint64_t seed) { return {Family::random_chordal, n, {}, seed}; }
  static FamilySpec random_spider(Vertex n, std::uint64_t seed) { return {Family::random_spider, n, {}, seed}; }
  static FamilySpec lower_spider(Vertex n) { return {Family::lower_spider, n, {}, 0}; }

  /// Parses "path:8", "spider:2,2,2", "random_tree:400:seed=1", ...
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

/// Builds the family member. Spiders put the center at 0 and number each leg
/// outward from the center, legs in the given order.
Graph generate(const FamilySpec& spec);

/// Every unlabeled tree on n vertices, one representative per isomorphism
/// class, in a deterministic order.
std::vector<Graph> enumerate_free_trees(Vertex n);

}  // namespace throttle
