#pragma once

#include <cstdint>

#include "treesplit/tree.hpp"

namespace treesplit {

/// Weight assignment rule: a constant, or uniform integers in [lo, hi].
struct WeightSpec {
  enum class Kind { constant, uniform };

  Kind kind = Kind::constant;
  Weight constant_value = 1;
  Weight lo = 0;
  Weight hi = 0;
  std::uint64_t seed = 0;

  static WeightSpec constant(Weight value);
  static WeightSpec uniform(Weight lo, Weight hi, std::uint64_t seed);
};

/// Uniform random labeled tree on n vertices via a random Prufer sequence.
TreeTopology prufer_random_tree(std::uint32_t n, std::uint64_t seed);

/// Uniform spanning tree of the width x height grid graph (vertices indexed
/// row-major) via loop-erased random walks.
TreeTopology wilson_spanning_tree(std::uint32_t width, std::uint32_t height,
                                  std::uint64_t seed);

/// Builds a WeightedTree over the topology with weights drawn per spec,
/// deterministically per seed. Scale exponent is 0.
WeightedTree assign_weights(const TreeTopology& topology, const WeightSpec& spec);

}  // namespace treesplit
