#pragma once

#include <cstdint>
#include <optional>

#include "treesplit/splitter.hpp"
#include "treesplit/tree.hpp"

namespace treesplit {

/// Result of the rejection-sampling baseline. A missing edge means the
/// sampler gave up after max_attempts; giving up certifies nothing.
struct BaselineOutcome {
  std::optional<Edge> edge;
  std::uint64_t attempts = 0;

  bool found() const { return edge.has_value(); }
};

/// Samples edges uniformly with replacement (seeded, deterministic) and
/// tests each with is_cut_edge. Returns the first hit with its 1-based
/// attempt index, or GaveUp with attempts == max_attempts.
BaselineOutcome random_edge_baseline(const WeightedTree& t, const ToleranceWindow& win,
                                     std::uint64_t max_attempts, std::uint64_t seed);

}  // namespace treesplit
