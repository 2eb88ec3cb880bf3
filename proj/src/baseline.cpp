#include "treesplit/baseline.hpp"

#include <stdexcept>

#include "treesplit/rng.hpp"

namespace treesplit {

BaselineOutcome random_edge_baseline(const WeightedTree& t, const ToleranceWindow& win,
                                     std::uint64_t max_attempts, std::uint64_t seed) {
  if (t.vertex_count() < 2)
    throw TreeError(TreeErrc::no_edges, "tree has no edges to sample");
  if (max_attempts == 0)
    throw std::invalid_argument("max_attempts must be at least 1");

  const std::vector<Edge> edges = t.edges();
  Xoshiro256ss rng(seed);
  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    const Edge e = edges[rng.below(edges.size())];
    if (is_cut_edge(t, e, win)) return BaselineOutcome{e, attempt};
  }
  return BaselineOutcome{std::nullopt, max_attempts};
}

}  // namespace treesplit
