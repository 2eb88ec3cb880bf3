#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treesplit/splitter.hpp"
#include "treesplit/tree.hpp"

// Two golden instances used across the suites.
//
// golden13: 13 vertices, weights in tenths (scale 1), total 4.7. The
// degree-5 hub (vertex 2, weight 0.6) certifies non-splittability at
// eps = 0.05: every component of T - {hub} weighs at most 1.6 < 2.3.
// Starting instead from vertex 3 (weight 0.3) takes two iterations: one
// descend step with component weight 3.1, then the hub certifies.
//
// golden7: 7 vertices, unit-ish weights, total 10, not splittable at
// eps = 1 even though removing vertex 1 leaves a component of weight 7 -
// a heavy component does not imply a split exists.

namespace fixtures {

inline const std::vector<std::pair<treesplit::VertexId, treesplit::VertexId>>
    kGolden13Edges = {{0, 1}, {1, 2}, {2, 3}, {1, 12}, {2, 7}, {2, 10},
                      {2, 11}, {7, 8}, {7, 9}, {3, 4}, {3, 5}, {3, 6}};

inline const std::vector<treesplit::Weight> kGolden13Weights =
    {2, 1, 6, 3, 7, 4, 2, 1, 3, 5, 6, 4, 3};

inline constexpr treesplit::VertexId kGolden13Hub = 2;    // weight 0.6, degree 5
inline constexpr treesplit::VertexId kGolden13Probe = 3;  // weight 0.3 start
inline constexpr treesplit::Weight kGolden13Total = 47;
inline constexpr treesplit::Weight kGolden13DoubledEps = 1;  // eps = 0.05

inline treesplit::WeightedTree golden13() {
  return treesplit::WeightedTree::build(13, kGolden13Weights, kGolden13Edges, 1);
}

inline treesplit::ToleranceWindow golden13_window() {
  return treesplit::ToleranceWindow{kGolden13Total, kGolden13DoubledEps};
}

inline std::string golden13_file() {
  return
      "# 13-vertex golden tree, weights in tenths\n"
      "tree 13 scale=1\n"
      "v 0 0.2\nv 1 0.1\nv 2 0.6\nv 3 0.3\nv 4 0.7\nv 5 0.4\nv 6 0.2\n"
      "v 7 0.1\nv 8 0.3\nv 9 0.5\nv 10 0.6\nv 11 0.4\nv 12 0.3\n"
      "e 0 1\ne 1 2\ne 1 12\ne 2 3\ne 2 7\ne 2 10\ne 2 11\n"
      "e 3 4\ne 3 5\ne 3 6\ne 7 8\ne 7 9\n";
}

inline const std::vector<std::pair<treesplit::VertexId, treesplit::VertexId>>
    kGolden7Edges = {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}};

inline const std::vector<treesplit::Weight> kGolden7Weights = {2, 1, 1, 2, 2, 1, 1};

inline constexpr treesplit::VertexId kGolden7Probe = 1;  // the near-leaf cut vertex
inline constexpr treesplit::Weight kGolden7Total = 10;
inline constexpr treesplit::Weight kGolden7DoubledEps = 2;  // eps = 1

inline treesplit::WeightedTree golden7() {
  return treesplit::WeightedTree::build(7, kGolden7Weights, kGolden7Edges, 0);
}

inline treesplit::ToleranceWindow golden7_window() {
  return treesplit::ToleranceWindow{kGolden7Total, kGolden7DoubledEps};
}

inline std::string golden7_file() {
  return
      "tree 7 scale=0\n"
      "v 0 2\nv 1 1\nv 2 1\nv 3 2\nv 4 2\nv 5 1\nv 6 1\n"
      "e 0 1\ne 1 2\ne 2 3\ne 2 4\ne 2 5\ne 2 6\n";
}

/// Path 0-1-...-(n-1) with the given weights.
inline treesplit::WeightedTree path_tree(std::vector<treesplit::Weight> weights,
                                         std::uint32_t scale = 0) {
  std::vector<std::pair<treesplit::VertexId, treesplit::VertexId>> edges;
  for (treesplit::VertexId v = 0; v + 1 < weights.size(); ++v) edges.push_back({v, v + 1});
  const auto n = static_cast<std::uint32_t>(weights.size());
  return treesplit::WeightedTree::build(n, std::move(weights), edges, scale);
}

/// Star with center 0 and the given leaf weights.
inline treesplit::WeightedTree star_tree(treesplit::Weight center,
                                         std::vector<treesplit::Weight> leaves) {
  std::vector<treesplit::Weight> weights{center};
  weights.insert(weights.end(), leaves.begin(), leaves.end());
  std::vector<std::pair<treesplit::VertexId, treesplit::VertexId>> edges;
  for (treesplit::VertexId v = 1; v < weights.size(); ++v) edges.push_back({0, v});
  const auto n = static_cast<std::uint32_t>(weights.size());
  return treesplit::WeightedTree::build(n, std::move(weights), edges, 0);
}

}  // namespace fixtures
