#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treesplit {

using VertexId = std::uint32_t;
using Weight = std::int64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

enum class TreeErrc {
  edge_count_mismatch,
  disconnected,
  self_loop,
  duplicate_edge,
  id_out_of_range,
  negative_weight,
  weight_overflow,
  edge_not_in_tree,
  isolated_vertex,
  no_edges,
};

const char* to_string(TreeErrc code);

class TreeError : public std::runtime_error {
 public:
  TreeError(TreeErrc code, const std::string& what_arg)
      : std::runtime_error(what_arg), code_(code) {}
  TreeErrc code() const noexcept { return code_; }

 private:
  TreeErrc code_;
};

/// Undirected tree edge, canonically ordered so that u < v.
struct Edge {
  VertexId u{};
  VertexId v{};

  static Edge canonical(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// Bare tree shape: vertex count plus an undirected edge list.
struct TreeTopology {
  std::uint32_t vertex_count{};
  std::vector<std::pair<VertexId, VertexId>> edges;
};

/// One piece of the forest left by deleting a vertex: the neighbor the
/// component hangs off of, and the component's total vertex weight.
struct ComponentRef {
  VertexId anchor{};
  Weight weight{};
  friend auto operator<=>(const ComponentRef&, const ComponentRef&) = default;
};

/// Immutable vertex-weighted tree. Weights are exact non-negative integers
/// in units of 10^-scale_exponent; the sum of all weights fits in a signed
/// 64-bit integer (enforced at build). Adjacency lists are sorted ascending.
/// All traversals are iterative, so path-shaped trees of any size are fine.
class WeightedTree {
 public:
  /// Validates and builds. Throws TreeError with a distinct code for each
  /// malformed input: EdgeCountMismatch, Disconnected, SelfLoop,
  /// DuplicateEdge, IdOutOfRange, NegativeWeight, WeightOverflow.
  static WeightedTree build(std::uint32_t vertex_count, std::vector<Weight> weights,
                            const std::vector<std::pair<VertexId, VertexId>>& edges,
                            std::uint32_t scale_exponent = 0);
  static WeightedTree build(const TreeTopology& topology, std::vector<Weight> weights,
                            std::uint32_t scale_exponent = 0);

  std::uint32_t vertex_count() const noexcept { return vertex_count_; }
  std::uint32_t scale_exponent() const noexcept { return scale_exponent_; }
  Weight total_weight() const noexcept { return total_weight_; }

  Weight weight(VertexId v) const {
    check_vertex(v);
    return weights_[v];
  }
  const std::vector<Weight>& weights() const noexcept { return weights_; }

  /// Neighbors of v in ascending id order.
  std::span<const VertexId> neighbors(VertexId v) const {
    check_vertex(v);
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::uint32_t degree(VertexId v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
  }
  bool has_edge(VertexId a, VertexId b) const;

  /// All edges in canonical (u,v) order, ascending.
  std::vector<Edge> edges() const;

  /// Components of the forest left by deleting v, one entry per neighbor,
  /// ordered by ascending anchor id. Weights sum to total_weight() - w(v).
  std::vector<ComponentRef> components_without(VertexId v) const;

  struct RootedWeights {
    std::vector<VertexId> parent;  // parent[root] == kNoVertex
    std::vector<Weight> down_weight;
  };
  /// Single rooted pass: parent links and per-vertex subtree weights.
  /// down_weight[root] == total_weight().
  RootedWeights subtree_weights(VertexId root) const;

  /// Rooted pass in breadth-first position space. Children of position i
  /// occupy [child_begin[i], child_begin[i+1]) in ascending original id, and
  /// down[i] is the subtree weight of the vertex at position i. Cheaper to
  /// walk than subtree_weights on large trees.
  struct RootedScan {
    std::vector<VertexId> order;             // position -> original id
    std::vector<std::uint32_t> parent_pos;   // parent position; root maps to 0
    std::vector<std::uint32_t> child_begin;  // size vertex_count + 1
    std::vector<Weight> down;
  };
  RootedScan rooted_scan(VertexId root) const;

 private:
  WeightedTree() = default;
  void check_vertex(VertexId v) const {
    if (v >= vertex_count_)
      throw TreeError(TreeErrc::id_out_of_range,
                      "vertex id " + std::to_string(v) + " out of range [0, " +
                          std::to_string(vertex_count_) + ")");
  }

  std::uint32_t vertex_count_ = 0;
  std::uint32_t scale_exponent_ = 0;
  Weight total_weight_ = 0;
  std::vector<Weight> weights_;
  std::vector<std::uint32_t> offsets_;   // size vertex_count_ + 1
  std::vector<VertexId> adjacency_;      // size 2 * (vertex_count_ - 1)
};

}  // namespace treesplit
