#pragma once

#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

#include "treesplit/tree.hpp"

namespace treesplit {

/// The half-weight acceptance window. Stores the total S and the doubled
/// tolerance 2e as exact integers in the tree's scaled units; membership is
/// |2w - S| <= 2e, evaluated in 128-bit arithmetic so nothing overflows.
struct ToleranceWindow {
  Weight total = 0;
  Weight doubled_epsilon = 0;

  bool in_range(Weight w) const {
    __int128 d = 2 * static_cast<__int128>(w) - total;
    if (d < 0) d = -d;
    return d <= doubled_epsilon;
  }
  bool above_upper(Weight w) const {
    return 2 * static_cast<__int128>(w) >
           static_cast<__int128>(total) + doubled_epsilon;
  }
  bool below_lower(Weight w) const {
    return 2 * static_cast<__int128>(w) <
           static_cast<__int128>(total) - doubled_epsilon;
  }

  static ToleranceWindow for_tree(const WeightedTree& t, Weight doubled_epsilon);
};

// Outcome of examining a single vertex: either an incident edge certifies a
// split, or one component is too heavy and the search moves into it, or every
// component is too light and the vertex witnesses non-splittability.
struct FoundCut {
  Edge edge;
  Weight side_weight;  // weight of the component on the non-examined side
  friend bool operator==(const FoundCut&, const FoundCut&) = default;
};
struct DescendStep {
  VertexId next;
  Weight component_weight;
  friend bool operator==(const DescendStep&, const DescendStep&) = default;
};
struct NoSplitWitness {
  VertexId witness;
  friend bool operator==(const NoSplitWitness&, const NoSplitWitness&) = default;
};
using Classification = std::variant<FoundCut, DescendStep, NoSplitWitness>;

struct TraceStep {
  VertexId vertex;
  Classification outcome;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct SplitVerdict {
  Edge edge;
  Weight w1;  // side containing edge.u
  Weight w2;  // side containing edge.v
  friend bool operator==(const SplitVerdict&, const SplitVerdict&) = default;
};

struct CutResult {
  std::variant<SplitVerdict, NoSplitWitness> verdict;
  std::vector<TraceStep> trace;

  bool is_split() const { return std::holds_alternative<SplitVerdict>(verdict); }
  const SplitVerdict* split() const { return std::get_if<SplitVerdict>(&verdict); }
  const NoSplitWitness* witness() const { return std::get_if<NoSplitWitness>(&verdict); }
};

/// Weights of the two components of T - {e}: first the side containing e.u,
/// then the side containing e.v. Throws EdgeNotInTree.
std::pair<Weight, Weight> edge_split_weights(const WeightedTree& t, Edge e);

/// True iff both sides of T - {e} land in the window.
bool is_cut_edge(const WeightedTree& t, Edge e, const ToleranceWindow& win);

/// Brute force: one rooted subtree-weight pass, then every edge tested.
/// Returns all cut edges in canonical order.
std::vector<Edge> oracle_find_all(const WeightedTree& t, const ToleranceWindow& win);

/// Examine vertex v. Components are scanned in ascending anchor order;
/// excluded_neighbor (when set) marks the direction that leads out of the
/// current search component and is skipped. An in-window component wins
/// (smallest qualifying anchor), else the unique too-heavy component is
/// descended into, else v is a witness.
Classification classify_vertex(const WeightedTree& t, VertexId v,
                               const ToleranceWindow& win,
                               std::optional<VertexId> excluded_neighbor = {});

/// The iterative search exactly as specified: reclassify, then step into the
/// too-heavy component, recomputing component weights by traversal every
/// iteration. Thresholds always reference the original total. Worst-case
/// quadratic; kept as the reference implementation.
CutResult find_cut_edge_literal(const WeightedTree& t, const ToleranceWindow& win,
                                VertexId start);

/// Linear-time variant: roots the tree at start, computes subtree weights
/// once, and walks downward. Verdict and trace vertex sequence are identical
/// to find_cut_edge_literal for the same start.
CutResult find_cut_edge_descent(const WeightedTree& t, const ToleranceWindow& win,
                                VertexId start);

/// Start-vertex heuristic: among vertices of maximum degree, the one of
/// maximum weight; remaining ties broken by smallest id.
VertexId improved_start(const WeightedTree& t);

/// Average component weight of T - {v} as an exact rational
/// (total - w(v)) / deg(v), unreduced. Compare by cross-multiplication.
struct ComponentAverage {
  Weight numerator;
  Weight denominator;
  friend bool operator==(const ComponentAverage&, const ComponentAverage&) = default;
};
ComponentAverage avg_component_weight(const WeightedTree& t, VertexId v);

/// Equal-order split of an unweighted tree: unit weights, zero tolerance,
/// improved start, descent search.
CutResult split_unweighted(const TreeTopology& topology);

/// Full-tree witness check: every component of T - {v} is strictly below
/// the window.
bool is_notsplittable_witness(const WeightedTree& t, VertexId v,
                              const ToleranceWindow& win);

std::ostream& operator<<(std::ostream& os, const Classification& c);

}  // namespace treesplit
