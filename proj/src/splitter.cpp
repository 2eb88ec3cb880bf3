#include "treesplit/splitter.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

namespace treesplit {

ToleranceWindow ToleranceWindow::for_tree(const WeightedTree& t, Weight doubled_epsilon) {
  if (doubled_epsilon < 0)
    throw std::invalid_argument("doubled epsilon must be non-negative");
  return ToleranceWindow{t.total_weight(), doubled_epsilon};
}

std::pair<Weight, Weight> edge_split_weights(const WeightedTree& t, Edge e) {
  if (!t.has_edge(e.u, e.v))
    throw TreeError(TreeErrc::edge_not_in_tree,
                    "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") is not in the tree");
  // Flood from e.u without crossing e. The tree has no other route to e.v.
  std::vector<std::uint8_t> seen(t.vertex_count(), 0);
  seen[e.u] = 1;
  std::vector<VertexId> stack{e.u};
  Weight side = 0;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    side += t.weight(x);
    for (VertexId w : t.neighbors(x)) {
      if (x == e.u && w == e.v) continue;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return {side, t.total_weight() - side};
}

bool is_cut_edge(const WeightedTree& t, Edge e, const ToleranceWindow& win) {
  assert(win.total == t.total_weight());
  // w2 = S - w1 makes the two side conditions equivalent.
  return win.in_range(edge_split_weights(t, e).first);
}

std::vector<Edge> oracle_find_all(const WeightedTree& t, const ToleranceWindow& win) {
  assert(win.total == t.total_weight());
  std::vector<Edge> out;
  if (t.vertex_count() < 2) return out;
  const auto scan = t.rooted_scan(0);
  for (std::uint32_t i = 1; i < t.vertex_count(); ++i)
    if (win.in_range(scan.down[i]))
      out.push_back(Edge::canonical(scan.order[scan.parent_pos[i]], scan.order[i]));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Weight of the component of T - {v} hanging off `anchor`. `seen` has v
// marked; components of distinct anchors are disjoint, so the buffer is
// shared across anchors within one classification.
Weight flood_component(const WeightedTree& t, VertexId anchor,
                       std::vector<std::uint8_t>& seen, std::vector<VertexId>& stack) {
  Weight component = 0;
  seen[anchor] = 1;
  stack.assign(1, anchor);
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    component += t.weight(u);
    for (VertexId w : t.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return component;
}

Classification classify_from_components(
    VertexId v, const ToleranceWindow& win,
    const std::vector<ComponentRef>& components) {
  std::optional<ComponentRef> in_window;
  std::optional<ComponentRef> too_heavy;
  for (const ComponentRef& c : components) {
    if (!in_window && win.in_range(c.weight)) in_window = c;
    if (!too_heavy && win.above_upper(c.weight)) too_heavy = c;
  }
  if (in_window)
    return FoundCut{Edge::canonical(v, in_window->anchor), in_window->weight};
  if (too_heavy) return DescendStep{too_heavy->anchor, too_heavy->weight};
  return NoSplitWitness{v};
}

SplitVerdict make_split_verdict(const WeightedTree& t, VertexId examined,
                                const FoundCut& found) {
  // found.side_weight is the weight on the anchor side, i.e. away from the
  // examined vertex. Orient it onto edge.u.
  const Weight total = t.total_weight();
  Weight w1 = found.edge.u == examined ? total - found.side_weight : found.side_weight;
  return SplitVerdict{found.edge, w1, total - w1};
}

template <typename ClassifyFn>
CutResult run_search(const WeightedTree& t, ClassifyFn&& classify, VertexId start) {
  CutResult result;
  VertexId v = start;
  for (std::uint32_t iter = 0; iter < t.vertex_count(); ++iter) {
    Classification c = classify(v);
    result.trace.push_back(TraceStep{v, c});
    if (const auto* found = std::get_if<FoundCut>(&c)) {
      result.verdict = make_split_verdict(t, v, *found);
      return result;
    }
    if (const auto* witness = std::get_if<NoSplitWitness>(&c)) {
      result.verdict = *witness;
      return result;
    }
    v = std::get<DescendStep>(c).next;
  }
  throw std::logic_error("cut-edge search did not terminate within n iterations");
}

}  // namespace

Classification classify_vertex(const WeightedTree& t, VertexId v,
                               const ToleranceWindow& win,
                               std::optional<VertexId> excluded_neighbor) {
  assert(win.total == t.total_weight());
  std::vector<std::uint8_t> seen(t.vertex_count(), 0);
  seen[v] = 1;
  std::vector<VertexId> stack;
  std::vector<ComponentRef> components;
  for (VertexId anchor : t.neighbors(v)) {
    if (excluded_neighbor && anchor == *excluded_neighbor) continue;
    components.push_back(ComponentRef{anchor, flood_component(t, anchor, seen, stack)});
  }
  return classify_from_components(v, win, components);
}

CutResult find_cut_edge_literal(const WeightedTree& t, const ToleranceWindow& win,
                                VertexId start) {
  std::optional<VertexId> excluded;
  auto classify = [&](VertexId v) {
    Classification c = classify_vertex(t, v, win, excluded);
    excluded = v;  // next iteration must not walk back out of T_max
    return c;
  };
  return run_search(t, classify, start);
}

CutResult find_cut_edge_descent(const WeightedTree& t, const ToleranceWindow& win,
                                VertexId start) {
  const WeightedTree::RootedScan scan = t.rooted_scan(start);
  std::uint32_t pos = 0;
  auto classify = [&](VertexId v) -> Classification {
    const std::uint32_t first = scan.child_begin[pos];
    const std::uint32_t last = scan.child_begin[pos + 1];
    std::uint32_t in_window = kNoVertex;
    std::uint32_t too_heavy = kNoVertex;
    for (std::uint32_t q = first; q < last; ++q) {
      const Weight w = scan.down[q];
      if (in_window == kNoVertex && win.in_range(w)) in_window = q;
      if (too_heavy == kNoVertex && win.above_upper(w)) too_heavy = q;
    }
    if (in_window != kNoVertex)
      return FoundCut{Edge::canonical(v, scan.order[in_window]), scan.down[in_window]};
    if (too_heavy != kNoVertex) {
      pos = too_heavy;
      return DescendStep{scan.order[too_heavy], scan.down[too_heavy]};
    }
    return NoSplitWitness{v};
  };
  return run_search(t, classify, start);
}

VertexId improved_start(const WeightedTree& t) {
  VertexId best = 0;
  for (VertexId v = 1; v < t.vertex_count(); ++v) {
    const auto dv = t.degree(v);
    const auto db = t.degree(best);
    if (dv > db || (dv == db && t.weight(v) > t.weight(best))) best = v;
  }
  return best;
}

ComponentAverage avg_component_weight(const WeightedTree& t, VertexId v) {
  if (t.degree(v) == 0)
    throw TreeError(TreeErrc::isolated_vertex,
                    "vertex " + std::to_string(v) + " has no incident edges");
  return ComponentAverage{t.total_weight() - t.weight(v),
                          static_cast<Weight>(t.degree(v))};
}

CutResult split_unweighted(const TreeTopology& topology) {
  WeightedTree t = WeightedTree::build(
      topology, std::vector<Weight>(topology.vertex_count, 1));
  const ToleranceWindow win = ToleranceWindow::for_tree(t, 0);
  return find_cut_edge_descent(t, win, improved_start(t));
}

bool is_notsplittable_witness(const WeightedTree& t, VertexId v,
                              const ToleranceWindow& win) {
  for (const ComponentRef& c : t.components_without(v))
    if (!win.below_lower(c.weight)) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const Classification& c) {
  if (const auto* f = std::get_if<FoundCut>(&c))
    return os << "found " << f->edge << " side=" << f->side_weight;
  if (const auto* d = std::get_if<DescendStep>(&c))
    return os << "descend " << d->next << " weight=" << d->component_weight;
  return os << "not_splittable witness=" << std::get<NoSplitWitness>(c).witness;
}

}  // namespace treesplit
