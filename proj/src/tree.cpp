#include "treesplit/tree.hpp"

#include <algorithm>
#include <ostream>

namespace treesplit {

const char* to_string(TreeErrc code) {
  switch (code) {
    case TreeErrc::edge_count_mismatch: return "edge_count_mismatch";
    case TreeErrc::disconnected: return "disconnected";
    case TreeErrc::self_loop: return "self_loop";
    case TreeErrc::duplicate_edge: return "duplicate_edge";
    case TreeErrc::id_out_of_range: return "id_out_of_range";
    case TreeErrc::negative_weight: return "negative_weight";
    case TreeErrc::weight_overflow: return "weight_overflow";
    case TreeErrc::edge_not_in_tree: return "edge_not_in_tree";
    case TreeErrc::isolated_vertex: return "isolated_vertex";
    case TreeErrc::no_edges: return "no_edges";
  }
  return "unknown";
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << "(" << e.u << "," << e.v << ")";
}

WeightedTree WeightedTree::build(std::uint32_t vertex_count, std::vector<Weight> weights,
                                 const std::vector<std::pair<VertexId, VertexId>>& edges,
                                 std::uint32_t scale_exponent) {
  if (vertex_count == 0)
    throw std::invalid_argument("vertex count must be positive");
  if (weights.size() != vertex_count)
    throw std::invalid_argument("weight list size does not match vertex count");

  for (std::uint32_t v = 0; v < vertex_count; ++v) {
    if (weights[v] < 0)
      throw TreeError(TreeErrc::negative_weight,
                      "vertex " + std::to_string(v) + " has negative weight " +
                          std::to_string(weights[v]));
  }
  __int128 sum = 0;
  for (Weight w : weights) sum += w;
  if (sum > std::numeric_limits<Weight>::max())
    throw TreeError(TreeErrc::weight_overflow,
                    "total vertex weight exceeds the signed 64-bit bound");

  if (edges.size() != static_cast<std::size_t>(vertex_count) - 1)
    throw TreeError(TreeErrc::edge_count_mismatch,
                    "expected " + std::to_string(vertex_count - 1) + " edges, got " +
                        std::to_string(edges.size()));

  std::vector<std::uint32_t> deg(vertex_count, 0);
  for (const auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count)
      throw TreeError(TreeErrc::id_out_of_range,
                      "edge endpoint out of range [0, " + std::to_string(vertex_count) +
                          "): (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (a == b)
      throw TreeError(TreeErrc::self_loop, "self-loop at vertex " + std::to_string(a));
    ++deg[a];
    ++deg[b];
  }

  WeightedTree t;
  t.vertex_count_ = vertex_count;
  t.scale_exponent_ = scale_exponent;
  t.total_weight_ = static_cast<Weight>(sum);
  t.weights_ = std::move(weights);
  t.offsets_.assign(vertex_count + 1, 0);
  for (std::uint32_t v = 0; v < vertex_count; ++v) t.offsets_[v + 1] = t.offsets_[v] + deg[v];
  t.adjacency_.resize(2 * (static_cast<std::size_t>(vertex_count) - 1));

  std::vector<std::uint32_t> cursor(t.offsets_.begin(), t.offsets_.end() - 1);
  for (const auto& [a, b] : edges) {
    t.adjacency_[cursor[a]++] = b;
    t.adjacency_[cursor[b]++] = a;
  }
  for (std::uint32_t v = 0; v < vertex_count; ++v) {
    auto first = t.adjacency_.begin() + t.offsets_[v];
    auto last = t.adjacency_.begin() + t.offsets_[v + 1];
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last);
    if (dup != last)
      throw TreeError(TreeErrc::duplicate_edge,
                      "duplicate edge (" + std::to_string(std::min(v, *dup)) + "," +
                          std::to_string(std::max(v, *dup)) + ")");
  }

  // n-1 edges and no duplicates, so connected and acyclic are equivalent.
  std::vector<std::uint8_t> seen(vertex_count, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::uint32_t visited = 0;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    ++visited;
    for (VertexId w : t.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (visited != vertex_count)
    throw TreeError(TreeErrc::disconnected,
                    "graph is disconnected: reached " + std::to_string(visited) + " of " +
                        std::to_string(vertex_count) + " vertices");
  return t;
}

WeightedTree WeightedTree::build(const TreeTopology& topology, std::vector<Weight> weights,
                                 std::uint32_t scale_exponent) {
  return build(topology.vertex_count, std::move(weights), topology.edges, scale_exponent);
}

bool WeightedTree::has_edge(VertexId a, VertexId b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) return false;
  auto nbrs = neighbors(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<Edge> WeightedTree::edges() const {
  std::vector<Edge> out;
  if (vertex_count_ > 0) out.reserve(vertex_count_ - 1);
  for (VertexId u = 0; u < vertex_count_; ++u)
    for (VertexId w : neighbors(u))
      if (w > u) out.push_back(Edge{u, w});
  return out;
}

std::vector<ComponentRef> WeightedTree::components_without(VertexId v) const {
  check_vertex(v);
  std::vector<ComponentRef> out;
  out.reserve(degree(v));
  std::vector<std::uint8_t> seen(vertex_count_, 0);
  seen[v] = 1;
  std::vector<VertexId> stack;
  for (VertexId anchor : neighbors(v)) {
    Weight component = 0;
    seen[anchor] = 1;
    stack.assign(1, anchor);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      component += weights_[u];
      for (VertexId w : neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.push_back(ComponentRef{anchor, component});
  }
  return out;
}

WeightedTree::RootedScan WeightedTree::rooted_scan(VertexId root) const {
  check_vertex(root);
  const std::uint32_t n = vertex_count_;
  RootedScan s;
  s.order.resize(n);
  s.parent_pos.resize(n);
  s.child_begin.resize(n + 1);
  s.down.resize(n);
  s.order[0] = root;
  s.parent_pos[0] = 0;

  constexpr std::uint32_t kFarLookahead = 64;
  constexpr std::uint32_t kNearLookahead = 24;
  std::uint32_t filled = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i + kFarLookahead < filled) {
      const VertexId ahead = s.order[i + kFarLookahead];
      __builtin_prefetch(&offsets_[ahead]);
    }
    if (i + kNearLookahead < filled) {
      const VertexId near = s.order[i + kNearLookahead];
      __builtin_prefetch(adjacency_.data() + offsets_[near]);
    }
    s.child_begin[i] = filled;
    const VertexId u = s.order[i];
    const VertexId parent = i == 0 ? kNoVertex : s.order[s.parent_pos[i]];
    const std::uint32_t first = offsets_[u];
    const std::uint32_t last = offsets_[u + 1];
    for (std::uint32_t a = first; a < last; ++a) {
      const VertexId w = adjacency_[a];
      if (w == parent) continue;
      s.order[filled] = w;
      s.parent_pos[filled] = i;
      ++filled;
    }
  }
  s.child_begin[n] = filled;

  // children sit at higher positions, so one descending sweep finalizes
  // every subtree sum with purely streaming reads
  for (std::uint32_t i = n; i-- > 0;) {
    if (i >= kFarLookahead) __builtin_prefetch(&weights_[s.order[i - kFarLookahead]]);
    Weight sum = weights_[s.order[i]];
    const std::uint32_t last = s.child_begin[i + 1];
    for (std::uint32_t q = s.child_begin[i]; q < last; ++q) sum += s.down[q];
    s.down[i] = sum;
  }
  return s;
}

WeightedTree::RootedWeights WeightedTree::subtree_weights(VertexId root) const {
  const RootedScan s = rooted_scan(root);
  RootedWeights r;
  r.parent.resize(vertex_count_);
  r.down_weight.resize(vertex_count_);
  r.parent[root] = kNoVertex;
  for (std::uint32_t i = 1; i < vertex_count_; ++i)
    r.parent[s.order[i]] = s.order[s.parent_pos[i]];
  for (std::uint32_t i = 0; i < vertex_count_; ++i)
    r.down_weight[s.order[i]] = s.down[i];
  return r;
}

}  // namespace treesplit
