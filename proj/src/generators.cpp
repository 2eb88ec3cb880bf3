#include "treesplit/generators.hpp"

#include <stdexcept>
#include <string>

#include "treesplit/rng.hpp"

namespace treesplit {

WeightSpec WeightSpec::constant(Weight value) {
  if (value < 0) throw std::invalid_argument("constant weight must be non-negative");
  WeightSpec s;
  s.kind = Kind::constant;
  s.constant_value = value;
  return s;
}

WeightSpec WeightSpec::uniform(Weight lo, Weight hi, std::uint64_t seed) {
  if (lo > hi) throw std::invalid_argument("uniform weight range requires lo <= hi");
  if (lo < 0) throw std::invalid_argument("weights must be non-negative");
  WeightSpec s;
  s.kind = Kind::uniform;
  s.lo = lo;
  s.hi = hi;
  s.seed = seed;
  return s;
}

TreeTopology prufer_random_tree(std::uint32_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("vertex count must be positive");
  TreeTopology topo;
  topo.vertex_count = n;
  if (n == 1) return topo;
  topo.edges.reserve(n - 1);
  if (n == 2) {
    topo.edges.emplace_back(0, 1);
    return topo;
  }

  Xoshiro256ss rng(seed);
  std::vector<VertexId> sequence(n - 2);
  for (auto& a : sequence) a = static_cast<VertexId>(rng.below(n));

  // Linear-time decode: degree = 1 + multiplicity in the sequence, leaves
  // consumed in increasing order via a moving pointer.
  std::vector<std::uint32_t> degree(n, 1);
  for (VertexId a : sequence) ++degree[a];

  VertexId ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  VertexId leaf = ptr;
  for (VertexId a : sequence) {
    topo.edges.emplace_back(leaf, a);
    if (--degree[a] == 1 && a < ptr) {
      leaf = a;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  topo.edges.emplace_back(leaf, n - 1);
  return topo;
}

TreeTopology wilson_spanning_tree(std::uint32_t width, std::uint32_t height,
                                  std::uint64_t seed) {
  if (width == 0 || height == 0)
    throw std::invalid_argument("grid dimensions must be positive");
  const std::uint64_t n64 = static_cast<std::uint64_t>(width) * height;
  if (n64 > 0xFFFFFFFFull) throw std::invalid_argument("grid too large");
  const auto n = static_cast<std::uint32_t>(n64);

  TreeTopology topo;
  topo.vertex_count = n;
  if (n == 1) return topo;
  topo.edges.reserve(n - 1);

  // Grid neighbors in ascending vertex-id order.
  VertexId nbrs[4];
  auto neighbors_of = [&](VertexId u) {
    const std::uint32_t r = u / width;
    const std::uint32_t c = u % width;
    std::uint32_t k = 0;
    if (r > 0) nbrs[k++] = u - width;
    if (c > 0) nbrs[k++] = u - 1;
    if (c + 1 < width) nbrs[k++] = u + 1;
    if (r + 1 < height) nbrs[k++] = u + width;
    return k;
  };

  Xoshiro256ss rng(seed);
  std::vector<std::uint8_t> in_tree(n, 0);
  std::vector<VertexId> successor(n, kNoVertex);
  in_tree[0] = 1;
  for (VertexId v = 1; v < n; ++v) {
    if (in_tree[v]) continue;
    // Random walk until the tree is hit; successor overwrites erase loops.
    VertexId u = v;
    while (!in_tree[u]) {
      const std::uint32_t k = neighbors_of(u);
      successor[u] = nbrs[rng.below(k)];
      u = successor[u];
    }
    u = v;
    while (!in_tree[u]) {
      in_tree[u] = 1;
      topo.edges.emplace_back(u, successor[u]);
      u = successor[u];
    }
  }
  return topo;
}

WeightedTree assign_weights(const TreeTopology& topology, const WeightSpec& spec) {
  std::vector<Weight> weights(topology.vertex_count);
  switch (spec.kind) {
    case WeightSpec::Kind::constant:
      for (auto& w : weights) w = spec.constant_value;
      break;
    case WeightSpec::Kind::uniform: {
      Xoshiro256ss rng(spec.seed);
      for (auto& w : weights) w = rng.range(spec.lo, spec.hi);
      break;
    }
  }
  return WeightedTree::build(topology, std::move(weights));
}

}  // namespace treesplit
