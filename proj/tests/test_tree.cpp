#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "test_support.hpp"
#include "treesplit/tree.hpp"

using namespace treesplit;

namespace {

TreeErrc build_error(std::uint32_t n, std::vector<Weight> weights,
                     const std::vector<std::pair<VertexId, VertexId>>& edges) {
  try {
    WeightedTree::build(n, std::move(weights), edges);
  } catch (const TreeError& e) {
    return e.code();
  }
  FAIL("build unexpectedly succeeded");
  return TreeErrc::edge_count_mismatch;
}

}  // namespace

TEST_SUITE_BEGIN("tree");

TEST_CASE("build accepts the smallest nontrivial tree") {
  const auto t = WeightedTree::build(2, {5, 5}, {{0, 1}});
  CHECK(t.vertex_count() == 2);
  CHECK(t.total_weight() == 10);
  CHECK(t.has_edge(0, 1));
  CHECK(t.has_edge(1, 0));
  CHECK(t.degree(0) == 1);
}

TEST_CASE("build accepts a single-vertex tree") {
  const auto t = WeightedTree::build(1, {7}, {});
  CHECK(t.total_weight() == 7);
  CHECK(t.edges().empty());
  CHECK(t.components_without(0).empty());
}

TEST_CASE("build rejects malformed inputs with distinct codes") {
  CHECK(build_error(3, {1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}}) ==
        TreeErrc::edge_count_mismatch);
  CHECK(build_error(4, {1, 1, 1, 1}, {{0, 1}, {2, 3}, {0, 1}}) ==
        TreeErrc::duplicate_edge);
  CHECK(build_error(4, {1, 1, 1, 1}, {{0, 1}, {1, 1}, {2, 3}}) == TreeErrc::self_loop);
  CHECK(build_error(3, {1, 1, 1}, {{0, 1}, {1, 7}}) == TreeErrc::id_out_of_range);
  CHECK(build_error(2, {1, -3}, {{0, 1}}) == TreeErrc::negative_weight);
  // 3 edges among 4 vertices but one vertex isolated and one edge doubled
  CHECK(build_error(4, {1, 1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}}) ==
        TreeErrc::disconnected);
  const Weight big = std::numeric_limits<Weight>::max() / 2 + 1;
  CHECK(build_error(2, {big, big}, {{0, 1}}) == TreeErrc::weight_overflow);
}

TEST_CASE("total weight of the golden trees") {
  CHECK(fixtures::golden13().total_weight() == 47);
  CHECK(fixtures::golden7().total_weight() == 10);
}

TEST_CASE("adjacency is sorted and edges come out canonical") {
  const auto t = fixtures::golden13();
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    const auto nbrs = t.neighbors(v);
    CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
  }
  const auto edges = t.edges();
  CHECK(edges.size() == 12);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  for (const auto& e : edges) CHECK(e.u < e.v);
}

TEST_CASE("components_without the golden13 hub") {
  const auto t = fixtures::golden13();
  const auto comps = t.components_without(fixtures::kGolden13Hub);
  REQUIRE(comps.size() == t.degree(fixtures::kGolden13Hub));
  REQUIRE(comps.size() == 5);
  Weight sum = 0;
  for (const auto& c : comps) {
    sum += c.weight;
    CHECK(c.weight < 23);  // strictly under half-window lower edge, times two
  }
  CHECK(sum == 47 - 6);
  // ordered by ascending anchor
  CHECK(comps[0].anchor == 1);
  CHECK(comps[0].weight == 6);
  CHECK(comps[1].anchor == 3);
  CHECK(comps[1].weight == 16);
  CHECK(comps[2].anchor == 7);
  CHECK(comps[2].weight == 9);
  CHECK(comps[3].anchor == 10);
  CHECK(comps[3].weight == 6);
  CHECK(comps[4].anchor == 11);
  CHECK(comps[4].weight == 4);
}

TEST_CASE("components_without a path leaf") {
  const auto t = fixtures::path_tree({1, 1, 1});
  const auto comps = t.components_without(0);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].anchor == 1);
  CHECK(comps[0].weight == 2);
}

TEST_CASE("subtree weights on a path") {
  const auto t = fixtures::path_tree({1, 2, 3});
  const auto r = t.subtree_weights(0);
  CHECK(r.parent[0] == kNoVertex);
  CHECK(r.parent[1] == 0);
  CHECK(r.parent[2] == 1);
  CHECK(r.down_weight == std::vector<Weight>{6, 5, 3});
}

TEST_CASE("subtree weights on a star rooted at the center") {
  const auto t = fixtures::star_tree(0, {4, 5, 6, 7});
  const auto r = t.subtree_weights(0);
  CHECK(r.down_weight[0] == t.total_weight());
  for (VertexId leaf = 1; leaf < 5; ++leaf) {
    CHECK(r.parent[leaf] == 0);
    CHECK(r.down_weight[leaf] == t.weight(leaf));
  }
}

TEST_CASE("subtree weights agree with fresh component traversals") {
  // every non-root edge: the down side equals an independent flood fill
  for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
    const auto t = support::random_tree(50, 0, 20, seed);
    const VertexId root = static_cast<VertexId>(seed % 50);
    const auto r = t.subtree_weights(root);
    CHECK(r.down_weight[root] == t.total_weight());
    for (VertexId u = 0; u < t.vertex_count(); ++u) {
      if (u == root) continue;
      const auto side = support::naive_side_weight(t, Edge{u, r.parent[u]});
      CHECK(r.down_weight[u] == side);
      // parent-side complement
      CHECK(r.down_weight[u] + support::naive_side_weight(t, Edge{r.parent[u], u}) ==
            t.total_weight());
    }
  }
}

TEST_CASE("components_without sums to total minus the vertex, any vertex") {
  for (std::uint64_t seed : {21ull, 22ull}) {
    const auto t = support::random_tree(80, 0, 50, seed);
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
      const auto comps = t.components_without(v);
      CHECK(comps.size() == t.degree(v));
      Weight sum = 0;
      for (const auto& c : comps) sum += c.weight;
      CHECK(sum + t.weight(v) == t.total_weight());
    }
  }
}

TEST_CASE("a million-vertex path builds and traverses iteratively") {
  const std::uint32_t n = 1'000'000;
  std::vector<Weight> weights(n, 1);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n - 1);
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  const auto t = WeightedTree::build(n, std::move(weights), edges);
  CHECK(t.total_weight() == n);
  const auto r = t.subtree_weights(0);  // depth n-1: must not recurse
  CHECK(r.down_weight[n - 1] == 1);
  CHECK(r.down_weight[0] == n);
}

TEST_SUITE_END();
