#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "treesplit/generators.hpp"
#include "treesplit/rng.hpp"
#include "treesplit/tree.hpp"

using namespace treesplit;

namespace {

// Binomial coefficient small enough for exact doubles.
double binom(int n, int k) {
  double r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("generators");

TEST_CASE("rng stream is stable across runs") {
  Xoshiro256ss rng(42);
  const std::uint64_t first = rng.next();
  const std::uint64_t second = rng.next();
  Xoshiro256ss again(42);
  CHECK(again.next() == first);
  CHECK(again.next() == second);
  // bounded draws stay in range and hit both ends eventually
  Xoshiro256ss r2(7);
  bool lo = false, hi = false;
  for (int i = 0; i < 1000; ++i) {
    const auto x = r2.below(5);
    CHECK(x < 5);
    lo |= x == 0;
    hi |= x == 4;
  }
  CHECK(lo);
  CHECK(hi);
}

TEST_CASE("prufer trees are valid and deterministic") {
  CHECK(prufer_random_tree(1, 9).edges.empty());
  const auto pair = prufer_random_tree(2, 9);
  REQUIRE(pair.edges.size() == 1);

  const auto t3 = prufer_random_tree(3, 123);
  const auto again = prufer_random_tree(3, 123);
  CHECK(t3.edges == again.edges);
  // any tree on 3 vertices is a path
  (void)WeightedTree::build(t3, {1, 1, 1});

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto topo = prufer_random_tree(1 + seed % 40, seed);
    (void)WeightedTree::build(topo, std::vector<Weight>(topo.vertex_count, 1));
  }
}

TEST_CASE("prufer degree statistics match the uniform-sequence law") {
  // deg(v) - 1 is the multiplicity of v in a uniform sequence of length
  // n-2 over n symbols, so deg(v) = 1 + Binomial(n-2, 1/n).
  const int n = 8;
  const int samples = 100000;
  std::vector<std::vector<int>> degree_counts(n, std::vector<int>(n, 0));
  for (int s = 0; s < samples; ++s) {
    const auto topo = prufer_random_tree(n, 0xFACEull + s);
    std::vector<int> deg(n, 0);
    for (const auto& [a, b] : topo.edges) {
      ++deg[a];
      ++deg[b];
    }
    for (int v = 0; v < n; ++v) ++degree_counts[v][deg[v]];
  }
  const double p = 1.0 / n;
  for (int v = 0; v < n; ++v) {
    for (int d = 1; d <= n - 1; ++d) {
      const int k = d - 1;  // sequence multiplicity
      const double cell_p = binom(n - 2, k) * std::pow(p, k) * std::pow(1 - p, n - 2 - k);
      const double expected = samples * cell_p;
      if (expected < 5) continue;
      const double sigma = std::sqrt(expected * (1 - cell_p));
      CHECK(std::abs(degree_counts[v][d] - expected) <= 4 * sigma);
    }
  }
}

TEST_CASE("a 1xk grid is the unique path") {
  const auto topo = wilson_spanning_tree(1, 5, 77);
  REQUIRE(topo.vertex_count == 5);
  REQUIRE(topo.edges.size() == 4);
  std::set<std::pair<VertexId, VertexId>> canon;
  for (auto [a, b] : topo.edges) canon.insert({std::min(a, b), std::max(a, b)});
  const std::set<std::pair<VertexId, VertexId>> expected{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  CHECK(canon == expected);
}

TEST_CASE("wilson trees span the grid and stay inside it") {
  const std::uint32_t w = 6, h = 4;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto topo = wilson_spanning_tree(w, h, seed);
    (void)WeightedTree::build(topo, std::vector<Weight>(topo.vertex_count, 1));
    for (auto [a, b] : topo.edges) {
      const auto [lo, hi] = std::minmax(a, b);
      const bool horizontal = hi == lo + 1 && lo / w == hi / w;
      const bool vertical = hi == lo + w;
      CHECK((horizontal || vertical));
    }
  }
}

TEST_CASE("all four spanning trees of the 2x2 grid appear") {
  std::set<std::set<std::pair<VertexId, VertexId>>> shapes;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto topo = wilson_spanning_tree(2, 2, seed);
    std::set<std::pair<VertexId, VertexId>> canon;
    for (auto [a, b] : topo.edges) canon.insert({std::min(a, b), std::max(a, b)});
    shapes.insert(canon);
  }
  CHECK(shapes.size() == 4);
}

TEST_CASE("generators are deterministic per seed") {
  CHECK(wilson_spanning_tree(5, 5, 31).edges == wilson_spanning_tree(5, 5, 31).edges);
  CHECK(prufer_random_tree(64, 8).edges == prufer_random_tree(64, 8).edges);
}

TEST_CASE("assign_weights follows the spec") {
  const auto topo = prufer_random_tree(200, 4);
  const auto unit = assign_weights(topo, WeightSpec::constant(1));
  CHECK(unit.total_weight() == 200);

  const auto zero = assign_weights(topo, WeightSpec::uniform(0, 0, 1));
  CHECK(zero.total_weight() == 0);

  const auto t = assign_weights(topo, WeightSpec::uniform(1, 100, 11));
  Weight sum = 0;
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    CHECK(t.weight(v) >= 1);
    CHECK(t.weight(v) <= 100);
    sum += t.weight(v);
  }
  CHECK(sum == t.total_weight());
  // same seed, same weights
  const auto t2 = assign_weights(topo, WeightSpec::uniform(1, 100, 11));
  CHECK(t2.weights() == t.weights());
}

TEST_CASE("weight spec validation") {
  CHECK_THROWS_AS((void)WeightSpec::uniform(5, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)WeightSpec::constant(-1), std::invalid_argument);
}

TEST_SUITE_END();
