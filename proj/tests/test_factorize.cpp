#include "doctest.h"
#include "linarb/factorize.hpp"
#include "linarb/generators.hpp"
#include "oracles.hpp"

using namespace linarb;

namespace {

bool all_even_cycles(const TwoFactorization& tf) {
  for (const auto& f : tf.factors) {
    for (const auto& c : f.cycles) {
      if (c.length() % 2 != 0 || c.length() < 4) return false;
    }
  }
  return true;
}

void check_factorization_laws(const Graph& g, int k) {
  const TwoFactorization tf = two_factorize(g, k);
  const auto check = verify_two_factorization(g, tf);
  INFO(check.diagnostic);
  REQUIRE(check.ok);
  int total = 0, shortest = kInfiniteGirth;
  for (const auto& f : tf.factors) {
    for (const auto& c : f.cycles) {
      total += c.length();
      shortest = std::min(shortest, c.length());
    }
  }
  CHECK(total == g.edge_count());
  CHECK(total == k * g.vertex_count());
  CHECK(shortest >= girth(g));
  int flat = 0;
  for (CycleRef r : tf.flat_cycles()) {
    for (EdgeId e : tf.cycle(r).edges) CHECK(tf.cycle_index[idx(e)] == r);
    ++flat;
  }
  CHECK(flat == tf.cycle_count());
}

}  // namespace

TEST_CASE("two_factorize examples") {
  const TwoFactorization c6 = two_factorize(cycle_graph(6), 1);
  REQUIRE(c6.factors.size() == 1);
  REQUIRE(c6.factors[0].cycles.size() == 1);
  CHECK(c6.factors[0].cycles[0].length() == 6);
  CHECK(verify_two_factorization(cycle_graph(6), c6).ok);

  const Graph k5 = complete_graph(5);
  const TwoFactorization tf5 = two_factorize(k5, 2);
  CHECK(verify_two_factorization(k5, tf5).ok);
  for (const auto& f : tf5.factors) {
    REQUIRE(f.cycles.size() == 1);
    CHECK(f.cycles[0].length() == 5);
  }

  const Graph k44 = complete_bipartite_graph(4, 4);
  const TwoFactorization tf44 = two_factorize(k44, 2);
  CHECK(verify_two_factorization(k44, tf44).ok);
  CHECK(all_even_cycles(tf44));
}

TEST_CASE("verify_two_factorization diagnostics") {
  const Graph k5 = complete_graph(5);
  const TwoFactorization good = two_factorize(k5, 2);
  std::vector<std::vector<std::vector<Vertex>>> twice = {
      {good.factors[0].cycles[0].vertices}, {good.factors[0].cycles[0].vertices}};
  const auto dup = verify_two_factorization(k5, factorization_from_cycles(k5, twice));
  CHECK_FALSE(dup.ok);
  CHECK(dup.diagnostic == "edge-disjointness violated");

  const Graph c6_chord(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
  const auto miss = verify_two_factorization(
      c6_chord, factorization_from_cycles(c6_chord, {{{0, 1, 2, 3, 4, 5}}}));
  CHECK_FALSE(miss.ok);
  CHECK(miss.diagnostic == "union does not cover E(G)");

  TwoFactorization wrong_k = good;
  wrong_k.k = 3;
  CHECK_FALSE(verify_two_factorization(k5, wrong_k).ok);

  // One triangle cannot span six vertices.
  const Graph two_tri(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto partial = verify_two_factorization(
      two_tri, factorization_from_cycles(two_tri, {{{0, 1, 2}}}));
  CHECK_FALSE(partial.ok);
  CHECK(partial.diagnostic.find("misses vertex") != std::string::npos);

  CHECK_THROWS_AS(factorization_from_cycles(k5, {{{0, 1}}}), FactorizationError);
}

TEST_CASE("property: factorization laws on generated 2k-regular graphs") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    check_factorization_laws(random_regular_with_girth(21 + static_cast<int>(seed), k, 3, seed).graph, k);
  }
  check_factorization_laws(circulant_graph(13, {1, 5}), 2);
  check_factorization_laws(circulant_graph(17, {1, 2, 4}), 3);
  check_factorization_laws(complete_graph(7), 3);
  check_factorization_laws(complete_graph(9), 4);
  check_factorization_laws(complete_bipartite_graph(6, 6), 3);
}

TEST_CASE("disconnected inputs are factorized per component") {
  std::vector<Edge> edges;
  for (int base : {0, 5}) {
    for (int u = 0; u < 5; ++u) {
      for (int v = u + 1; v < 5; ++v) edges.push_back({base + u, base + v});
    }
  }
  const Graph two_k5(10, edges);
  check_factorization_laws(two_k5, 2);
  const TwoFactorization tf = two_factorize(two_k5, 2);
  for (const auto& f : tf.factors) CHECK(f.cycles.size() == 2);
}

TEST_CASE("two_factorize is deterministic") {
  const Graph g = random_regular_with_girth(30, 3, 3, 5).graph;
  const auto a = two_factorize(g, 3), b = two_factorize(g, 3);
  for (int f = 0; f < 3; ++f) {
    REQUIRE(a.factors[f].cycles.size() == b.factors[f].cycles.size());
    for (std::size_t c = 0; c < a.factors[f].cycles.size(); ++c) {
      CHECK(a.factors[f].cycles[c].vertices == b.factors[f].cycles[c].vertices);
    }
  }
}
