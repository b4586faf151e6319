#include "doctest.h"
#include "linarb/embed.hpp"
#include "linarb/generators.hpp"
#include "oracles.hpp"

using namespace linarb;

namespace {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, e);
}

// Slot count implied by a shift set.
int slots(const std::vector<int>& shifts, int m) {
  int total = 0;
  for (int s : shifts) total += 2 * s == m ? 1 : 2;
  return total;
}

}  // namespace

TEST_CASE("single edge into a 2-regular host with M = 6") {
  const Graph k2 = path(2);
  const auto eg = embed(k2, 2, 3, 6);
  CHECK(eg.spec.layer_count == 6);
  CHECK(eg.graph.vertex_count() == 12);
  CHECK(is_regular(eg.graph, 2));
  CHECK(eg.spec.shifts[0] == std::vector<int>{3});
  CHECK(oracle::girth(eg.graph) >= 3);
  CHECK(verify_embedding(k2, eg, 2, 3).ok);
}

TEST_CASE("regular H yields disjoint copies") {
  const Graph c5 = cycle_graph(5);
  const auto eg = embed(c5, 2, 5, 4);
  CHECK(eg.graph.edge_count() == 4 * 5);
  for (const auto& s : eg.spec.shifts) CHECK(s.empty());
  CHECK(connected_components(eg.graph).count == 4);
  CHECK(verify_embedding(c5, eg, 2, 5).ok);
}

TEST_CASE("path on three vertices, delta 2, girth 4") {
  const Graph p3 = path(3);
  const auto eg = embed(p3, 2, 4);
  CHECK(eg.spec.layer_count == default_layer_count(2, 4));
  CHECK(is_regular(eg.graph, 2));
  CHECK(oracle::girth(eg.graph) >= 4);
  CHECK(verify_embedding(p3, eg, 2, 4).ok);
}

TEST_CASE("layout and slot accounting") {
  const Graph h = star(3);
  const auto eg = embed(h, 3, 6);
  const int m = eg.spec.layer_count;
  CHECK(m % 2 == 0);
  for (int i = 0; i < h.vertex_count(); ++i) {
    CHECK(slots(eg.spec.shifts[i], m) == 3 - h.degree(i));
    CHECK(eg.base_layer[i] == i * m);
    std::vector<int> sorted = eg.spec.shifts[i];
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (int s : sorted) CHECK((s > 0 && 2 * s <= m));
  }
  // Every layer is a copy of H.
  for (int a = 0; a < m; ++a) {
    for (const Edge& e : h.edges()) {
      CHECK(eg.graph.find_edge(layered_vertex(e.u, a, m), layered_vertex(e.v, a, m)));
    }
  }
  const auto side = embedding_sidecar(eg);
  CHECK(side.at("layer_count") == m);
  CHECK(side.at("shifts").size() == 4);
  CHECK(side.at("base_layer").size() == 4);
}

TEST_CASE("verify_embedding rejects a stray base-layer edge") {
  const Graph h = path(3);
  auto eg = embed(h, 2, 4);
  const int m = eg.spec.layer_count;
  std::vector<Edge> edges(eg.graph.edges().begin(), eg.graph.edges().end());
  edges.push_back({layered_vertex(0, 0, m), layered_vertex(2, 0, m)});
  eg.graph = Graph(eg.graph.vertex_count(), edges);
  const auto check = verify_embedding(h, eg, 2, 4);
  CHECK_FALSE(check.ok);
  REQUIRE_FALSE(check.diagnostics.empty());
  CHECK(check.diagnostics[0].find("not induced") == 0);
}

TEST_CASE("verify_embedding catches a short circulant cycle") {
  // One isolated vertex, M = 8, shifts {1, 2}: the fibre is C_8(1, 2), which
  // has the triangle 0-1-2.
  const Graph h(1, {});
  EmbeddedGraph eg;
  eg.spec = {4, 4, 8, {{1, 2}}};
  eg.graph = build_layered_graph(h, eg.spec);
  eg.base_layer = {0};
  CHECK(is_regular(eg.graph, 4));
  CHECK(oracle::girth(eg.graph) == 3);
  const auto check = verify_embedding(h, eg, 4, 4);
  CHECK_FALSE(check.ok);
  REQUIRE(check.diagnostics.size() == 1);
  CHECK(check.diagnostics[0].find("girth violated") == 0);
}

TEST_CASE("embed input errors") {
  CHECK_THROWS_AS(embed(star(4), 3, 3), EmbedError);
  CHECK_THROWS_AS(embed(cycle_graph(5), 4, 6), EmbedError);
  CHECK_THROWS_AS(embed(path(3), 2, 4, 7), EmbedError);
}

TEST_CASE("two generators in one fibre commute into a 4-cycle") {
  // Deficiency 3 forces a shift s and M/2 at every leaf of K_{1,4}'s host:
  // (a, a+s, a+s+M/2, a+M/2) is a 4-cycle for every M, so girth 5 is out of
  // reach however far M grows.
  CHECK(embed(star(4), 4, 4).girth_checked == 4);
  const Graph p2 = path(2);
  CHECK_THROWS_AS(embed(p2, 4, 5, std::nullopt, 2), EmbedError);
}
