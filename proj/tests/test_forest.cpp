#include <chrono>
#include <random>

#include "doctest.h"
#include "linarb/forest.hpp"
#include "linarb/generators.hpp"
#include "linarb/verify.hpp"
#include "oracles.hpp"

using namespace linarb;

namespace {

std::vector<EdgeId> all_edges(const Graph& g) {
  std::vector<EdgeId> out;
  for (int i = 0; i < g.edge_count(); ++i) out.push_back(edge_id(i));
  return out;
}

std::vector<EdgeId> ids(const Graph& g, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<EdgeId> out;
  for (auto [a, b] : pairs) out.push_back(*g.find_edge(a, b));
  return out;
}

void check_partition(const Graph& g, std::span<const EdgeId> edges,
                     const std::vector<LinearForest>& forests) {
  std::vector<int> count(g.edge_count(), 0);
  for (const auto& f : forests) {
    CHECK(is_linear_forest(g, f.edges));
    for (EdgeId e : f.edges) ++count[idx(e)];
  }
  for (EdgeId e : edges) CHECK(count[idx(e)] == 1);
  std::size_t total = 0;
  for (const auto& f : forests) total += f.edges.size();
  CHECK(total == edges.size());
}

}  // namespace

TEST_CASE("linear forest predicate") {
  const Graph k4 = complete_graph(4);
  CHECK(is_linear_forest(k4, ids(k4, {{0, 1}, {1, 2}, {2, 3}})));
  CHECK_FALSE(is_linear_forest(k4, ids(k4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK_FALSE(is_linear_forest(k4, ids(k4, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK(is_linear_forest(k4, {}));
}

TEST_CASE("residual forests examples") {
  const Graph c6 = cycle_graph(6);
  const TwoFactorization tf = two_factorize(c6, 1);
  Transversal h;
  h.edges = ids(c6, {{2, 3}});
  const auto l = residual_forests(c6, tf, h);
  REQUIRE(l.size() == 1);
  CHECK(l[0].edges.size() == 5);
  CHECK(is_linear_forest(c6, l[0].edges));

  const Graph two_tri(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const TwoFactorization tt = two_factorize(two_tri, 1);
  Transversal h2;
  h2.edges = ids(two_tri, {{0, 1}, {4, 5}});
  std::sort(h2.edges.begin(), h2.edges.end());
  const auto l2 = residual_forests(two_tri, tt, h2);
  REQUIRE(l2.size() == 1);
  CHECK(l2[0].edges.size() == 4);
  CHECK(is_linear_forest(two_tri, l2[0].edges));

  Transversal h3;
  h3.edges = ids(two_tri, {{0, 1}});
  CHECK_THROWS_AS(residual_forests(two_tri, tt, h3), ForestError);
}

TEST_CASE("decompose_h ladder examples") {
  const Graph c10 = cycle_graph(10);
  const auto matching = ids(c10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
  const auto m = decompose_h(c10, matching);
  CHECK(m.forests.size() == 1);
  CHECK(m.rung == HRung::identity);

  const Graph mixed(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}});
  const auto all = all_edges(mixed);
  const auto pc = decompose_h(mixed, all);
  CHECK(pc.forests.size() == 2);
  CHECK(pc.rung == HRung::paths_and_cycles);
  check_partition(mixed, all, pc.forests);

  const Graph k5 = complete_graph(5);
  const auto k5_all = all_edges(k5);
  const auto ex = decompose_h(k5, k5_all);
  CHECK(ex.rung == HRung::exact);
  CHECK(ex.max_degree == 4);
  CHECK(ex.forests.size() == 3);
  CHECK(oracle::linear_arboricity(k5) == 3);
  check_partition(k5, k5_all, ex.forests);

  CHECK(decompose_h(k5, {}).rung == HRung::empty);
}

TEST_CASE("property: exact partition matches the brute-force arboricity") {
  std::mt19937_64 rng(5);
  const auto far = std::chrono::steady_clock::now() + std::chrono::seconds(60);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(4 + static_cast<int>(rng() % 4), 0.55, rng);
    if (g.edge_count() == 0 || g.edge_count() > 12) continue;
    const int la = oracle::linear_arboricity(g);
    const auto edges = all_edges(g);
    bool timed_out = false;
    CHECK_FALSE(exact_linear_partition(g, edges, la - 1, far, &timed_out).has_value());
    CHECK_FALSE(timed_out);
    const auto found = exact_linear_partition(g, edges, la, far, &timed_out);
    REQUIRE(found.has_value());
    CHECK(static_cast<int>(found->size()) <= la);
    check_partition(g, edges, *found);
  }
}

TEST_CASE("property: euler split halves every degree") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 12), 0.5, rng);
    const auto edges = all_edges(g);
    const auto [a, b] = euler_split(g, edges);
    CHECK(a.size() + b.size() == edges.size());
    std::vector<int> da(g.vertex_count(), 0), db(g.vertex_count(), 0);
    for (EdgeId e : a) ++da[g.edge(e).u], ++da[g.edge(e).v];
    for (EdgeId e : b) ++db[g.edge(e).u], ++db[g.edge(e).v];
    // An all-even component with an odd edge count leaves exactly one
    // vertex two edges out of balance; everything else is within one.
    const auto comp = connected_components(g);
    std::vector<int> comp_edges(comp.count, 0), comp_odd(comp.count, 0), comp_off(comp.count, 0);
    for (const Edge& e : g.edges()) ++comp_edges[comp.label[e.u]];
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      CHECK(da[v] + db[v] == g.degree(v));
      comp_odd[comp.label[v]] += g.degree(v) % 2;
      const int diff = std::abs(da[v] - db[v]);
      CHECK(diff <= 2);
      if (diff == 2) ++comp_off[comp.label[v]];
    }
    for (int c = 0; c < comp.count; ++c) {
      const bool forced = comp_odd[c] == 0 && comp_edges[c] % 2 == 1;
      CHECK(comp_off[c] == (forced ? 1 : 0));
    }
  }
}

TEST_CASE("zero budget forces the euler split rung") {
  const Graph k9 = complete_graph(9);
  const auto edges = all_edges(k9);
  const auto out = decompose_h(k9, edges, std::chrono::milliseconds(0));
  CHECK(out.rung == HRung::euler_split);
  check_partition(k9, edges, out.forests);
  // Degree 8 halves to 4 then 2: four leaves of at most two forests.
  CHECK(out.forests.size() <= 8);
}

TEST_CASE("decompose examples") {
  const auto c7 = decompose(cycle_graph(7), 1);
  CHECK(c7.verified);
  CHECK(c7.claimed_bound == 2);
  CHECK(c7.achieved_count == 2);

  const Graph k44 = complete_bipartite_graph(4, 4);
  const auto c44 = decompose(k44, 2);
  CHECK(c44.verified);
  CHECK(c44.regime.tag == "G2K");
  CHECK(c44.achieved_count == 3);

  const Graph k5 = complete_graph(5);
  const auto c5 = decompose(k5, 2);
  CHECK(c5.verified);
  CHECK(c5.regime.tag == "GK");
  CHECK(c5.claimed_bound == 4);
  CHECK(c5.achieved_count >= 3);
  CHECK(c5.achieved_count <= 4);

  CHECK_THROWS_AS(decompose(complete_graph(6), 2), DecomposeError);
  CHECK_THROWS_AS(decompose(cycle_graph(5), 0), DecomposeError);
}

TEST_CASE("decompose with a generator hint and in strict mode") {
  const auto sample = random_regular_with_girth(24, 2, 4, 3);
  DecomposeOptions opts;
  opts.hint = sample.hint;
  const auto with_hint = decompose(sample.graph, 2, opts);
  CHECK(with_hint.verified);
  CHECK(with_hint.achieved_count <= with_hint.claimed_bound);

  DecomposeOptions strict;
  strict.strict_only = true;
  const auto s = decompose(sample.graph, 2, strict);
  CHECK(s.verified);
  CHECK(s.transversal.mode == "strict");
  CHECK_FALSE(s.paper_flow_feasible);

  FactorizationHint broken = sample.hint;
  std::swap(broken.factors[0][0][0], broken.factors[0][0][1]);
  DecomposeOptions bad;
  bad.hint = broken;
  CHECK_THROWS(decompose(sample.graph, 2, bad));
}

TEST_CASE("property: pipeline certificates on generated graphs") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    const Graph g = random_regular_with_girth(20 + 2 * static_cast<int>(seed), k, 3, seed).graph;
    const auto cert = decompose(g, k);
    INFO("seed " << seed);
    CHECK(cert.verified);
    CHECK(cert.achieved_count >= k + 1);
    CHECK(cert.achieved_count <= cert.claimed_bound);
    CHECK(cert.overshoot.empty());
    const auto again = decompose(g, k);
    CHECK(dump_json(certificate_to_json(cert)) == dump_json(certificate_to_json(again)));
  }
}
