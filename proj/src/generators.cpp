#include "linarb/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace linarb {

Family parse_family(std::string_view name) {
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "circulant") return Family::circulant;
  if (name == "random_regular") return Family::random_regular;
  if (name == "named") return Family::named;
  throw GeneratorError("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::circulant: return "circulant";
    case Family::random_regular: return "random_regular";
    case Family::named: return "named";
  }
  return "?";
}

Graph cycle_graph(int n) {
  if (n < 3) throw GeneratorError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw GeneratorError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw GeneratorError("complete bipartite needs a, b >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, std::move(edges));
}

Graph circulant_graph(int n, const std::vector<int>& shifts) {
  if (n < 3) throw GeneratorError("circulant needs n >= 3");
  std::set<int> seen;
  std::vector<Edge> edges;
  for (int s : shifts) {
    if (s <= 0 || 2 * s > n) {
      throw GeneratorError("circulant shift " + std::to_string(s) +
                           " outside [1, n/2]");
    }
    if (!seen.insert(s).second) {
      throw GeneratorError("circulant shift " + std::to_string(s) +
                           " repeated");
    }
    // The half shift pairs i with i + n/2; emit each such edge once.
    const int count = 2 * s == n ? n / 2 : n;
    for (int i = 0; i < count; ++i) edges.push_back({i, (i + s) % n});
  }
  return Graph(n, std::move(edges));
}

Graph named_graph(std::string_view name) {
  if (name == "petersen") {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
      edges.push_back({i, (i + 1) % 5});          // outer 5-cycle
      edges.push_back({i, i + 5});                // spokes
      edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    }
    return Graph(10, std::move(edges));
  }
  if (name == "k5") return complete_graph(5);
  if (name == "k7") return complete_graph(7);
  if (name == "k44") return complete_bipartite_graph(4, 4);
  throw GeneratorError("unknown named graph '" + std::string(name) + "'");
}

namespace {

// Unbiased draw in [0, bound) from the raw 64-bit stream. Written out so
// that outputs do not depend on the standard library's distributions.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::vector<Vertex> random_cyclic_order(int n, std::mt19937_64& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    auto j = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  // Rotate so the cycle starts at vertex 0; the edge set is unchanged.
  std::rotate(order.begin(), std::find(order.begin(), order.end(), 0),
              order.end());
  return order;
}

}  // namespace

RegularSample random_regular_with_girth(int n, int k, int g_min,
                                        std::uint64_t seed, int retries) {
  if (n < 3) throw GeneratorError("random_regular needs n >= 3");
  if (k < 1) throw GeneratorError("random_regular needs k >= 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= retries; ++attempt) {
    std::vector<std::vector<Vertex>> cycles;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * k);
    for (int f = 0; f < k; ++f) {
      cycles.push_back(random_cyclic_order(n, rng));
      const auto& c = cycles.back();
      for (int i = 0; i < n; ++i) {
        Vertex a = c[i], b = c[(i + 1) % n];
        edges.push_back({std::min(a, b), std::max(a, b)});
      }
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      continue;
    }
    Graph g(n, std::move(edges));
    if (g_min > 3 && girth(g, g_min) < g_min) continue;
    RegularSample sample;
    sample.graph = std::move(g);
    for (auto& c : cycles) sample.hint.factors.push_back({std::move(c)});
    sample.attempts = attempt;
    return sample;
  }
  throw GeneratorError("retry budget of " + std::to_string(retries) +
                       " exhausted for n=" + std::to_string(n) +
                       ", k=" + std::to_string(k) +
                       ", g_min=" + std::to_string(g_min));
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::cycle: return cycle_graph(spec.n);
    case Family::complete: return complete_graph(spec.n);
    case Family::complete_bipartite:
      return complete_bipartite_graph(spec.a, spec.b);
    case Family::circulant: return circulant_graph(spec.n, spec.shifts);
    case Family::random_regular:
      return random_regular_with_girth(spec.n, spec.k, spec.g_min, spec.seed,
                                       spec.retries)
          .graph;
    case Family::named: return named_graph(spec.name);
  }
  throw GeneratorError("unhandled family");
}

}  // namespace linarb
