#include "linarb/factorize.hpp"

#include <algorithm>
#include <utility>

#include "euler.hpp"

namespace linarb {

int TwoFactorization::cycle_count() const {
  int total = 0;
  for (const Factor& f : factors) total += static_cast<int>(f.cycles.size());
  return total;
}

std::vector<CycleRef> TwoFactorization::flat_cycles() const {
  std::vector<CycleRef> out;
  for (int f = 0; f < static_cast<int>(factors.size()); ++f) {
    for (int c = 0; c < static_cast<int>(factors[f].cycles.size()); ++c) {
      out.push_back({f, c});
    }
  }
  return out;
}

namespace {

struct Arc {
  Vertex tail;
  Vertex head;
};

// Perfect matching in the bipartite graph (out-copy tail, in-copy head) over
// the arcs not yet removed. Returns the chosen arc per tail.
std::vector<int> perfect_matching(int n, const std::vector<Arc>& arcs,
                                  const std::vector<std::vector<int>>& out) {
  std::vector<int> match_tail(n, -1);  // arc index
  std::vector<Vertex> match_head(n, -1);
  std::vector<int> seen(n, -1);

  for (Vertex u = 0; u < n; ++u) {
    for (int a : out[u]) {
      if (match_head[arcs[a].head] < 0) {
        match_head[arcs[a].head] = u;
        match_tail[u] = a;
        break;
      }
    }
  }

  struct Frame {
    Vertex tail;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex u = 0; u < n; ++u) {
    if (match_tail[u] >= 0) continue;
    stack.assign(1, {u, 0});
    bool augmented = false;
    while (!stack.empty() && !augmented) {
      Frame& top = stack.back();
      if (top.next == out[top.tail].size()) {
        stack.pop_back();
        continue;
      }
      const int a = out[top.tail][top.next++];
      const Vertex y = arcs[a].head;
      if (seen[y] == u) continue;
      seen[y] = u;
      if (match_head[y] < 0) {
        for (const Frame& f : stack) {
          const int chosen = out[f.tail][f.next - 1];
          match_tail[f.tail] = chosen;
          match_head[arcs[chosen].head] = f.tail;
        }
        augmented = true;
      } else {
        stack.push_back({match_head[y], 0});
      }
    }
    if (!augmented) {
      throw std::logic_error(
          "two_factorize: regular bipartite graph without perfect matching");
    }
  }
  return match_tail;
}

Cycle make_cycle(const Graph& g, std::vector<Vertex> vertices) {
  Cycle c;
  c.vertices = std::move(vertices);
  const std::size_t len = c.vertices.size();
  if (len < 3) {
    throw FactorizationError("cycle of length " + std::to_string(len) + " is shorter than 3");
  }
  for (std::size_t i = 0; i < len; ++i) {
    Vertex a = c.vertices[i], b = c.vertices[(i + 1) % len];
    auto e = g.find_edge(a, b);
    if (!e) {
      throw FactorizationError("cycle step {" + std::to_string(a) + "," +
                               std::to_string(b) + "} is not an edge");
    }
    c.edges.push_back(*e);
  }
  return c;
}

void index_cycles(TwoFactorization& tf, int edge_count) {
  tf.cycle_index.assign(edge_count, CycleRef{});
  for (int f = 0; f < static_cast<int>(tf.factors.size()); ++f) {
    const auto& cycles = tf.factors[f].cycles;
    for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
      for (EdgeId e : cycles[c].edges) tf.cycle_index[idx(e)] = {f, c};
    }
  }
}

}  // namespace

TwoFactorization two_factorize(const Graph& g, int k) {
  if (k < 1) throw FactorizationError("k must be positive");
  if (!is_regular(g, 2 * k)) {
    throw FactorizationError("graph is not " + std::to_string(2 * k) +
                             "-regular");
  }
  const int n = g.vertex_count();

  std::vector<std::pair<Vertex, Vertex>> ends;
  ends.reserve(g.edges().size());
  for (const Edge& e : g.edges()) ends.push_back({e.u, e.v});
  std::vector<Arc> arcs;
  arcs.reserve(ends.size());
  for (const auto& trail : detail::euler_circuits(n, ends)) {
    for (std::size_t i = 0; i < trail.edges.size(); ++i) {
      arcs.push_back({trail.vertices[i], trail.vertices[i + 1]});
    }
  }
  // Deterministic scan order: arcs of each tail sorted by head.
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return std::pair(x.tail, x.head) < std::pair(y.tail, y.head);
  });

  TwoFactorization tf;
  tf.k = k;
  std::vector<char> removed(arcs.size(), 0);
  for (int f = 0; f < k; ++f) {
    std::vector<std::vector<int>> out(n);
    for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
      if (!removed[a]) out[arcs[a].tail].push_back(a);
    }
    std::vector<int> chosen = perfect_matching(n, arcs, out);
    std::vector<Vertex> successor(n);
    for (Vertex u = 0; u < n; ++u) {
      removed[chosen[u]] = 1;
      successor[u] = arcs[chosen[u]].head;
    }
    Factor factor;
    std::vector<char> visited(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (visited[s]) continue;
      std::vector<Vertex> seq;
      for (Vertex v = s; !visited[v]; v = successor[v]) {
        visited[v] = 1;
        seq.push_back(v);
      }
      factor.cycles.push_back(make_cycle(g, std::move(seq)));
    }
    tf.factors.push_back(std::move(factor));
  }
  index_cycles(tf, g.edge_count());
  return tf;
}

TwoFactorization factorization_from_cycles(
    const Graph& g,
    const std::vector<std::vector<std::vector<Vertex>>>& factors) {
  TwoFactorization tf;
  tf.k = static_cast<int>(factors.size());
  for (const auto& cycles : factors) {
    Factor factor;
    for (const auto& seq : cycles) factor.cycles.push_back(make_cycle(g, seq));
    tf.factors.push_back(std::move(factor));
  }
  index_cycles(tf, g.edge_count());
  return tf;
}

FactorizationCheck verify_two_factorization(const Graph& g,
                                            const TwoFactorization& tf) {
  auto fail = [](std::string msg) { return FactorizationCheck{false, std::move(msg)}; };
  const int n = g.vertex_count();
  if (tf.k != static_cast<int>(tf.factors.size())) {
    return fail("k does not match the number of factors");
  }
  std::vector<int> uses(g.edge_count(), 0);
  std::vector<CycleRef> owner(g.edge_count());
  for (int f = 0; f < tf.k; ++f) {
    std::vector<char> covered(n, 0);
    const auto& cycles = tf.factors[f].cycles;
    for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
      const Cycle& cyc = cycles[c];
      const std::string where =
          "cycle (" + std::to_string(f) + "," + std::to_string(c) + ")";
      if (cyc.length() < 3) return fail(where + " shorter than 3");
      if (cyc.edges.size() != cyc.vertices.size()) {
        return fail(where + " edge list does not match its vertices");
      }
      for (int i = 0; i < cyc.length(); ++i) {
        const Vertex a = cyc.vertices[i];
        const Vertex b = cyc.vertices[(i + 1) % cyc.length()];
        if (a < 0 || a >= n) return fail(where + " has a vertex out of range");
        if (covered[a]) {
          return fail("vertex " + std::to_string(a) +
                      " appears twice in factor " + std::to_string(f));
        }
        covered[a] = 1;
        auto e = g.find_edge(a, b);
        if (!e || *e != cyc.edges[i]) {
          return fail(where + " step {" + std::to_string(a) + "," +
                      std::to_string(b) + "} is not the recorded edge");
        }
        if (uses[idx(*e)]++ == 0) owner[idx(*e)] = {f, c};
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!covered[v]) {
        return fail("factor " + std::to_string(f) + " misses vertex " +
                    std::to_string(v));
      }
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (uses[e] > 1) return fail("edge-disjointness violated");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (uses[e] == 0) return fail("union does not cover E(G)");
  }
  if (tf.cycle_index.size() != static_cast<std::size_t>(g.edge_count()) ||
      tf.cycle_index != owner) {
    return fail("cycle_index disagrees with the cycles");
  }
  return {};
}

}  // namespace linarb
