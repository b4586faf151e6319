#pragma once

// Brute-force reference implementations. Deliberately naive and sharing no
// code with the library beyond the Graph container.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "linarb/flow.hpp"
#include "linarb/graph.hpp"

namespace oracle {

using linarb::Edge;
using linarb::Graph;
using linarb::Vertex;

// Shortest cycle through each edge: BFS between its endpoints with the edge
// removed. Infinite girth is INT_MAX.
inline int girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  const int n = g.vertex_count();
  for (const Edge& e : g.edges()) {
    std::vector<int> dist(n, -1);
    std::queue<Vertex> q;
    dist[e.u] = 0;
    q.push(e.u);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if ((x == e.u && y == e.v) || (x == e.v && y == e.u)) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    if (dist[e.v] >= 0) best = std::min(best, dist[e.v] + 1);
  }
  return best;
}

// Minimum s-t cut over all vertex bipartitions; kUnbounded when every cut
// crosses an unbounded arc.
inline linarb::FlowQuantity min_cut(const linarb::FlowNetwork& net, int s, int t) {
  const int n = net.node_count;
  linarb::FlowQuantity best = linarb::kUnbounded;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> s & 1u) || (mask >> t & 1u)) continue;
    linarb::FlowQuantity cut = 0;
    bool infinite = false;
    for (const auto& a : net.arcs) {
      if ((mask >> a.tail & 1u) && !(mask >> a.head & 1u)) {
        if (a.capacity == linarb::kUnbounded) {
          infinite = true;
          break;
        }
        cut += a.capacity;
      }
    }
    if (!infinite) best = std::min(best, cut);
  }
  return best;
}

// Tries every integer flow vector within bounds. Terminals (if set) are
// exempt from conservation. Capacities must be finite and small.
inline bool circulation_exists(const linarb::FlowNetwork& net) {
  const std::size_t m = net.arcs.size();
  std::vector<linarb::FlowQuantity> f(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (net.arcs[i].lower > net.arcs[i].capacity) return false;
    f[i] = net.arcs[i].lower;
  }
  while (true) {
    std::vector<linarb::FlowQuantity> balance(net.node_count, 0);
    for (std::size_t i = 0; i < m; ++i) {
      balance[net.arcs[i].tail] -= f[i];
      balance[net.arcs[i].head] += f[i];
    }
    bool ok = true;
    for (int v = 0; v < net.node_count && ok; ++v) {
      if (net.source == v || net.sink == v) continue;
      ok = balance[v] == 0;
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < m && f[i] == net.arcs[i].capacity) {
      f[i] = net.arcs[i].lower;
      ++i;
    }
    if (i == m) return false;
    ++f[i];
  }
}

inline bool classes_are_linear(const Graph& g, const std::vector<int>& color, int colors) {
  const int n = g.vertex_count();
  for (int c = 0; c < colors; ++c) {
    std::vector<int> deg(n, 0), parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
      if (color[e] != c) continue;
      const Edge& ed = g.edges()[e];
      if (++deg[ed.u] > 2 || ++deg[ed.v] > 2) return false;
      const int a = find(ed.u), b = find(ed.v);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

// Linear arboricity by trying every coloring with 1, 2, ... colors.
// Exponential in the edge count; keep m small (<= ~16).
inline int linear_arboricity(const Graph& g) {
  const int m = g.edge_count();
  if (m == 0) return 0;
  for (int colors = 1;; ++colors) {
    std::vector<int> color(m, 0);
    while (true) {
      if (classes_are_linear(g, color, colors)) return colors;
      int i = 0;
      while (i < m && color[i] == colors - 1) color[i++] = 0;
      if (i == m) break;
      ++color[i];
    }
  }
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == g.vertex_count();
}

// All connected r-regular graphs on n vertices, one per isomorphism class,
// by enumerating edge subsets and keeping the lexicographically smallest
// relabeling as canonical form. For n <= 7.
inline std::vector<Graph> connected_regular_graphs(int n, int r) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  }
  const int total = static_cast<int>(slots.size());
  if ((n * r) % 2 != 0 || r >= n) return {};
  const int m = n * r / 2;
  std::vector<int> perm(n);
  std::set<std::uint32_t> canon_seen;
  std::vector<Graph> out;
  auto slot_of = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    // Index of (u, v) in row-major upper-triangle order.
    return u * n - u * (u + 1) / 2 + (v - u - 1);
  };
  if (m == 0) return {};
  std::uint64_t mask = (1ULL << m) - 1;
  while (mask < (1ULL << total)) {
    std::vector<int> deg(n, 0);
    for (int i = 0; i < total; ++i) {
      if (mask >> i & 1ULL) {
        ++deg[slots[i].first];
        ++deg[slots[i].second];
      }
    }
    if (std::all_of(deg.begin(), deg.end(), [&](int d) { return d == r; })) {
      std::uint32_t canon = std::numeric_limits<std::uint32_t>::max();
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::uint32_t image = 0;
        for (int i = 0; i < total; ++i) {
          if (mask >> i & 1ULL) {
            image |= 1u << slot_of(perm[slots[i].first], perm[slots[i].second]);
          }
        }
        canon = std::min(canon, image);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (canon_seen.insert(canon).second) {
        std::vector<Edge> edges;
        for (int i = 0; i < total; ++i) {
          if (mask >> i & 1ULL) edges.push_back({slots[i].first, slots[i].second});
        }
        Graph g(n, edges);
        if (is_connected(g)) out.push_back(std::move(g));
      }
    }
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return out;
}

// Erdos-Renyi style random simple graph.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

// Random network on n nodes with zero lower bounds; occasional unbounded arcs.
inline linarb::FlowNetwork random_flow_network(int n, int arcs, std::mt19937_64& rng) {
  linarb::FlowNetwork net;
  net.node_count = n;
  for (int i = 0; i < arcs; ++i) {
    const int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % (n - 1));
    if (v >= u) ++v;
    const linarb::FlowQuantity cap =
        rng() % 10 == 0 ? linarb::kUnbounded : static_cast<linarb::FlowQuantity>(rng() % 8);
    net.add_arc(u, v, 0, cap);
  }
  return net;
}

// Random lower-bounded network: up to `arcs` arcs, capacities in [0, 2],
// terminals 0 and 1 set with probability one half.
inline linarb::FlowNetwork random_bounded_network(int n, int arcs, std::mt19937_64& rng) {
  linarb::FlowNetwork net;
  net.node_count = n;
  for (int i = 0; i < arcs; ++i) {
    const int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % (n - 1));
    if (v >= u) ++v;
    const auto cap = static_cast<linarb::FlowQuantity>(rng() % 3);
    const auto lower = static_cast<linarb::FlowQuantity>(rng() % (cap + 1));
    net.add_arc(u, v, lower, cap);
  }
  if (rng() % 2 == 0 && n >= 2) {
    net.source = 0;
    net.sink = 1;
  }
  return net;
}

}  // namespace oracle
