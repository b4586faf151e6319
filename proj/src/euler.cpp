#include "euler.hpp"

#include <algorithm>
#include <stdexcept>

namespace linarb::detail {

std::vector<ClosedTrail> euler_circuits(
    int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges,
    std::span<const int> start_rank) {
  std::vector<std::vector<int>> incidence(vertex_count);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incidence[edges[i].first].push_back(static_cast<int>(i));
    incidence[edges[i].second].push_back(static_cast<int>(i));
  }
  for (const auto& inc : incidence) {
    if (inc.size() % 2 != 0) {
      throw std::logic_error("euler_circuits: odd-degree vertex");
    }
  }

  // Component labels via union-find over edges, then pick a start per label.
  std::vector<int> parent(vertex_count);
  for (int v = 0; v < vertex_count; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  auto rank_of = [&](Vertex v) {
    return start_rank.empty() ? v : start_rank[v];
  };
  std::vector<Vertex> start(vertex_count, -1);
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (incidence[v].empty()) continue;
    int root = find(v);
    if (start[root] < 0 || rank_of(v) < rank_of(start[root])) start[root] = v;
  }

  std::vector<char> used(edges.size(), 0);
  std::vector<std::size_t> cursor(vertex_count, 0);
  std::vector<ClosedTrail> trails;
  std::vector<std::pair<Vertex, int>> stack;
  std::vector<std::pair<Vertex, int>> reversed;
  for (Vertex root = 0; root < vertex_count; ++root) {
    if (start[root] < 0) continue;
    stack.assign(1, {start[root], -1});
    reversed.clear();
    while (!stack.empty()) {
      const Vertex v = stack.back().first;
      auto& c = cursor[v];
      while (c < incidence[v].size() && used[incidence[v][c]]) ++c;
      if (c < incidence[v].size()) {
        const int e = incidence[v][c++];
        used[e] = 1;
        const Vertex w = edges[e].first == v ? edges[e].second : edges[e].first;
        stack.push_back({w, e});
      } else {
        reversed.push_back(stack.back());
        stack.pop_back();
      }
    }
    std::reverse(reversed.begin(), reversed.end());
    ClosedTrail trail;
    for (std::size_t i = 0; i < reversed.size(); ++i) {
      trail.vertices.push_back(reversed[i].first);
      if (i > 0) trail.edges.push_back(reversed[i].second);
    }
    trails.push_back(std::move(trail));
  }
  return trails;
}

}  // namespace linarb::detail
