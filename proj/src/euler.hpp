#pragma once

#include <span>
#include <utility>
#include <vector>

#include "linarb/graph.hpp"

namespace linarb::detail {

// A closed trail: edges[i] is traversed from vertices[i] to vertices[i + 1];
// vertices.back() == vertices.front().
struct ClosedTrail {
  std::vector<Vertex> vertices;
  std::vector<int> edges;
};

// Euler circuits of a multigraph whose vertex degrees are all even, one per
// connected component that has edges. Incidences are scanned in edge-index
// order. The circuit of each component starts at its vertex of smallest
// start_rank (ties by index); an empty start_rank means rank = index.
std::vector<ClosedTrail> euler_circuits(
    int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges,
    std::span<const int> start_rank = {});

}  // namespace linarb::detail
