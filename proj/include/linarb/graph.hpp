#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linarb {

using Vertex = std::int32_t;

// Index of an edge in the canonical (lexicographic by sorted endpoints) order.
enum class EdgeId : std::int32_t {};

constexpr std::size_t idx(EdgeId e) { return static_cast<std::size_t>(e); }
constexpr EdgeId edge_id(std::size_t i) { return static_cast<EdgeId>(i); }

struct Edge {
  Vertex u = 0;  // u < v once canonicalized
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sentinel girth of an acyclic graph. Compares greater than any finite girth.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph on vertices 0..n-1. Edges are stored in
// canonical order so EdgeId values are stable across serialization.
class Graph {
 public:
  Graph() = default;
  // Throws GraphError on self-loops, duplicates or out-of-range endpoints.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[idx(e)]; }

  // Sorted neighbor list; incident_edges(v)[i] joins v and neighbors(v)[i].
  std::span<const Vertex> neighbors(Vertex v) const;
  std::span<const EdgeId> incident_edges(Vertex v) const;
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<EdgeId> adjacency_edges_;
};

int max_degree(const Graph& g);
bool is_regular(const Graph& g, int r);

// Exact girth by breadth-first search from every root. Cycles of length
// >= cap are not searched for: the result is min(girth, cap). The default
// cap returns the true girth, or kInfiniteGirth for forests.
// Roots are distributed over OpenMP threads when available.
int girth(const Graph& g, int cap = kInfiniteGirth);
// Single-threaded reference for girth(); identical results.
int girth_serial(const Graph& g, int cap = kInfiniteGirth);

std::string format_girth(int girth_value);

struct Components {
  std::vector<int> label;  // component id per vertex, numbered by min vertex
  int count = 0;
};
Components connected_components(const Graph& g);

// Edge-list text format: '#' comment lines, header "n m", then m lines "u v".
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);
std::string read_text_file(const std::string& path);

inline constexpr std::string_view kDigestAlgorithm =
    "fnv1a64(canonical-edge-list)";
// Hex FNV-1a 64-bit hash of serialize_graph(g).
std::string graph_digest(const Graph& g);

}  // namespace linarb
