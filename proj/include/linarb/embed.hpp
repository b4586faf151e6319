#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "linarb/graph.hpp"

namespace linarb {

struct EmbeddingSpec {
  int host_degree = 0;
  int girth_target = 0;
  int layer_count = 0;  // M, even
  // shifts[i]: residues s in [1, M/2]; s < M/2 adds two edge-slots per copy
  // of v_i, s = M/2 adds one.
  std::vector<std::vector<int>> shifts;
};

// Copy (v_i, alpha) of vertex v_i in layer alpha is vertex i*M + alpha.
struct EmbeddedGraph {
  Graph graph;
  EmbeddingSpec spec;
  int attempts = 0;
  // min(girth, girth_cap) of graph.
  int girth_checked = 0;
  int girth_cap = 0;
  std::vector<Vertex> base_layer;  // base_layer[i] = i*M
};

inline Vertex layered_vertex(int i, int alpha, int layers) {
  return static_cast<Vertex>(i * layers + alpha);
}

class EmbedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultEmbedDoublings = 6;

inline int default_layer_count(int delta, int g) { return 2 * g * (delta + 1); }

// Builds a delta-regular supergraph of h with girth >= g: M copies of h
// plus circulant edges inside each vertex's fibre. Girth and regularity
// are checked on the result; on failure M doubles, up to max_doublings
// times. Throws EmbedError on bad input or when every attempt fails.
EmbeddedGraph embed(const Graph& h, int delta, int g,
                    std::optional<int> m_start = std::nullopt,
                    int max_doublings = kDefaultEmbedDoublings);

// The graph embed() builds for a fixed layer count and shift assignment.
Graph build_layered_graph(const Graph& h, const EmbeddingSpec& spec);

struct EmbeddingCheck {
  bool ok = false;
  std::vector<std::string> diagnostics;
};

// Checks every layer induces exactly h, delta-regularity, and girth >= g.
EmbeddingCheck verify_embedding(const Graph& h, const EmbeddedGraph& eg,
                                int delta, int g);

nlohmann::ordered_json embedding_sidecar(const EmbeddedGraph& eg);

}  // namespace linarb
