#include "linarb/embed.hpp"

#include <algorithm>

namespace linarb {

namespace {

// Residues reachable as signed sums of at most t generators, for t = 0..L.
class SumTable {
 public:
  SumTable(int modulus, int terms)
      : m_(modulus), reach_(terms + 1, std::vector<char>(modulus, 0)) {
    reach_[0][0] = 1;
    for (int t = 1; t <= terms; ++t) reach_[t][0] = 1;
  }

  int terms() const { return static_cast<int>(reach_.size()) - 1; }

  // r is admissible when no a*r (1 <= a <= L) equals a sum of at most L - a
  // existing generators: then no relation of weight <= L involves r.
  bool admissible(int r) const {
    for (int a = 1; a <= terms(); ++a) {
      const int x = static_cast<int>((static_cast<long long>(a) * r) % m_);
      if (reach_[terms() - a][x]) return false;
    }
    return true;
  }

  void add(int r) {
    const int L = terms();
    auto next = reach_;
    for (int t = 1; t <= L; ++t) {
      for (int j = 1; j <= t; ++j) {
        const int step = static_cast<int>((static_cast<long long>(j) * r) % m_);
        for (int x = 0; x < m_; ++x) {
          if (!reach_[t - j][x]) continue;
          next[t][(x + step) % m_] = 1;
          next[t][(x - step + m_) % m_] = 1;
        }
      }
    }
    reach_ = std::move(next);
  }

 private:
  int m_;
  std::vector<std::vector<char>> reach_;
};

// Greedy shift sets for layer count m, or nullopt when residues run out.
std::optional<std::vector<std::vector<int>>> choose_shifts(
    const std::vector<int>& deficiency, int m, int g) {
  const int half = m / 2;
  SumTable table(m, std::max(g - 1, 0));
  const bool any_odd = std::any_of(deficiency.begin(), deficiency.end(),
                                   [](int d) { return d % 2 == 1; });
  if (any_odd) table.add(half);
  std::vector<char> taken(half, 0);
  std::vector<std::vector<int>> shifts(deficiency.size());
  for (std::size_t i = 0; i < deficiency.size(); ++i) {
    for (int q = 0; q < deficiency[i] / 2; ++q) {
      int pick = 0;
      for (int r = 1; r < half && pick == 0; ++r) {
        if (!taken[r] && table.admissible(r)) pick = r;
      }
      // No relation-free residue left: take any unused one and let the
      // girth check decide.
      for (int r = 1; r < half && pick == 0; ++r) {
        if (!taken[r]) pick = r;
      }
      if (pick == 0) return std::nullopt;
      taken[pick] = 1;
      table.add(pick);
      shifts[i].push_back(pick);
    }
    if (deficiency[i] % 2 == 1) shifts[i].push_back(half);
  }
  return shifts;
}

}  // namespace

Graph build_layered_graph(const Graph& h, const EmbeddingSpec& spec) {
  const int m = spec.layer_count;
  const int n = h.vertex_count();
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    for (int a = 0; a < m; ++a) {
      edges.push_back({layered_vertex(e.u, a, m), layered_vertex(e.v, a, m)});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int s : spec.shifts[i]) {
      const int copies = 2 * s == m ? m / 2 : m;
      for (int a = 0; a < copies; ++a) {
        edges.push_back({layered_vertex(i, a, m), layered_vertex(i, (a + s) % m, m)});
      }
    }
  }
  return Graph(n * m, std::move(edges));
}

EmbeddedGraph embed(const Graph& h, int delta, int g, std::optional<int> m_start,
                    int max_doublings) {
  if (delta < 1 || g < 1) throw EmbedError("delta and girth must be positive");
  const int dh = max_degree(h);
  if (delta < dh) {
    throw EmbedError("host degree " + std::to_string(delta) +
                     " is below the max degree " + std::to_string(dh) + " of H");
  }
  const int gh = girth(h, g);
  if (gh < g) {
    throw EmbedError("H has girth " + format_girth(gh) + " < target " +
                     std::to_string(g));
  }
  int m = m_start.value_or(default_layer_count(delta, g));
  if (m < 2 || m % 2 != 0) throw EmbedError("layer count must be a positive even integer");

  std::vector<int> deficiency(h.vertex_count());
  for (Vertex v = 0; v < h.vertex_count(); ++v) deficiency[v] = delta - h.degree(v);

  for (int attempt = 1; attempt <= max_doublings + 1; ++attempt, m *= 2) {
    auto shifts = choose_shifts(deficiency, m, g);
    if (!shifts) continue;
    EmbeddedGraph eg;
    eg.spec = {delta, g, m, std::move(*shifts)};
    eg.graph = build_layered_graph(h, eg.spec);
    eg.attempts = attempt;
    eg.girth_cap = g;
    if (!is_regular(eg.graph, delta)) continue;
    eg.girth_checked = girth(eg.graph, g);
    if (eg.girth_checked < g) continue;
    for (int i = 0; i < h.vertex_count(); ++i) eg.base_layer.push_back(layered_vertex(i, 0, m));
    return eg;
  }
  throw EmbedError("no embedding with girth >= " + std::to_string(g) + " after " +
                   std::to_string(max_doublings + 1) + " attempts (last M=" +
                   std::to_string(m / 2) + ")");
}

EmbeddingCheck verify_embedding(const Graph& h, const EmbeddedGraph& eg, int delta,
                                int g) {
  EmbeddingCheck out;
  const int m = eg.spec.layer_count;
  const int n = h.vertex_count();
  const Graph& G = eg.graph;
  if (m < 1 || G.vertex_count() != n * m) {
    out.diagnostics.push_back("vertex count is not n*M");
    return out;
  }
  std::vector<int> per_layer(m, 0);
  bool induced = true;
  for (const Edge& e : G.edges()) {
    const int a = e.u % m, b = e.v % m;
    if (a != b) continue;
    const int i = e.u / m, j = e.v / m;
    if (i == j || !h.find_edge(i, j)) {
      if (induced) {
        out.diagnostics.push_back("not induced: layer " + std::to_string(a) +
                                  " has edge {" + std::to_string(i) + "," +
                                  std::to_string(j) + "} absent from H");
      }
      induced = false;
      continue;
    }
    ++per_layer[a];
  }
  for (int a = 0; a < m && induced; ++a) {
    if (per_layer[a] != h.edge_count()) {
      out.diagnostics.push_back("not induced: layer " + std::to_string(a) +
                                " is missing edges of H");
      induced = false;
    }
  }
  for (Vertex v = 0; v < G.vertex_count(); ++v) {
    if (G.degree(v) != delta) {
      out.diagnostics.push_back("not " + std::to_string(delta) + "-regular: vertex " +
                                std::to_string(v) + " has degree " +
                                std::to_string(G.degree(v)));
      break;
    }
  }
  const int gg = girth(G, g);
  if (gg < g) {
    out.diagnostics.push_back("girth violated: cycle of length " + std::to_string(gg) +
                              " < " + std::to_string(g));
  }
  out.ok = out.diagnostics.empty();
  return out;
}

nlohmann::ordered_json embedding_sidecar(const EmbeddedGraph& eg) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["host_degree"] = eg.spec.host_degree;
  j["girth_target"] = eg.spec.girth_target;
  j["layer_count"] = eg.spec.layer_count;
  j["attempts"] = eg.attempts;
  j["vertex_index"] = "i*M+alpha";
  j["shifts"] = eg.spec.shifts;
  j["base_layer"] = eg.base_layer;
  return j;
}

}  // namespace linarb
