#include "linarb/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace linarb {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw GraphError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw GraphError("edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} has an endpoint out of range");
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," +
                     std::to_string(dup->v) + "}");
  }

  offsets_.assign(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int v = 0; v < vertex_count_; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(2 * edges_.size());
  adjacency_edges_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so each adjacency list comes out sorted as long as the
  // lower-endpoint entries (all smaller than v) are written before the
  // higher ones. Two passes guarantee that.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[fill[e.v]] = e.u;
    adjacency_edges_[fill[e.v]++] = edge_id(i);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[fill[e.u]] = e.v;
    adjacency_edges_[fill[e.u]++] = edge_id(i);
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return {adjacency_.data() + offsets_[v],
          static_cast<std::size_t>(degree(v))};
}

std::span<const EdgeId> Graph::incident_edges(Vertex v) const {
  return {adjacency_edges_.data() + offsets_[v],
          static_cast<std::size_t>(degree(v))};
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) {
    return std::nullopt;
  }
  auto nbrs = neighbors(a);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return std::nullopt;
  return incident_edges(a)[it - nbrs.begin()];
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    best = std::max(best, g.degree(v));
  }
  return best;
}

bool is_regular(const Graph& g, int r) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != r) return false;
  }
  return true;
}

namespace {

struct BfsScratch {
  explicit BfsScratch(int n) : dist(n, -1), parent(n, -1) {
    queue.reserve(n);
  }
  std::vector<int> dist;
  std::vector<Vertex> parent;
  std::vector<Vertex> queue;
};

// Length of the shortest closed walk found by BFS from root that is shorter
// than bound, or bound. The minimum over all roots is the girth.
int shortest_cycle_from(const Graph& g, Vertex root, int bound,
                        BfsScratch& s) {
  int best = bound;
  s.queue.clear();
  s.queue.push_back(root);
  s.dist[root] = 0;
  s.parent[root] = -1;
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    const Vertex u = s.queue[head];
    // Any cycle closed from depth d has length >= 2d + 1.
    if (2 * s.dist[u] + 1 >= best) break;
    for (Vertex w : g.neighbors(u)) {
      if (s.dist[w] < 0) {
        s.dist[w] = s.dist[u] + 1;
        s.parent[w] = u;
        s.queue.push_back(w);
      } else if (w != s.parent[u]) {
        best = std::min(best, s.dist[u] + s.dist[w] + 1);
      }
    }
  }
  for (Vertex v : s.queue) s.dist[v] = -1;
  return best;
}

}  // namespace

int girth_serial(const Graph& g, int cap) {
  BfsScratch scratch(g.vertex_count());
  int best = cap;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    best = shortest_cycle_from(g, root, best, scratch);
    if (best == 3) break;
  }
  return best;
}

int girth(const Graph& g, int cap) {
#ifdef _OPENMP
  const int n = g.vertex_count();
  int best = cap;
#pragma omp parallel if (n >= 256)
  {
    BfsScratch scratch(n);
    int local = cap;
#pragma omp for schedule(dynamic, 32) nowait
    for (Vertex root = 0; root < n; ++root) {
      if (local == 3) continue;
      local = shortest_cycle_from(g, root, local, scratch);
    }
#pragma omp critical(linarb_girth)
    best = std::min(best, local);
  }
  return best;
#else
  return girth_serial(g, cap);
#endif
}

std::string format_girth(int girth_value) {
  return girth_value == kInfiniteGirth ? "inf" : std::to_string(girth_value);
}

Components connected_components(const Graph& g) {
  Components c;
  c.label.assign(g.vertex_count(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (c.label[s] >= 0) continue;
    c.label[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (c.label[w] < 0) {
          c.label[w] = c.count;
          stack.push_back(w);
        }
      }
    }
    ++c.count;
  }
  return c;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw GraphError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::vector<int> edge_line;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    long long a, b;
    if (toks.size() != 2 || !parse_int(toks[0], a) || !parse_int(toks[1], b)) {
      fail_at(line_no, n < 0 ? "malformed header" : "expected two integers");
    }
    if (n < 0) {
      if (a < 0 || b < 0 || a > std::numeric_limits<int>::max() ||
          b > std::numeric_limits<int>::max()) {
        fail_at(line_no, "malformed header");
      }
      n = a;
      m = b;
      edges.reserve(static_cast<std::size_t>(std::min(m, 1LL << 20)));
    } else {
      if (static_cast<long long>(edges.size()) == m) {
        fail_at(line_no, "more edge lines than the header's edge count");
      }
      if (a < 0 || b < 0 || a >= n || b >= n) {
        fail_at(line_no, "vertex index out of range");
      }
      if (a == b) fail_at(line_no, "self-loop at vertex " + std::to_string(a));
      edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
      edge_line.push_back(line_no);
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw GraphError("missing header line \"n m\"");
  if (static_cast<long long>(edges.size()) != m) {
    throw GraphError("header declares " + std::to_string(m) +
                     " edges but found " + std::to_string(edges.size()));
  }
  // Report duplicates by line before the constructor sees them.
  std::vector<std::pair<Edge, int>> keyed;
  keyed.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge e = edges[i];
    if (e.u > e.v) std::swap(e.u, e.v);
    keyed.push_back({e, edge_line[i]});
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].first == keyed[i - 1].first) {
      fail_at(std::max(keyed[i].second, keyed[i - 1].second),
              "duplicate edge {" + std::to_string(keyed[i].first.u) + "," +
                  std::to_string(keyed[i].first.v) + "}");
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::string out;
  out.reserve(16 + 12 * static_cast<std::size_t>(g.edge_count()));
  out += std::to_string(g.vertex_count());
  out += ' ';
  out += std::to_string(g.edge_count());
  out += '\n';
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

Graph read_graph_file(const std::string& path) {
  return parse_graph(read_text_file(path));
}

std::string graph_digest(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : serialize_graph(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace linarb
