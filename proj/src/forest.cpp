#include "linarb/forest.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "euler.hpp"
#include "linarb/verify.hpp"

namespace linarb {

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<int> parent;
};

std::vector<int> degrees_in(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (EdgeId e : edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return deg;
}

// Max degree <= 2: one edge closing each cycle goes to a second forest. The
// closing edges lie in distinct components, so they form a matching.
std::vector<LinearForest> break_cycles(const Graph& g,
                                       std::span<const EdgeId> edges) {
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  DisjointSets sets(g.vertex_count());
  LinearForest paths, closers;
  for (EdgeId e : sorted) {
    const Edge& ed = g.edge(e);
    (sets.unite(ed.u, ed.v) ? paths : closers).edges.push_back(e);
  }
  std::vector<LinearForest> out;
  if (!paths.edges.empty()) out.push_back(std::move(paths));
  if (!closers.edges.empty()) out.push_back(std::move(closers));
  return out;
}

// Backtracking assignment of edges to colors with per-color degree <= 2 and
// per-color acyclicity (union-find with rollback).
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, std::span<const EdgeId> edges, int target,
                  std::chrono::steady_clock::time_point deadline)
      : target_(target), deadline_(deadline) {
    for (EdgeId e : edges) {
      for (Vertex v : {g.edge(e).u, g.edge(e).v}) {
        local_.emplace(v, static_cast<int>(local_.size()));
      }
    }
    const int nv = static_cast<int>(local_.size());
    std::vector<std::vector<std::pair<int, int>>> inc(nv);  // (nbr, edge pos)
    std::vector<std::pair<int, int>> ends;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const int a = local_[g.edge(edges[i]).u];
      const int b = local_[g.edge(edges[i]).v];
      ends.push_back({a, b});
      inc[a].push_back({b, static_cast<int>(i)});
      inc[b].push_back({a, static_cast<int>(i)});
    }
    // Breadth-first edge order from high-degree vertices keeps constraints
    // local, so conflicts surface early.
    std::vector<int> roots(nv);
    std::iota(roots.begin(), roots.end(), 0);
    std::stable_sort(roots.begin(), roots.end(), [&](int a, int b) {
      return inc[a].size() > inc[b].size();
    });
    std::vector<char> seen_v(nv, 0), seen_e(edges.size(), 0);
    for (int r : roots) {
      if (seen_v[r]) continue;
      std::vector<int> queue{r};
      seen_v[r] = 1;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        for (auto [w, pos] : inc[queue[h]]) {
          if (!seen_e[pos]) {
            seen_e[pos] = 1;
            order_.push_back(pos);
          }
          if (!seen_v[w]) {
            seen_v[w] = 1;
            queue.push_back(w);
          }
        }
      }
    }
    ends_ = std::move(ends);
    edges_.assign(edges.begin(), edges.end());
    color_.assign(edges.size(), -1);
    degree_.assign(static_cast<std::size_t>(target) * nv, 0);
    parent_.resize(static_cast<std::size_t>(target) * nv);
    for (int c = 0; c < target; ++c) {
      for (int v = 0; v < nv; ++v) parent_[c * nv + v] = v;
    }
    nv_ = nv;
  }

  bool run() { return descend(0, 0); }
  bool timed_out() const { return timed_out_; }

  std::vector<LinearForest> forests() const {
    std::vector<LinearForest> out(target_);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      out[color_[i]].edges.push_back(edges_[i]);
    }
    std::erase_if(out, [](const LinearForest& f) { return f.edges.empty(); });
    for (auto& f : out) std::sort(f.edges.begin(), f.edges.end());
    return out;
  }

 private:
  int find(int c, int v) const {
    const int* p = parent_.data() + static_cast<std::size_t>(c) * nv_;
    while (p[v] != v) v = p[v];
    return v;
  }

  bool descend(std::size_t depth, int used) {
    if (depth == order_.size()) return true;
    if ((++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
    }
    if (timed_out_) return false;
    const int pos = order_[depth];
    const auto [a, b] = ends_[pos];
    const int limit = std::min(used + 1, target_);
    for (int c = 0; c < limit; ++c) {
      int& da = degree_[c * nv_ + a];
      int& db = degree_[c * nv_ + b];
      if (da >= 2 || db >= 2) continue;
      const int ra = find(c, a), rb = find(c, b);
      if (ra == rb) continue;
      const int child = std::max(ra, rb);
      parent_[c * nv_ + child] = std::min(ra, rb);
      ++da;
      ++db;
      color_[pos] = c;
      if (descend(depth + 1, std::max(used, c + 1))) return true;
      color_[pos] = -1;
      --da;
      --db;
      parent_[c * nv_ + child] = child;
      if (timed_out_) return false;
    }
    return false;
  }

  int target_;
  std::chrono::steady_clock::time_point deadline_;
  std::unordered_map<Vertex, int> local_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<EdgeId> edges_;
  std::vector<int> order_;
  std::vector<int> color_;
  std::vector<int> degree_;
  std::vector<int> parent_;
  int nv_ = 0;
  long long nodes_ = 0;
  bool timed_out_ = false;
};

void split_recursively(const Graph& g, std::span<const EdgeId> edges,
                       std::vector<LinearForest>& out) {
  if (edges.empty()) return;
  const auto deg = degrees_in(g, edges);
  const int d = *std::max_element(deg.begin(), deg.end());
  if (d <= 2) {
    for (auto& f : break_cycles(g, edges)) out.push_back(std::move(f));
    return;
  }
  auto [first, second] = euler_split(g, edges);
  if (first.empty() || second.empty()) {
    throw std::logic_error("euler_split made no progress");
  }
  split_recursively(g, first, out);
  split_recursively(g, second, out);
}

}  // namespace

bool is_linear_forest(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<int> deg(g.vertex_count(), 0);
  DisjointSets sets(g.vertex_count());
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    if (++deg[ed.u] > 2 || ++deg[ed.v] > 2) return false;
    if (!sets.unite(ed.u, ed.v)) return false;
  }
  return true;
}

std::vector<LinearForest> residual_forests(const Graph& g,
                                           const TwoFactorization& tf,
                                           const Transversal& h) {
  std::vector<char> in_h(g.edge_count(), 0);
  for (EdgeId e : h.edges) in_h[idx(e)] = 1;
  std::vector<LinearForest> out;
  for (int f = 0; f < static_cast<int>(tf.factors.size()); ++f) {
    LinearForest forest;
    const auto& cycles = tf.factors[f].cycles;
    for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
      bool broken = false;
      for (EdgeId e : cycles[c].edges) {
        if (in_h[idx(e)]) {
          broken = true;
        } else {
          forest.edges.push_back(e);
        }
      }
      if (!broken) {
        throw ForestError("cycle (" + std::to_string(f) + "," +
                          std::to_string(c) + ") is not broken by H");
      }
    }
    std::sort(forest.edges.begin(), forest.edges.end());
    if (!is_linear_forest(g, forest.edges)) {
      throw ForestError("residual of factor " + std::to_string(f) +
                        " is not a linear forest");
    }
    out.push_back(std::move(forest));
  }
  return out;
}

std::string_view rung_name(HRung r) {
  switch (r) {
    case HRung::empty: return "empty";
    case HRung::identity: return "identity";
    case HRung::paths_and_cycles: return "paths_and_cycles";
    case HRung::exact: return "exact";
    case HRung::euler_split: return "euler_split";
  }
  return "?";
}

std::optional<std::vector<LinearForest>> exact_linear_partition(
    const Graph& g, std::span<const EdgeId> edges, int target,
    std::chrono::steady_clock::time_point deadline, bool* timed_out) {
  if (timed_out) *timed_out = false;
  if (edges.empty()) return std::vector<LinearForest>{};
  if (target < 1) return std::nullopt;
  PartitionSearch search(g, edges, target, deadline);
  if (search.run()) return search.forests();
  if (timed_out) *timed_out = search.timed_out();
  return std::nullopt;
}

std::pair<std::vector<EdgeId>, std::vector<EdgeId>> euler_split(
    const Graph& g, std::span<const EdgeId> edges) {
  const int n = g.vertex_count();
  const int virtual_vertex = n;
  const auto deg = degrees_in(g, edges);
  std::vector<std::pair<Vertex, Vertex>> ends;
  ends.reserve(edges.size() + n);
  for (EdgeId e : edges) ends.push_back({g.edge(e).u, g.edge(e).v});
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] % 2 != 0) ends.push_back({v, virtual_vertex});
  }
  // Start at the virtual vertex where present, else at a minimum-degree
  // vertex: only the start of an odd-length circuit can end up unbalanced.
  std::vector<int> rank(n + 1);
  for (Vertex v = 0; v < n; ++v) rank[v] = deg[v] * (n + 1) + v;
  rank[virtual_vertex] = -1;

  std::pair<std::vector<EdgeId>, std::vector<EdgeId>> halves;
  for (const auto& trail : detail::euler_circuits(n + 1, ends, rank)) {
    for (std::size_t i = 0; i < trail.edges.size(); ++i) {
      const int pos = trail.edges[i];
      if (pos >= static_cast<int>(edges.size())) continue;
      (i % 2 == 0 ? halves.first : halves.second).push_back(edges[pos]);
    }
  }
  std::sort(halves.first.begin(), halves.first.end());
  std::sort(halves.second.begin(), halves.second.end());
  return halves;
}

HDecomposition decompose_h(const Graph& g, std::span<const EdgeId> h,
                           std::chrono::milliseconds budget) {
  HDecomposition out;
  if (h.empty()) return out;
  const auto deg = degrees_in(g, h);
  out.max_degree = *std::max_element(deg.begin(), deg.end());
  if (out.max_degree <= 1) {
    out.rung = HRung::identity;
    LinearForest f{{h.begin(), h.end()}};
    std::sort(f.edges.begin(), f.edges.end());
    out.forests.push_back(std::move(f));
    return out;
  }
  if (out.max_degree == 2) {
    out.rung = HRung::paths_and_cycles;
    out.forests = break_cycles(g, h);
    return out;
  }
  const auto deadline = std::chrono::steady_clock::now() + budget;
  for (int target = ceil_div(out.max_degree + 1, 2); budget.count() > 0; ++target) {
    bool timed_out = false;
    auto found = exact_linear_partition(g, h, target, deadline, &timed_out);
    if (found) {
      out.rung = HRung::exact;
      out.forests = std::move(*found);
      return out;
    }
    if (timed_out) break;
  }
  out.rung = HRung::euler_split;
  split_recursively(g, h, out.forests);
  return out;
}

namespace {

std::vector<VertexPair> pairs_of(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<VertexPair> out;
  out.reserve(edges.size());
  for (EdgeId e : edges) out.push_back({g.edge(e).u, g.edge(e).v});
  return out;
}

}  // namespace

DecompositionCertificate decompose(const Graph& g, int k,
                                   const DecomposeOptions& options) {
  if (k < 1) throw DecomposeError("k must be positive");
  if (g.edge_count() == 0) throw DecomposeError("graph has no edges");
  if (!is_regular(g, 2 * k)) {
    throw DecomposeError("graph is not " + std::to_string(2 * k) + "-regular");
  }
  const int girth_value = girth(g);
  RegimePlan plan;
  try {
    plan = plan_regime(k, girth_value, options.c_max);
  } catch (const NoRegimeError& e) {
    throw DecomposeError(e.what());
  }

  TwoFactorization tf;
  if (options.hint) {
    tf = factorization_from_cycles(g, options.hint->factors);
    auto check = verify_two_factorization(g, tf);
    if (!check.ok) throw DecomposeError("invalid hint: " + check.diagnostic);
  } else {
    tf = two_factorize(g, k);
  }

  std::optional<Transversal> paper;
  int paper_degree = 0;
  if (!options.strict_only) {
    auto outcome = solve_paper(g, tf, plan.delta);
    if (outcome.transversal) {
      paper = std::move(outcome.transversal);
      paper_degree = subgraph_max_degree(g, paper->edges);
    }
  }

  std::optional<Transversal> chosen;
  int delta_used = plan.delta;
  for (int delta = plan.delta; delta <= std::max(plan.delta, options.c_max); ++delta) {
    if (paper && paper_degree <= delta) {
      chosen = paper;
    } else if (auto strict = solve_strict(g, tf, delta, options.time_budget);
               strict.transversal) {
      chosen = std::move(strict.transversal);
    }
    if (chosen) {
      delta_used = delta;
      break;
    }
  }
  if (!chosen) {
    throw DecomposeError("no transversal found for any delta <= " +
                         std::to_string(options.c_max));
  }

  auto residual = residual_forests(g, tf, *chosen);
  auto split = decompose_h(g, chosen->edges, options.time_budget);

  DecompositionCertificate cert;
  cert.digest_algorithm = std::string(kDigestAlgorithm);
  cert.graph_digest = graph_digest(g);
  cert.n = g.vertex_count();
  cert.m = g.edge_count();
  cert.k = k;
  cert.girth = girth_value;
  cert.regime = {plan.tag_name(), plan.delta, plan.extra_forests};
  for (const Factor& f : tf.factors) {
    auto& cycles = cert.factors.emplace_back();
    for (const Cycle& c : f.cycles) cycles.push_back(c.vertices);
  }
  cert.transversal.mode = std::string(mode_name(chosen->mode));
  cert.transversal.delta = delta_used;
  cert.transversal.max_degree = subgraph_max_degree(g, chosen->edges);
  cert.transversal.edges = pairs_of(g, chosen->edges);
  for (const auto& [e, v] : chosen->charge) {
    cert.transversal.charge.push_back({g.edge(e).u, g.edge(e).v, v});
  }
  for (const auto& f : residual) cert.forests.push_back(pairs_of(g, f.edges));
  for (const auto& f : split.forests) cert.forests.push_back(pairs_of(g, f.edges));
  cert.claimed_bound = plan.claimed_bound();
  cert.achieved_count = static_cast<int>(cert.forests.size());
  cert.paper_flow_feasible = paper.has_value();
  cert.h_rung = std::string(rung_name(split.rung));
  if (cert.achieved_count > cert.claimed_bound) {
    cert.overshoot = delta_used > plan.delta ? "transversal" : "h_decomposition";
  }
  cert.verified = verify_certificate(g, cert).overall();
  return cert;
}

}  // namespace linarb
