#include "linarb/transversal.hpp"

#include <algorithm>
#include <numeric>

namespace linarb {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int general_extra_forests(int c) { return ceil_div(3 * c + 2, 2); }

std::string RegimePlan::tag_name() const {
  switch (tag) {
    case RegimeTag::g2k: return "G2K";
    case RegimeTag::gk: return "GK";
    case RegimeTag::gk2: return "GK2";
    case RegimeTag::gk4: return "GK4";
    case RegimeTag::g2kc: return "G2KC(" + std::to_string(c) + ")";
  }
  return "?";
}

RegimePlan plan_regime(int k, int girth, int c_max) {
  if (k < 1) throw NoRegimeError("k must be positive");
  if (girth < 1) throw NoRegimeError("girth must be positive");
  const long long g = girth;
  std::vector<RegimePlan> candidates;
  auto add = [&](RegimeTag tag, int delta, int t, int c = 0) {
    candidates.push_back({k, girth, delta, t, tag, c});
  };
  if (g >= 2LL * k) add(RegimeTag::g2k, 1, 1);
  if (g >= k) add(RegimeTag::gk, 2, 2);
  if (2 * g >= k) add(RegimeTag::gk2, 4, 3);
  if (4 * g >= k) add(RegimeTag::gk4, 8, 5);
  const long long c = (2LL * k + g - 1) / g;
  if (c <= c_max) {
    add(RegimeTag::g2kc, static_cast<int>(c),
        general_extra_forests(static_cast<int>(c)), static_cast<int>(c));
  }
  if (candidates.empty()) {
    throw NoRegimeError("no regime applies to k=" + std::to_string(k) +
                        ", girth=" + std::to_string(girth) +
                        " with c_max=" + std::to_string(c_max));
  }
  return *std::min_element(
      candidates.begin(), candidates.end(),
      [](const RegimePlan& a, const RegimePlan& b) {
        return std::pair(a.extra_forests, a.delta) <
               std::pair(b.extra_forests, b.delta);
      });
}

TransversalNetwork build_network(const Graph& g, const TwoFactorization& tf,
                                 int delta) {
  TransversalNetwork tn;
  tn.cycles = tf.flat_cycles();
  const int cycle_count = static_cast<int>(tn.cycles.size());
  FlowNetwork& net = tn.net;
  net.node_count = 2 + cycle_count + g.edge_count() + g.vertex_count();
  net.source = tn.source;
  net.sink = tn.sink;
  tn.first_edge_node = tn.first_cycle_node + cycle_count;
  tn.first_vertex_node = tn.first_edge_node + g.edge_count();

  for (int j = 0; j < cycle_count; ++j) {
    net.add_arc(tn.source, tn.first_cycle_node + j, 1, kUnbounded);
  }
  tn.first_selection_arc = static_cast<int>(net.arcs.size());
  for (int j = 0; j < cycle_count; ++j) {
    for (EdgeId e : tf.cycle(tn.cycles[j]).edges) {
      net.add_arc(tn.first_cycle_node + j,
                  tn.first_edge_node + static_cast<int>(idx(e)), 0, 1);
      tn.selection_edge.push_back(e);
    }
  }
  tn.first_incidence_arc = static_cast<int>(net.arcs.size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edges()[e];
    const int node = tn.first_edge_node + static_cast<int>(e);
    net.add_arc(node, tn.first_vertex_node + ed.u, 0, 1);
    net.add_arc(node, tn.first_vertex_node + ed.v, 0, 1);
  }
  tn.first_capacity_arc = static_cast<int>(net.arcs.size());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    net.add_arc(tn.first_vertex_node + v, tn.sink, 0, delta);
  }
  return tn;
}

std::string_view mode_name(TransversalMode m) {
  return m == TransversalMode::paper ? "paper" : "strict";
}

namespace {

std::vector<std::vector<EdgeId>> hits_from_edges(const TwoFactorization& tf,
                                                 std::span<const EdgeId> h) {
  const auto flat = tf.flat_cycles();
  std::vector<int> offset(tf.factors.size() + 1, 0);
  for (std::size_t f = 0; f < tf.factors.size(); ++f) {
    offset[f + 1] = offset[f] + static_cast<int>(tf.factors[f].cycles.size());
  }
  std::vector<std::vector<EdgeId>> hits(flat.size());
  for (EdgeId e : h) {
    const CycleRef r = tf.cycle_index[idx(e)];
    hits[offset[r.factor] + r.cycle].push_back(e);
  }
  return hits;
}

}  // namespace

PaperOutcome solve_paper(const Graph& g, const TwoFactorization& tf,
                         int delta) {
  TransversalNetwork tn = build_network(g, tf, delta);
  PaperOutcome out;
  out.flow = feasible_circulation(tn.net);
  if (!out.flow.feasible) return out;

  Transversal t;
  t.mode = TransversalMode::paper;
  t.delta = delta;
  const auto& flow = out.flow.flow;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const int arc = tn.first_incidence_arc + 2 * static_cast<int>(e);
    const FlowQuantity to_u = flow[arc];
    const FlowQuantity to_v = flow[arc + 1];
    if (to_u + to_v < 1) continue;
    t.edges.push_back(edge_id(e));
    t.charge.push_back({edge_id(e), to_u >= to_v ? g.edges()[e].u : g.edges()[e].v});
  }
  t.hits.assign(tn.cycles.size(), {});
  int arc = tn.first_selection_arc;
  for (std::size_t j = 0; j < tn.cycles.size(); ++j) {
    for (EdgeId e : tf.cycle(tn.cycles[j]).edges) {
      if (flow[arc++] >= 1) t.hits[j].push_back(e);
    }
  }
  out.transversal = std::move(t);
  return out;
}

namespace {

class StrictSearch {
 public:
  StrictSearch(const Graph& g, const TwoFactorization& tf, int delta,
               std::chrono::milliseconds budget)
      : g_(g),
        deadline_(std::chrono::steady_clock::now() + budget),
        budget_(g.vertex_count(), delta) {
    const auto flat = tf.flat_cycles();
    for (const CycleRef& r : flat) cycles_.push_back(&tf.cycle(r));
    order_.resize(cycles_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return cycles_[a]->length() < cycles_[b]->length();
    });
    vertex_cycles_.resize(g.vertex_count());
    for (int j = 0; j < static_cast<int>(cycles_.size()); ++j) {
      for (Vertex v : cycles_[j]->vertices) vertex_cycles_[v].push_back(j);
    }
    chosen_.assign(cycles_.size(), std::nullopt);
  }

  SearchStatus run() {
    // Cycles with no selectable edge at the start make the instance trivially
    // infeasible; the recursion would discover the same thing.
    for (int j = 0; j < static_cast<int>(cycles_.size()); ++j) {
      if (!selectable(j)) return SearchStatus::infeasible;
    }
    const bool found = descend(0);
    if (timed_out_) return SearchStatus::timed_out;
    return found ? SearchStatus::found : SearchStatus::infeasible;
  }

  std::vector<EdgeId> selection() const {
    std::vector<EdgeId> out;
    for (const auto& e : chosen_) out.push_back(*e);
    std::sort(out.begin(), out.end());
    return out;
  }

  long long nodes() const { return nodes_; }

 private:
  bool selectable(int j) const {
    for (EdgeId e : cycles_[j]->edges) {
      const Edge& ed = g_.edge(e);
      if (budget_[ed.u] > 0 && budget_[ed.v] > 0) return true;
    }
    return false;
  }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if ((++nodes_ & 255) == 0 && std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
    }
    if (timed_out_) return false;

    const int j = order_[depth];
    std::vector<std::pair<int, EdgeId>> candidates;
    for (EdgeId e : cycles_[j]->edges) {
      const Edge& ed = g_.edge(e);
      const int room = std::min(budget_[ed.u], budget_[ed.v]);
      if (room > 0) candidates.push_back({room, e});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    for (const auto& [room, e] : candidates) {
      const Edge& ed = g_.edge(e);
      --budget_[ed.u];
      --budget_[ed.v];
      chosen_[j] = e;
      if (forward_ok(ed) && descend(depth + 1)) return true;
      chosen_[j].reset();
      ++budget_[ed.u];
      ++budget_[ed.v];
      if (timed_out_) return false;
    }
    return false;
  }

  // Unassigned cycles through a vertex whose budget just dropped must keep
  // at least one selectable edge.
  bool forward_ok(const Edge& ed) const {
    for (Vertex v : {ed.u, ed.v}) {
      if (budget_[v] > 0) continue;
      for (int j : vertex_cycles_[v]) {
        if (!chosen_[j] && !selectable(j)) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<int> budget_;
  std::vector<const Cycle*> cycles_;
  std::vector<int> order_;
  std::vector<std::vector<int>> vertex_cycles_;
  std::vector<std::optional<EdgeId>> chosen_;
  long long nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

StrictOutcome solve_strict(const Graph& g, const TwoFactorization& tf,
                           int delta, std::chrono::milliseconds budget) {
  StrictSearch search(g, tf, delta, budget);
  StrictOutcome out;
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.status == SearchStatus::found) {
    Transversal t;
    t.mode = TransversalMode::strict;
    t.delta = delta;
    t.edges = search.selection();
    t.hits = hits_from_edges(tf, t.edges);
    out.transversal = std::move(t);
  }
  return out;
}

int subgraph_max_degree(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<int> deg(g.vertex_count(), 0);
  int best = 0;
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    best = std::max({best, ++deg[ed.u], ++deg[ed.v]});
  }
  return best;
}

TransversalCheck verify_transversal(const Graph& g, const TwoFactorization& tf,
                                    const Transversal& t, int delta,
                                    bool strict) {
  TransversalCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.diagnostics.push_back(std::move(msg));
  };
  std::vector<char> in_h(g.edge_count(), 0);
  for (EdgeId e : t.edges) {
    if (idx(e) >= static_cast<std::size_t>(g.edge_count())) {
      fail("edge id " + std::to_string(idx(e)) + " out of range");
      return check;
    }
    if (in_h[idx(e)]) fail("edge " + std::to_string(idx(e)) + " listed twice");
    in_h[idx(e)] = 1;
  }
  for (int f = 0; f < static_cast<int>(tf.factors.size()); ++f) {
    const auto& cycles = tf.factors[f].cycles;
    for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
      const auto& es = cycles[c].edges;
      if (std::none_of(es.begin(), es.end(),
                       [&](EdgeId e) { return in_h[idx(e)] != 0; })) {
        fail("cycle (" + std::to_string(f) + "," + std::to_string(c) +
             ") unhit");
      }
    }
  }
  check.true_max_degree = subgraph_max_degree(g, t.edges);
  if (strict) {
    if (check.true_max_degree > delta) {
      fail("max degree of H is " + std::to_string(check.true_max_degree) +
           " > delta " + std::to_string(delta));
    }
    return check;
  }
  std::vector<int> charged(g.vertex_count(), 0);
  std::vector<char> seen(g.edge_count(), 0);
  for (const auto& [e, v] : t.charge) {
    if (idx(e) >= in_h.size() || !in_h[idx(e)]) {
      fail("charge recorded for an edge outside H");
      continue;
    }
    const Edge& ed = g.edge(e);
    if (v != ed.u && v != ed.v) {
      fail("edge " + std::to_string(idx(e)) + " charged to a non-endpoint");
      continue;
    }
    if (seen[idx(e)]++) fail("edge " + std::to_string(idx(e)) + " charged twice");
    ++charged[v];
  }
  for (EdgeId e : t.edges) {
    if (!seen[idx(e)]) fail("edge " + std::to_string(idx(e)) + " has no charge");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (charged[v] > delta) {
      fail("vertex " + std::to_string(v) + " charged " +
           std::to_string(charged[v]) + " > delta " + std::to_string(delta));
    }
  }
  if (check.true_max_degree > delta) {
    check.warnings.push_back("true degree exceeds delta: max degree of H is " +
                             std::to_string(check.true_max_degree));
  }
  return check;
}

}  // namespace linarb
