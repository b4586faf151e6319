#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linarb/factorize.hpp"
#include "linarb/flow.hpp"
#include "linarb/graph.hpp"

namespace linarb {

// Girth regimes, from tightest to loosest girth requirement.
enum class RegimeTag {
  g2k,   // girth >= 2k    -> delta 1, one extra forest
  gk,    // girth >= k     -> delta 2, two extra forests
  gk2,   // girth >= k/2   -> delta 4, three extra forests
  gk4,   // girth >= k/4   -> delta 8, five extra forests
  g2kc,  // girth >= 2k/c  -> delta c, ceil((3c+2)/2) extra forests
};

struct RegimePlan {
  int k = 0;
  int girth = 0;
  int delta = 0;
  int extra_forests = 0;  // t: the bound claimed is k + t
  RegimeTag tag = RegimeTag::g2k;
  int c = 0;  // only for g2kc

  std::string tag_name() const;  // "G2K", "GK", "GK2", "GK4", "G2KC(c)"
  int claimed_bound() const { return k + extra_forests; }
};

inline constexpr int kDefaultCMax = 64;

class NoRegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int ceil_div(int a, int b);
int general_extra_forests(int c);  // ceil((3c + 2) / 2)

// Among the regimes whose girth condition holds, the one claiming the fewest
// extra forests (ties: smaller delta). Throws NoRegimeError if none applies.
RegimePlan plan_regime(int k, int girth, int c_max = kDefaultCMax);

// Node layout of the cycle-selection network.
struct TransversalNetwork {
  FlowNetwork net;
  int source = 0;
  int sink = 1;
  int first_cycle_node = 2;
  int first_edge_node = 0;
  int first_vertex_node = 0;
  std::vector<CycleRef> cycles;  // flat order; node first_cycle_node + i
  // Arc index ranges, in construction order.
  int first_selection_arc = 0;
  int first_incidence_arc = 0;  // arcs 2e and 2e+1 after this: (e,u), (e,v)
  int first_capacity_arc = 0;
  std::vector<EdgeId> selection_edge;  // edge of each selection arc
};

// Nodes {S, T} + cycles + edges + vertices. Arcs: S->C (lower 1, unbounded),
// C->e for e in C (cap 1), e->u and e->v (cap 1), v->T (cap delta).
TransversalNetwork build_network(const Graph& g, const TwoFactorization& tf,
                                 int delta);

enum class TransversalMode { paper, strict };
std::string_view mode_name(TransversalMode m);

// An edge set H meeting every cycle of the factorization.
struct Transversal {
  TransversalMode mode = TransversalMode::strict;
  int delta = 0;
  std::vector<EdgeId> edges;  // sorted
  // Paper mode: the endpoint that received each selected edge's flow unit.
  std::vector<std::pair<EdgeId, Vertex>> charge;
  // Selected edges on each cycle, in flat cycle order.
  std::vector<std::vector<EdgeId>> hits;
};

struct PaperOutcome {
  std::optional<Transversal> transversal;  // empty when infeasible
  FlowSolution flow;
};

// Solves the network's lower-bound circulation and reads H off the integer
// flow: an edge is selected when a unit leaves its edge node.
PaperOutcome solve_paper(const Graph& g, const TwoFactorization& tf, int delta);

enum class SearchStatus { found, infeasible, timed_out };

struct StrictOutcome {
  SearchStatus status = SearchStatus::infeasible;
  std::optional<Transversal> transversal;
  long long nodes = 0;
};

inline constexpr std::chrono::milliseconds kDefaultStrictBudget{10000};

// Exact backtracking for one edge per cycle with true degree <= delta at
// every vertex. Cycles are taken in ascending length; candidates by
// descending min endpoint budget; forward checking prunes cycles left with
// no selectable edge.
StrictOutcome solve_strict(const Graph& g, const TwoFactorization& tf,
                           int delta,
                           std::chrono::milliseconds budget = kDefaultStrictBudget);

struct TransversalCheck {
  bool ok = true;
  std::vector<std::string> diagnostics;
  std::vector<std::string> warnings;
  int true_max_degree = 0;
};

// Strict: every cycle hit and max degree of H <= delta. Paper: every cycle
// hit and per-vertex charge <= delta; a true degree above delta is only
// reported as a warning.
TransversalCheck verify_transversal(const Graph& g, const TwoFactorization& tf,
                                    const Transversal& t, int delta,
                                    bool strict);

int subgraph_max_degree(const Graph& g, std::span<const EdgeId> edges);

}  // namespace linarb
