#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace linarb {

using FlowQuantity = std::int64_t;

// Capacity sentinel for arcs without an upper bound.
inline constexpr FlowQuantity kUnbounded =
    std::numeric_limits<FlowQuantity>::max();

struct FlowArc {
  int tail = 0;
  int head = 0;
  FlowQuantity lower = 0;
  FlowQuantity capacity = 0;  // or kUnbounded
};

struct FlowNetwork {
  int node_count = 0;
  std::vector<FlowArc> arcs;
  // Terminals exempt from conservation; absent for a pure circulation.
  std::optional<int> source;
  std::optional<int> sink;

  int add_node() { return node_count++; }
  int add_arc(int tail, int head, FlowQuantity lower, FlowQuantity capacity) {
    arcs.push_back({tail, head, lower, capacity});
    return static_cast<int>(arcs.size()) - 1;
  }
};

struct FlowSolution {
  bool feasible = false;
  std::vector<FlowQuantity> flow;  // per arc of the input network
  // max_flow: flow value (meaningless when unbounded).
  // feasible_circulation: net flow from source to sink, 0 without terminals.
  FlowQuantity value = 0;
  bool unbounded = false;
  // Infeasibility witness of feasible_circulation: nodes whose supply arc
  // from the super-source stayed unsaturated, and the total shortfall.
  std::vector<int> unsaturated_nodes;
  FlowQuantity deficit = 0;
};

class FlowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer maximum s-t flow (Dinic: BFS level graph, blocking flow per
// phase). Lower bounds must be zero. If some s-t path uses only unbounded
// arcs the result is marked unbounded and no flow is returned.
FlowSolution max_flow(const FlowNetwork& net, int s, int t);

// Feasible flow respecting lower bounds and capacities, with conservation at
// every node except the network's source and sink (if set). Uses the
// classical reduction to max-flow; the result is integral.
FlowSolution feasible_circulation(const FlowNetwork& net);

// Arc-by-arc and node-by-node check of bounds and conservation.
bool satisfies_bounds_and_conservation(const FlowNetwork& net,
                                       const std::vector<FlowQuantity>& flow);

// DIMACS-like dump: "p circ <nodes> <arcs>", optional "n <id> s|t", then
// "a <tail> <head> <lower> <capacity|inf>" per arc.
std::string dump_network(const FlowNetwork& net);

}  // namespace linarb
