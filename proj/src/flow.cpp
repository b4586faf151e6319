#include "linarb/flow.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace linarb {

namespace {

// Residual graph with paired forward/backward arcs (2i, 2i + 1).
class Dinic {
 public:
  explicit Dinic(int n) : adjacency_(n), level_(n), cursor_(n) {}

  int add(int tail, int head, FlowQuantity cap) {
    const int id = static_cast<int>(head_.size());
    head_.push_back(head);
    residual_.push_back(cap);
    head_.push_back(tail);
    residual_.push_back(0);
    adjacency_[tail].push_back(id);
    adjacency_[head].push_back(id + 1);
    return id;
  }

  FlowQuantity run(int s, int t) {
    FlowQuantity total = 0;
    while (build_levels(s, t)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (FlowQuantity pushed = augment(s, t)) total += pushed;
    }
    return total;
  }

  FlowQuantity flow_on(int id, FlowQuantity cap) const {
    return cap - residual_[id];
  }
  FlowQuantity residual(int id) const { return residual_[id]; }

 private:
  bool build_levels(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : adjacency_[u]) {
        if (residual_[id] > 0 && level_[head_[id]] < 0) {
          level_[head_[id]] = level_[u] + 1;
          q.push(head_[id]);
        }
      }
    }
    return level_[t] >= 0;
  }

  // One augmenting path in the level graph, found iteratively; dead ends
  // advance the cursor so each phase is a blocking flow.
  FlowQuantity augment(int s, int t) {
    path_.clear();
    int u = s;
    while (true) {
      if (u == t) {
        FlowQuantity bottleneck = kUnbounded;
        for (int id : path_) bottleneck = std::min(bottleneck, residual_[id]);
        for (int id : path_) {
          residual_[id] -= bottleneck;
          residual_[id ^ 1] += bottleneck;
        }
        return bottleneck;
      }
      bool advanced = false;
      for (auto& c = cursor_[u]; c < adjacency_[u].size(); ++c) {
        const int id = adjacency_[u][c];
        const int w = head_[id];
        if (residual_[id] > 0 && level_[w] == level_[u] + 1) {
          path_.push_back(id);
          u = w;
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      if (u == s) return 0;
      level_[u] = -1;  // dead end for the rest of this phase
      const int back = path_.back();
      path_.pop_back();
      u = head_[back ^ 1];
      ++cursor_[u];
    }
  }

  std::vector<std::vector<int>> adjacency_;
  std::vector<int> head_;
  std::vector<FlowQuantity> residual_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  std::vector<int> path_;
};

// Finite stand-in for kUnbounded: exceeds any flow the network can carry
// through finitely bounded arcs.
FlowQuantity unbounded_surrogate(const FlowNetwork& net) {
  FlowQuantity sum = 1;
  for (const FlowArc& a : net.arcs) {
    sum += a.lower;
    if (a.capacity != kUnbounded) sum += a.capacity;
  }
  return sum;
}

void check_nodes(const FlowNetwork& net) {
  for (const FlowArc& a : net.arcs) {
    if (a.tail < 0 || a.head < 0 || a.tail >= net.node_count ||
        a.head >= net.node_count) {
      throw FlowError("arc endpoint out of range");
    }
    if (a.lower < 0 || (a.capacity != kUnbounded && a.capacity < a.lower)) {
      throw FlowError("arc bounds violate 0 <= lower <= capacity");
    }
  }
}

}  // namespace

FlowSolution max_flow(const FlowNetwork& net, int s, int t) {
  check_nodes(net);
  if (s < 0 || t < 0 || s >= net.node_count || t >= net.node_count || s == t) {
    throw FlowError("invalid source/sink");
  }
  FlowSolution sol;
  for (const FlowArc& a : net.arcs) {
    if (a.lower != 0) throw FlowError("max_flow requires zero lower bounds");
  }

  // An s-t path of unbounded arcs admits arbitrarily large flow.
  {
    std::vector<char> seen(net.node_count, 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const FlowArc& a : net.arcs) {
        if (a.tail == u && a.capacity == kUnbounded && !seen[a.head]) {
          seen[a.head] = 1;
          stack.push_back(a.head);
        }
      }
    }
    if (seen[t]) {
      sol.unbounded = true;
      sol.feasible = true;
      sol.value = kUnbounded;
      return sol;
    }
  }

  const FlowQuantity big = unbounded_surrogate(net);
  Dinic dinic(net.node_count);
  std::vector<int> ids;
  ids.reserve(net.arcs.size());
  for (const FlowArc& a : net.arcs) {
    ids.push_back(dinic.add(a.tail, a.head,
                            a.capacity == kUnbounded ? big : a.capacity));
  }
  sol.value = dinic.run(s, t);
  sol.feasible = true;
  sol.flow.reserve(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowQuantity cap =
        net.arcs[i].capacity == kUnbounded ? big : net.arcs[i].capacity;
    sol.flow.push_back(dinic.flow_on(ids[i], cap));
  }
  return sol;
}

FlowSolution feasible_circulation(const FlowNetwork& net) {
  check_nodes(net);
  const int n = net.node_count;
  const int super_source = n;
  const int super_sink = n + 1;
  const FlowQuantity big = unbounded_surrogate(net);

  Dinic dinic(n + 2);
  std::vector<int> ids;
  ids.reserve(net.arcs.size());
  std::vector<FlowQuantity> lower_in(n, 0), lower_out(n, 0);
  for (const FlowArc& a : net.arcs) {
    const FlowQuantity cap =
        a.capacity == kUnbounded ? big : a.capacity - a.lower;
    ids.push_back(dinic.add(a.tail, a.head, cap));
    lower_out[a.tail] += a.lower;
    lower_in[a.head] += a.lower;
  }
  // Terminals trade any amount of flow in either direction.
  int forward_return = -1, backward_return = -1;
  if (net.source && net.sink) {
    forward_return = dinic.add(*net.sink, *net.source, big);
    backward_return = dinic.add(*net.source, *net.sink, big);
  }
  std::vector<int> supply_ids(n, -1);
  FlowQuantity demand = 0;
  for (int v = 0; v < n; ++v) {
    if (lower_in[v] > 0) supply_ids[v] = dinic.add(super_source, v, lower_in[v]);
    if (lower_out[v] > 0) dinic.add(v, super_sink, lower_out[v]);
    demand += lower_in[v];
  }

  const FlowQuantity pushed = dinic.run(super_source, super_sink);
  FlowSolution sol;
  sol.feasible = pushed == demand;
  sol.deficit = demand - pushed;
  if (!sol.feasible) {
    for (int v = 0; v < n; ++v) {
      if (supply_ids[v] >= 0 && dinic.residual(supply_ids[v]) > 0) {
        sol.unsaturated_nodes.push_back(v);
      }
    }
    return sol;
  }
  sol.flow.reserve(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    const FlowQuantity cap =
        a.capacity == kUnbounded ? big : a.capacity - a.lower;
    sol.flow.push_back(dinic.flow_on(ids[i], cap) + a.lower);
  }
  if (forward_return >= 0) {
    sol.value = dinic.flow_on(forward_return, big) -
                dinic.flow_on(backward_return, big);
  }
  return sol;
}

bool satisfies_bounds_and_conservation(const FlowNetwork& net,
                                       const std::vector<FlowQuantity>& flow) {
  if (flow.size() != net.arcs.size()) return false;
  std::vector<FlowQuantity> balance(net.node_count, 0);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    if (flow[i] < a.lower) return false;
    if (a.capacity != kUnbounded && flow[i] > a.capacity) return false;
    balance[a.tail] -= flow[i];
    balance[a.head] += flow[i];
  }
  for (int v = 0; v < net.node_count; ++v) {
    if (v == net.source || v == net.sink) continue;
    if (balance[v] != 0) return false;
  }
  return true;
}

std::string dump_network(const FlowNetwork& net) {
  std::ostringstream out;
  out << "p circ " << net.node_count << ' ' << net.arcs.size() << '\n';
  if (net.source) out << "n " << *net.source << " s\n";
  if (net.sink) out << "n " << *net.sink << " t\n";
  for (const FlowArc& a : net.arcs) {
    out << "a " << a.tail << ' ' << a.head << ' ' << a.lower << ' ';
    if (a.capacity == kUnbounded) {
      out << "inf";
    } else {
      out << a.capacity;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace linarb
