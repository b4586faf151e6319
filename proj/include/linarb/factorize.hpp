#pragma once

#include <string>
#include <vector>

#include "linarb/graph.hpp"

namespace linarb {

// A cycle given by its cyclic vertex sequence; edges[i] joins vertices[i]
// and vertices[(i + 1) % size].
struct Cycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(vertices.size()); }
};

// A 2-factor: vertex-disjoint cycles covering every vertex.
struct Factor {
  std::vector<Cycle> cycles;
};

struct CycleRef {
  int factor = -1;
  int cycle = -1;
  friend bool operator==(const CycleRef&, const CycleRef&) = default;
};

struct TwoFactorization {
  int k = 0;
  std::vector<Factor> factors;
  std::vector<CycleRef> cycle_index;  // indexed by EdgeId

  int cycle_count() const;
  // All cycles in factor-major order; position in this list is the cycle's
  // flat index used by the transversal network.
  std::vector<CycleRef> flat_cycles() const;
  const Cycle& cycle(CycleRef r) const { return factors[r.factor].cycles[r.cycle]; }
};

class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Splits a 2k-regular graph into k 2-factors: each component is oriented
// along an Euler circuit, and k perfect matchings are peeled off the
// k-regular bipartite out/in graph. Throws FactorizationError when g is not
// 2k-regular.
TwoFactorization two_factorize(const Graph& g, int k);

// Builds a factorization from explicit vertex sequences (e.g. a generator
// hint). Throws FactorizationError if a consecutive pair is not an edge.
// No other validation: use verify_two_factorization.
TwoFactorization factorization_from_cycles(
    const Graph& g,
    const std::vector<std::vector<std::vector<Vertex>>>& factors);

struct FactorizationCheck {
  bool ok = true;
  std::string diagnostic;  // first violated invariant
};

FactorizationCheck verify_two_factorization(const Graph& g,
                                            const TwoFactorization& tf);

}  // namespace linarb
