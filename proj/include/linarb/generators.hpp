#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linarb/graph.hpp"

namespace linarb {

enum class Family {
  cycle,
  complete,
  complete_bipartite,
  circulant,
  random_regular,
  named,
};

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

inline constexpr int kDefaultRetries = 10000;

struct GenSpec {
  Family family = Family::cycle;
  int n = 0;               // cycle, complete, circulant, random_regular
  int a = 0, b = 0;        // complete_bipartite part sizes
  int k = 0;               // random_regular: degree is 2k
  int g_min = 3;           // random_regular
  std::vector<int> shifts; // circulant
  std::string name;        // named: petersen, k5, k7, k44
  std::uint64_t seed = 0;
  int retries = kDefaultRetries;
};

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
// Shifts must be distinct, in [1, n/2]. Shift n/2 (n even) adds degree 1.
Graph circulant_graph(int n, const std::vector<int>& shifts);
Graph named_graph(std::string_view name);

Graph generate(const GenSpec& spec);

// The k Hamilton cycles that built a random_regular graph. Each entry is a
// 2-factor given as a list of cycles (here always a single cycle).
struct FactorizationHint {
  std::vector<std::vector<std::vector<Vertex>>> factors;
};

struct RegularSample {
  Graph graph;
  FactorizationHint hint;
  int attempts = 0;
};

// Union of k uniformly random cyclic permutations of 0..n-1, rejected until
// the union is simple with girth >= g_min. Deterministic in seed.
// Throws GeneratorError when the retry budget runs out.
RegularSample random_regular_with_girth(int n, int k, int g_min,
                                        std::uint64_t seed,
                                        int retries = kDefaultRetries);

}  // namespace linarb
