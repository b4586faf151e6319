#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linarb/certificate.hpp"
#include "linarb/factorize.hpp"
#include "linarb/generators.hpp"
#include "linarb/graph.hpp"
#include "linarb/transversal.hpp"

namespace linarb {

// Edge set whose components are all paths.
struct LinearForest {
  std::vector<EdgeId> edges;
};

bool is_linear_forest(const Graph& g, std::span<const EdgeId> edges);

class ForestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// L_i = F_i minus H for every factor. Throws ForestError naming the first
// cycle H fails to break.
std::vector<LinearForest> residual_forests(const Graph& g,
                                           const TwoFactorization& tf,
                                           const Transversal& h);

enum class HRung {
  empty,             // H has no edges
  identity,          // max degree <= 1: H is one forest
  paths_and_cycles,  // max degree 2: drop one edge per cycle
  exact,             // branch and bound met some target
  euler_split,       // exact search timed out; recursive halving
};
std::string_view rung_name(HRung r);

struct HDecomposition {
  std::vector<LinearForest> forests;
  int max_degree = 0;  // measured on H
  HRung rung = HRung::empty;
};

inline constexpr std::chrono::milliseconds kDefaultExactBudget{10000};

// Splits H into linear forests by a ladder chosen from H's measured max
// degree d: identity (d <= 1), cycle breaking (d = 2), exact search from
// ceil((d+1)/2) forests upward (d >= 3), and a recursive Euler split when
// the exact search runs out of time.
HDecomposition decompose_h(const Graph& g, std::span<const EdgeId> h,
                           std::chrono::milliseconds budget = kDefaultExactBudget);

// Exact partition of edges into at most `target` linear forests, or nullopt
// when none exists or the deadline passes (timed_out tells which).
std::optional<std::vector<LinearForest>> exact_linear_partition(
    const Graph& g, std::span<const EdgeId> edges, int target,
    std::chrono::steady_clock::time_point deadline, bool* timed_out);

// Two halves with per-vertex degrees floor/ceil of half, by alternating
// colors along Euler circuits (odd vertices joined to a virtual vertex).
std::pair<std::vector<EdgeId>, std::vector<EdgeId>> euler_split(
    const Graph& g, std::span<const EdgeId> edges);

struct DecomposeOptions {
  // Skip the flow network and search for a strict transversal directly.
  bool strict_only = false;
  std::chrono::milliseconds time_budget = kDefaultStrictBudget;
  int c_max = kDefaultCMax;
  std::optional<FactorizationHint> hint;
};

class DecomposeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Full pipeline on a 2k-regular graph: girth, regime plan, 2-factorization,
// transversal (flow network first, strict search as fallback), residual
// forests, split of H, certificate, independent verification.
DecompositionCertificate decompose(const Graph& g, int k,
                                   const DecomposeOptions& options = {});

}  // namespace linarb
