#pragma once

#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "linarb/certificate.hpp"
#include "linarb/factorize.hpp"
#include "linarb/graph.hpp"

namespace linarb {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool overall() const;
  const CheckResult* find(std::string_view name) const;
  std::string to_text() const;  // one "PASS|FAIL name: detail" line each
};

// Re-derives every claim of a certificate from the raw graph. Independent of
// the pipeline: only graph-core is shared.
VerificationReport verify_certificate(const Graph& g,
                                      const DecompositionCertificate& cert);

struct OracleResult {
  int value = 0;
  bool exact = false;  // false: budget ran out, value is a proven lower bound
};

inline constexpr std::chrono::milliseconds kDefaultOracleBudget{30000};

// Exact linear arboricity by backtracking over edge colorings, starting at
// ceil(max_degree / 2) (ceil((r + 1) / 2) for r-regular graphs). Meant for
// graphs with a few dozen edges at most.
OracleResult oracle_la(const Graph& g,
                       std::chrono::milliseconds budget = kDefaultOracleBudget);

// Minimum-size edge set meeting every cycle of tf with degree <= delta, by
// exhaustive subset enumeration. Throws std::invalid_argument above 24 edges.
std::optional<std::vector<EdgeId>> oracle_transversal(const Graph& g,
                                                      const TwoFactorization& tf,
                                                      int delta);

// Oracle results keyed by graph digest, persisted as a JSON object.
class OracleCache {
 public:
  explicit OracleCache(std::string path);

  std::optional<OracleResult> get(const std::string& digest) const;
  void put(const std::string& digest, OracleResult result);
  // Writes to a temporary file and renames it over the cache.
  void save() const;

 private:
  std::string path_;
  mutable std::mutex mutex_;
  std::map<std::string, OracleResult> entries_;
};

}  // namespace linarb
