#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "linarb/graph.hpp"

namespace linarb {

using VertexPair = std::array<Vertex, 2>;

inline constexpr int kCertificateVersion = 1;

struct CertificateRegime {
  std::string tag;
  int delta = 0;
  int t = 0;
};

struct CertificateTransversal {
  std::string mode;     // "paper" or "strict"
  int delta = 0;        // delta the transversal was found with
  int max_degree = 0;   // true maximum degree of H
  std::vector<VertexPair> edges;
  std::vector<std::array<Vertex, 3>> charge;  // paper mode: u, v, charged
};

// Everything needed to re-check a decomposition from the raw graph. Plain
// vertex-level data so the verifier does not depend on pipeline types.
struct DecompositionCertificate {
  int version = kCertificateVersion;
  std::string digest_algorithm;
  std::string graph_digest;
  int n = 0;
  int m = 0;
  int k = 0;
  int girth = kInfiniteGirth;
  CertificateRegime regime;
  std::vector<std::vector<std::vector<Vertex>>> factors;
  CertificateTransversal transversal;
  std::vector<std::vector<VertexPair>> forests;
  int claimed_bound = 0;
  int achieved_count = 0;
  bool verified = false;

  // Pipeline diagnostics.
  bool paper_flow_feasible = false;
  std::string h_rung;     // which ladder rung split H
  std::string overshoot;  // stage that exceeded the claim, empty if none
};

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json certificate_to_json(const DecompositionCertificate& c);
// Throws CertificateFormatError on missing or mistyped fields.
DecompositionCertificate certificate_from_json(const nlohmann::json& j);

// Pretty-printed JSON terminated by a newline.
std::string dump_json(const nlohmann::ordered_json& j);

}  // namespace linarb
