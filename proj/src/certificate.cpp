#include "linarb/certificate.hpp"

namespace linarb {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json certificate_to_json(const DecompositionCertificate& c) {
  ordered_json j;
  j["version"] = c.version;
  j["digest_algorithm"] = c.digest_algorithm;
  j["graph_digest"] = c.graph_digest;
  j["n"] = c.n;
  j["m"] = c.m;
  j["k"] = c.k;
  if (c.girth == kInfiniteGirth) {
    j["girth"] = nullptr;
  } else {
    j["girth"] = c.girth;
  }
  j["regime"] = {{"tag", c.regime.tag}, {"delta", c.regime.delta}, {"t", c.regime.t}};
  j["factors"] = c.factors;
  ordered_json t;
  t["mode"] = c.transversal.mode;
  t["delta"] = c.transversal.delta;
  t["max_degree"] = c.transversal.max_degree;
  t["edges"] = c.transversal.edges;
  if (c.transversal.mode == "paper") t["charge"] = c.transversal.charge;
  j["transversal"] = std::move(t);
  j["forests"] = c.forests;
  j["claimed_bound"] = c.claimed_bound;
  j["achieved_count"] = c.achieved_count;
  j["verified"] = c.verified;
  j["pipeline"] = {{"paper_flow_feasible", c.paper_flow_feasible},
                   {"h_rung", c.h_rung},
                   {"overshoot", c.overshoot.empty() ? json(nullptr) : json(c.overshoot)}};
  return j;
}

DecompositionCertificate certificate_from_json(const json& j) {
  try {
    DecompositionCertificate c;
    c.version = j.at("version").get<int>();
    if (c.version != kCertificateVersion) {
      throw CertificateFormatError("unsupported certificate version " +
                                   std::to_string(c.version));
    }
    c.digest_algorithm = j.value("digest_algorithm", std::string());
    c.graph_digest = j.at("graph_digest").get<std::string>();
    c.n = j.at("n").get<int>();
    c.m = j.at("m").get<int>();
    c.k = j.at("k").get<int>();
    c.girth = j.at("girth").is_null() ? kInfiniteGirth : j.at("girth").get<int>();
    const json& r = j.at("regime");
    c.regime = {r.at("tag").get<std::string>(), r.at("delta").get<int>(),
                r.at("t").get<int>()};
    c.factors = j.at("factors").get<std::vector<std::vector<std::vector<Vertex>>>>();
    const json& t = j.at("transversal");
    c.transversal.mode = t.at("mode").get<std::string>();
    c.transversal.delta = t.value("delta", c.regime.delta);
    c.transversal.max_degree = t.value("max_degree", 0);
    c.transversal.edges = t.at("edges").get<std::vector<VertexPair>>();
    if (t.contains("charge")) {
      c.transversal.charge = t.at("charge").get<std::vector<std::array<Vertex, 3>>>();
    }
    c.forests = j.at("forests").get<std::vector<std::vector<VertexPair>>>();
    c.claimed_bound = j.at("claimed_bound").get<int>();
    c.achieved_count = j.at("achieved_count").get<int>();
    c.verified = j.at("verified").get<bool>();
    if (j.contains("pipeline")) {
      const json& p = j.at("pipeline");
      c.paper_flow_feasible = p.value("paper_flow_feasible", false);
      c.h_rung = p.value("h_rung", std::string());
      if (p.contains("overshoot") && p.at("overshoot").is_string()) {
        c.overshoot = p.at("overshoot").get<std::string>();
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw CertificateFormatError(std::string("malformed certificate: ") + e.what());
  }
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace linarb
