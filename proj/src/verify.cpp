#include "linarb/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace linarb {

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out << (overall() ? "certificate verified" : "certificate REJECTED") << '\n';
  return out.str();
}

namespace {

std::string pair_text(Vertex a, Vertex b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

// Edge id for a vertex pair, or nullopt when the pair is not an edge.
std::optional<std::size_t> lookup(const Graph& g, const VertexPair& p) {
  auto e = g.find_edge(p[0], p[1]);
  if (!e) return std::nullopt;
  return idx(*e);
}

CheckResult check_regime(const DecompositionCertificate& c) {
  CheckResult r{"regime", false, ""};
  const long long k = c.k;
  const long long gir = c.girth;
  const auto& tag = c.regime.tag;
  int delta = 0, t = 0;
  bool holds = false;
  if (tag == "G2K") {
    delta = 1, t = 1, holds = gir >= 2 * k;
  } else if (tag == "GK") {
    delta = 2, t = 2, holds = gir >= k;
  } else if (tag == "GK2") {
    delta = 4, t = 3, holds = 2 * gir >= k;
  } else if (tag == "GK4") {
    delta = 8, t = 5, holds = 4 * gir >= k;
  } else if (tag.starts_with("G2KC(") && tag.ends_with(")")) {
    int cval = 0;
    if (std::sscanf(tag.c_str(), "G2KC(%d)", &cval) != 1 || cval < 1) {
      r.detail = "unparseable tag " + tag;
      return r;
    }
    delta = cval;
    t = (3 * cval + 2 + 1) / 2;
    holds = gir * cval >= 2 * k;
  } else {
    r.detail = "unknown tag " + tag;
    return r;
  }
  if (c.regime.delta != delta || c.regime.t != t) {
    r.detail = tag + " requires delta=" + std::to_string(delta) +
               ", t=" + std::to_string(t);
    return r;
  }
  if (!holds) {
    r.detail = "girth condition of " + tag + " fails";
    return r;
  }
  if (c.claimed_bound != c.k + t) {
    r.detail = "claimed_bound is not k + t";
    return r;
  }
  r.pass = true;
  r.detail = tag + ", claimed " + std::to_string(c.claimed_bound);
  return r;
}

// Returns per-edge cycle owner (flat cycle number) or a failure detail.
CheckResult check_factorization(const Graph& g,
                                const DecompositionCertificate& c,
                                std::vector<int>& owner) {
  CheckResult r{"factorization", false, ""};
  const int n = g.vertex_count();
  owner.assign(g.edge_count(), -1);
  if (static_cast<int>(c.factors.size()) != c.k) {
    r.detail = "expected " + std::to_string(c.k) + " factors";
    return r;
  }
  int flat = 0;
  for (std::size_t f = 0; f < c.factors.size(); ++f) {
    std::vector<char> covered(n, 0);
    for (const auto& cyc : c.factors[f]) {
      if (cyc.size() < 3) {
        r.detail = "cycle shorter than 3 in factor " + std::to_string(f);
        return r;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Vertex a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (a < 0 || a >= n || covered[a]) {
          r.detail = "vertex " + std::to_string(a) +
                     " invalid or repeated in factor " + std::to_string(f);
          return r;
        }
        covered[a] = 1;
        auto e = lookup(g, {a, b});
        if (!e) {
          r.detail = pair_text(a, b) + " is not an edge";
          return r;
        }
        if (owner[*e] >= 0) {
          r.detail = "edge " + pair_text(a, b) + " used twice";
          return r;
        }
        owner[*e] = flat;
      }
      ++flat;
    }
    if (std::count(covered.begin(), covered.end(), 1) != n) {
      r.detail = "factor " + std::to_string(f) + " is not spanning";
      return r;
    }
  }
  if (std::count(owner.begin(), owner.end(), -1) != 0) {
    r.detail = "factors do not cover every edge";
    return r;
  }
  r.pass = true;
  r.detail = std::to_string(flat) + " cycles in " + std::to_string(c.k) + " factors";
  return r;
}

CheckResult check_transversal(const Graph& g, const DecompositionCertificate& c,
                              const std::vector<int>& owner, int cycle_total) {
  CheckResult r{"transversal", false, ""};
  const auto& t = c.transversal;
  std::vector<char> in_h(g.edge_count(), 0);
  std::vector<int> deg(g.vertex_count(), 0);
  std::vector<char> hit(cycle_total, 0);
  for (const auto& p : t.edges) {
    auto e = lookup(g, p);
    if (!e || in_h[*e]) {
      r.detail = pair_text(p[0], p[1]) + " missing from G or repeated";
      return r;
    }
    in_h[*e] = 1;
    ++deg[p[0]];
    ++deg[p[1]];
    if (owner[*e] >= 0) hit[owner[*e]] = 1;
  }
  for (int j = 0; j < cycle_total; ++j) {
    if (!hit[j]) {
      r.detail = "cycle " + std::to_string(j) + " (flat order) unhit";
      return r;
    }
  }
  const int true_max = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  if (true_max != t.max_degree) {
    r.detail = "recorded max degree " + std::to_string(t.max_degree) +
               " but H has " + std::to_string(true_max);
    return r;
  }
  if (t.delta < c.regime.delta) {
    r.detail = "transversal delta below the regime's delta";
    return r;
  }
  if (t.mode == "strict") {
    if (true_max > t.delta) {
      r.detail = "max degree " + std::to_string(true_max) + " > delta " +
                 std::to_string(t.delta);
      return r;
    }
  } else if (t.mode == "paper") {
    std::vector<int> charged(g.vertex_count(), 0);
    std::vector<char> seen(g.edge_count(), 0);
    for (const auto& ch : t.charge) {
      auto e = lookup(g, {ch[0], ch[1]});
      if (!e || !in_h[*e] || seen[*e] || (ch[2] != ch[0] && ch[2] != ch[1])) {
        r.detail = "bad charge entry on " + pair_text(ch[0], ch[1]);
        return r;
      }
      seen[*e] = 1;
      if (++charged[ch[2]] > t.delta) {
        r.detail = "vertex " + std::to_string(ch[2]) + " charged beyond delta";
        return r;
      }
    }
    if (t.charge.size() != t.edges.size()) {
      r.detail = "some edge of H carries no charge";
      return r;
    }
  } else {
    r.detail = "unknown mode " + t.mode;
    return r;
  }
  r.pass = true;
  r.detail = t.mode + ", |H|=" + std::to_string(t.edges.size()) +
             ", max degree " + std::to_string(true_max);
  return r;
}

bool forest_is_linear(int n, const std::vector<std::size_t>& edge_ids,
                      const Graph& g) {
  std::vector<int> deg(n, 0);
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (std::size_t e : edge_ids) {
    const Edge& ed = g.edges()[e];
    if (++deg[ed.u] > 2 || ++deg[ed.v] > 2) return false;
    const int a = find(ed.u), b = find(ed.v);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

}  // namespace

VerificationReport verify_certificate(const Graph& g,
                                      const DecompositionCertificate& c) {
  VerificationReport rep;
  {
    CheckResult r{"digest", false, ""};
    const std::string actual = graph_digest(g);
    if (c.digest_algorithm != kDigestAlgorithm) {
      r.detail = "unknown digest algorithm '" + c.digest_algorithm + "'";
    } else if (c.graph_digest != actual) {
      r.detail = "certificate is for graph " + c.graph_digest + ", got " + actual;
    } else if (c.n != g.vertex_count() || c.m != g.edge_count()) {
      r.detail = "n/m mismatch";
    } else {
      r.pass = true;
      r.detail = actual;
    }
    rep.checks.push_back(r);
  }
  {
    const bool ok = c.k >= 1 && is_regular(g, 2 * c.k);
    rep.checks.push_back({"regularity", ok,
                          ok ? std::to_string(2 * c.k) + "-regular"
                             : "graph is not " + std::to_string(2 * c.k) + "-regular"});
  }
  {
    const int actual = girth(g);
    rep.checks.push_back({"girth", actual == c.girth,
                          "computed " + format_girth(actual) + ", recorded " +
                              format_girth(c.girth)});
  }
  rep.checks.push_back(check_regime(c));

  std::vector<int> owner;
  CheckResult fact = check_factorization(g, c, owner);
  rep.checks.push_back(fact);
  if (fact.pass) {
    const int cycles = owner.empty() ? 0 : *std::max_element(owner.begin(), owner.end()) + 1;
    rep.checks.push_back(check_transversal(g, c, owner, cycles));
  } else {
    rep.checks.push_back({"transversal", false, "factorization invalid"});
  }

  std::vector<std::vector<std::size_t>> forest_edges(c.forests.size());
  {
    CheckResult r{"partition", true, ""};
    std::vector<int> where(g.edge_count(), -1);
    for (std::size_t f = 0; f < c.forests.size() && r.pass; ++f) {
      for (const auto& p : c.forests[f]) {
        auto e = lookup(g, p);
        if (!e) {
          r = {"partition", false, pair_text(p[0], p[1]) + " is not an edge"};
          break;
        }
        if (where[*e] >= 0) {
          r = {"partition", false,
               "edge " + pair_text(p[0], p[1]) + " in forests " +
                   std::to_string(where[*e]) + " and " + std::to_string(f)};
          break;
        }
        where[*e] = static_cast<int>(f);
        forest_edges[f].push_back(*e);
      }
    }
    if (r.pass) {
      const auto missing = std::count(where.begin(), where.end(), -1);
      if (missing > 0) {
        r = {"partition", false, std::to_string(missing) + " edges in no forest"};
      } else {
        r.detail = std::to_string(c.forests.size()) + " forests cover E(G)";
      }
    }
    rep.checks.push_back(r);
  }
  {
    CheckResult r{"linear_forests", true, "every forest is a union of paths"};
    for (std::size_t f = 0; f < forest_edges.size(); ++f) {
      if (!forest_is_linear(g.vertex_count(), forest_edges[f], g)) {
        r = {"linear_forests", false,
             "forest " + std::to_string(f) + " has a vertex of degree > 2 or a cycle"};
        break;
      }
    }
    rep.checks.push_back(r);
  }
  {
    const int count = static_cast<int>(c.forests.size());
    CheckResult r{"count", false, ""};
    if (c.achieved_count != count) {
      r.detail = "achieved_count " + std::to_string(c.achieved_count) +
                 " but " + std::to_string(count) + " forests listed";
    } else if (count > c.claimed_bound) {
      r.detail = "achieved " + std::to_string(count) + " exceeds claimed " +
                 std::to_string(c.claimed_bound);
    } else {
      r.pass = true;
      r.detail = std::to_string(count) + " <= " + std::to_string(c.claimed_bound);
    }
    rep.checks.push_back(r);
  }
  return rep;
}

namespace {

// Colors edges one at a time; each color class keeps degree <= 2 and no
// cycle. For a path-forest, a cycle would close exactly when the new edge
// joins the two ends of one path, so each color tracks path ends.
class ArboricitySearch {
 public:
  ArboricitySearch(const Graph& g, std::chrono::steady_clock::time_point deadline)
      : g_(g), deadline_(deadline) {
    // Edges in BFS discovery order.
    const int n = g.vertex_count();
    std::vector<char> seen_v(n, 0), seen_e(g.edge_count(), 0);
    for (Vertex r = 0; r < n; ++r) {
      if (seen_v[r]) continue;
      std::vector<Vertex> q{r};
      seen_v[r] = 1;
      for (std::size_t h = 0; h < q.size(); ++h) {
        auto nb = g.neighbors(q[h]);
        auto ie = g.incident_edges(q[h]);
        for (std::size_t i = 0; i < nb.size(); ++i) {
          if (!seen_e[idx(ie[i])]) {
            seen_e[idx(ie[i])] = 1;
            order_.push_back(idx(ie[i]));
          }
          if (!seen_v[nb[i]]) {
            seen_v[nb[i]] = 1;
            q.push_back(nb[i]);
          }
        }
      }
    }
  }

  // true: found; false: exhausted; sets timed_out_ when the clock ran out.
  bool try_colors(int colors) {
    const int n = g_.vertex_count();
    colors_ = colors;
    deg_.assign(static_cast<std::size_t>(colors) * n, 0);
    end_.resize(static_cast<std::size_t>(colors) * n);
    for (int c = 0; c < colors; ++c) {
      for (int v = 0; v < n; ++v) end_[c * n + v] = v;
    }
    return descend(0, 0);
  }

  bool timed_out() const { return timed_out_; }

 private:
  bool descend(std::size_t depth, int used) {
    if (depth == order_.size()) return true;
    if ((++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
    }
    if (timed_out_) return false;
    const int n = g_.vertex_count();
    const Edge& ed = g_.edges()[order_[depth]];
    for (int c = 0; c < std::min(used + 1, colors_); ++c) {
      int* deg = deg_.data() + static_cast<std::size_t>(c) * n;
      int* end = end_.data() + static_cast<std::size_t>(c) * n;
      if (deg[ed.u] == 2 || deg[ed.v] == 2 || end[ed.u] == ed.v) continue;
      const int a = end[ed.u], b = end[ed.v];
      const int old_a = end[a], old_b = end[b];
      end[a] = b;
      end[b] = a;
      ++deg[ed.u];
      ++deg[ed.v];
      if (descend(depth + 1, std::max(used, c + 1))) return true;
      --deg[ed.u];
      --deg[ed.v];
      end[b] = old_b;
      end[a] = old_a;
      if (timed_out_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<std::size_t> order_;
  int colors_ = 0;
  std::vector<int> deg_;
  std::vector<int> end_;
  long long nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

OracleResult oracle_la(const Graph& g, std::chrono::milliseconds budget) {
  if (g.edge_count() == 0) return {0, true};
  const int d = max_degree(g);
  int floor = (d + 1) / 2;
  if (is_regular(g, d)) floor = (d + 2) / 2;
  const auto deadline = std::chrono::steady_clock::now() + budget;
  ArboricitySearch search(g, deadline);
  for (int colors = floor;; ++colors) {
    if (search.try_colors(colors)) return {colors, true};
    if (search.timed_out()) return {colors, false};
  }
}

std::optional<std::vector<EdgeId>> oracle_transversal(const Graph& g,
                                                      const TwoFactorization& tf,
                                                      int delta) {
  const int m = g.edge_count();
  if (m > 24) throw std::invalid_argument("oracle_transversal: more than 24 edges");
  std::vector<std::uint32_t> cycle_masks;
  for (const Factor& f : tf.factors) {
    for (const Cycle& c : f.cycles) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        auto e = g.find_edge(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
        if (!e) throw std::invalid_argument("oracle_transversal: cycle step is not an edge");
        mask |= 1u << idx(*e);
      }
      cycle_masks.push_back(mask);
    }
  }
  std::vector<int> deg(g.vertex_count());
  for (int size = 0; size <= m; ++size) {
    if (size == 0) {
      if (cycle_masks.empty()) return std::vector<EdgeId>{};
      continue;
    }
    // Gosper's hack over all m-bit masks with `size` bits set.
    std::uint64_t mask = (1ULL << size) - 1;
    while (mask < (1ULL << m)) {
      const auto sub = static_cast<std::uint32_t>(mask);
      bool ok = std::all_of(cycle_masks.begin(), cycle_masks.end(),
                            [&](std::uint32_t cm) { return (cm & sub) != 0; });
      if (ok) {
        std::fill(deg.begin(), deg.end(), 0);
        for (int e = 0; e < m && ok; ++e) {
          if (!(sub >> e & 1u)) continue;
          const Edge& ed = g.edges()[e];
          ok = ++deg[ed.u] <= delta && ++deg[ed.v] <= delta;
        }
      }
      if (ok) {
        std::vector<EdgeId> out;
        for (int e = 0; e < m; ++e) {
          if (sub >> e & 1u) out.push_back(edge_id(e));
        }
        return out;
      }
      const std::uint64_t low = mask & -mask;
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

OracleCache::OracleCache(std::string path) : path_(std::move(path)) {
  if (!std::filesystem::exists(path_)) return;
  std::ifstream in(path_);
  const auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return;
  for (const auto& [digest, v] : j.items()) {
    entries_[digest] = {v.value("value", 0), v.value("exact", false)};
  }
}

std::optional<OracleResult> OracleCache::get(const std::string& digest) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(digest);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void OracleCache::put(const std::string& digest, OracleResult result) {
  std::lock_guard lock(mutex_);
  auto& slot = entries_[digest];
  // Keep an exact answer over a lower bound.
  if (!slot.exact) slot = result;
}

void OracleCache::save() const {
  std::lock_guard lock(mutex_);
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [digest, r] : entries_) {
    j[digest] = {{"value", r.value}, {"exact", r.exact}};
  }
  const std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path_);
}

}  // namespace linarb
