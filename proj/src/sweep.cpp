#include "linarb/sweep.hpp"

#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "linarb/forest.hpp"
#include "linarb/generators.hpp"

namespace linarb {

namespace {

void validate(const SweepSpec& s) {
  if (s.seeds < 1) throw SweepSpecError("seeds must be positive");
  if (s.cells.empty()) throw SweepSpecError("grid has no cells");
  for (const auto& c : s.cells) {
    const std::string where = "cell (" + std::to_string(c.n) + "," +
                              std::to_string(c.k) + "," + std::to_string(c.g_min) + ")";
    if (c.k < 1) throw SweepSpecError(where + ": k must be positive");
    if (c.n < 2 * c.k + 1) throw SweepSpecError(where + ": n must exceed 2k");
    if (c.g_min < 3 || c.g_min > c.n) {
      throw SweepSpecError(where + ": g_min must lie in [3, n]");
    }
  }
}

}  // namespace

SweepSpec sweep_preset(std::string_view name) {
  SweepSpec s;
  if (name == "default") {
    s.cells = {{12, 1, 3}, {40, 1, 3}, {30, 2, 3}, {30, 2, 4},
               {40, 2, 4}, {30, 3, 3}, {40, 3, 3}};
    return s;
  }
  throw SweepSpecError("unknown preset '" + std::string(name) + "'");
}

SweepSpec sweep_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SweepSpecError("sweep spec must be a JSON object");
  if (j.value("version", 0) != kSweepVersion) {
    throw SweepSpecError("unsupported sweep spec version");
  }
  SweepSpec s;
  try {
    if (j.contains("preset")) {
      s = sweep_preset(j.at("preset").get<std::string>());
    } else {
      for (const auto& c : j.at("cells")) {
        s.cells.push_back({c.at("n").get<int>(), c.at("k").get<int>(),
                           c.value("g_min", 3)});
      }
    }
    s.seeds = j.value("seeds", s.seeds);
    s.seed_base = j.value("seed_base", s.seed_base);
    s.strict = j.value("strict", s.strict);
    s.time_budget = std::chrono::milliseconds(
        j.value("time_budget_ms", static_cast<long long>(s.time_budget.count())));
    s.c_max = j.value("c_max", s.c_max);
    s.retries = j.value("retries", s.retries);
  } catch (const nlohmann::json::exception& e) {
    throw SweepSpecError(std::string("malformed sweep spec: ") + e.what());
  }
  validate(s);
  return s;
}

SweepRecord run_instance(const SweepSpec& spec, const SweepCell& cell,
                         std::uint64_t seed) {
  SweepRecord r;
  r.cell = cell;
  r.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&] {
    if (spec.timing) {
      r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    }
    r.flagged = r.status != "ok" || (r.paper_feasible && !*r.paper_feasible);
    return r;
  };

  Graph g;
  try {
    g = random_regular_with_girth(cell.n, cell.k, cell.g_min, seed, spec.retries).graph;
  } catch (const GeneratorError& e) {
    r.status = "generation_failed";
    r.message = e.what();
    return finish();
  }
  const int gir = girth(g);
  if (gir != kInfiniteGirth) r.girth = gir;
  try {
    const RegimePlan plan = plan_regime(cell.k, gir, spec.c_max);
    r.regime_tag = plan.tag_name();
    r.delta = plan.delta;
    r.claimed_bound = plan.claimed_bound();
  } catch (const NoRegimeError& e) {
    r.status = "no_regime";
    r.message = e.what();
    return finish();
  }

  DecomposeOptions opts;
  opts.strict_only = spec.strict;
  opts.time_budget = spec.time_budget;
  opts.c_max = spec.c_max;
  try {
    const auto cert = decompose(g, cell.k, opts);
    r.achieved_count = cert.achieved_count;
    r.verified = cert.verified;
    if (!spec.strict) r.paper_feasible = cert.paper_flow_feasible;
    r.transversal_mode = cert.transversal.mode;
    r.delta_used = cert.transversal.delta;
    r.h_rung = cert.h_rung;
    if (!cert.verified) {
      r.status = "unverified";
    } else if (cert.achieved_count > cert.claimed_bound) {
      r.status = "overshoot";
      r.message = "overshoot in " + cert.overshoot;
    } else {
      r.status = "ok";
    }
  } catch (const DecomposeError& e) {
    r.status = "exhausted";
    r.message = e.what();
  } catch (const std::exception& e) {
    r.status = "error";
    r.message = e.what();
  }
  return finish();
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int jobs) {
  validate(spec);
  const long long total = static_cast<long long>(spec.cells.size()) * spec.seeds;
  std::vector<SweepRecord> out(total);
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long long i = 0; i < total; ++i) {
    const auto& cell = spec.cells[i / spec.seeds];
    out[i] = run_instance(spec, cell, spec.seed_base + i % spec.seeds);
  }
  (void)jobs;
  return out;
}

std::vector<SweepRecord> run_sweep_serial(const SweepSpec& spec) {
  validate(spec);
  std::vector<SweepRecord> out;
  for (const auto& cell : spec.cells) {
    for (int s = 0; s < spec.seeds; ++s) {
      out.push_back(run_instance(spec, cell, spec.seed_base + s));
    }
  }
  return out;
}

namespace {

template <class T>
nlohmann::ordered_json or_null(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json or_null(const std::string& s) {
  return s.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(s);
}

}  // namespace

nlohmann::ordered_json sweep_record_to_json(const SweepRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.cell.n;
  j["k"] = r.cell.k;
  j["g_min"] = r.cell.g_min;
  j["seed"] = r.seed;
  j["girth"] = or_null(r.girth);
  j["regime_tag"] = or_null(r.regime_tag);
  j["delta"] = or_null(r.delta);
  j["claimed_bound"] = or_null(r.claimed_bound);
  j["achieved_count"] = or_null(r.achieved_count);
  j["verified"] = r.verified;
  j["status"] = r.status;
  j["runtime_ms"] = r.runtime_ms;
  j["paper_feasible"] = or_null(r.paper_feasible);
  j["transversal_mode"] = or_null(r.transversal_mode);
  j["delta_used"] = or_null(r.delta_used);
  j["h_rung"] = or_null(r.h_rung);
  j["flagged"] = r.flagged;
  j["message"] = or_null(r.message);
  return j;
}

nlohmann::ordered_json sweep_to_json(const std::vector<SweepRecord>& records) {
  nlohmann::ordered_json j;
  j["version"] = kSweepVersion;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) j["records"].push_back(sweep_record_to_json(r));
  return j;
}

}  // namespace linarb
