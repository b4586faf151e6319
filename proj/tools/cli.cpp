#include "cli.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linarb/certificate.hpp"
#include "linarb/embed.hpp"
#include "linarb/factorize.hpp"
#include "linarb/flow.hpp"
#include "linarb/forest.hpp"
#include "linarb/generators.hpp"
#include "linarb/graph.hpp"
#include "linarb/sweep.hpp"
#include "linarb/transversal.hpp"
#include "linarb/verify.hpp"

namespace linarb {

namespace {

// Raised for well-formed invocations whose inputs are rejected.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

nlohmann::json read_json_file(const std::string& path) {
  const auto j = nlohmann::json::parse(read_text_file(path), nullptr, false);
  if (j.is_discarded()) throw DomainError(path + ": not valid JSON");
  return j;
}

int infer_k(const Graph& g) {
  const int d = max_degree(g);
  if (d == 0 || d % 2 != 0 || !is_regular(g, d)) {
    throw DomainError("graph is not 2k-regular; pass -k explicitly");
  }
  return d / 2;
}

nlohmann::ordered_json hint_to_json(const FactorizationHint& h) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["factors"] = h.factors;
  return j;
}

FactorizationHint hint_from_json(const nlohmann::json& j) {
  FactorizationHint h;
  try {
    h.factors = j.at("factors").get<decltype(h.factors)>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed factorization: ") + e.what());
  }
  return h;
}

struct GenArgs {
  std::string family;
  GenSpec spec;
  std::string out;
  std::string hint_out;
};

struct DecomposeArgs {
  std::string file;
  int k = 0;
  bool strict = false;
  long long budget_ms = kDefaultStrictBudget.count();
  int c_max = kDefaultCMax;
  std::string hint;
  std::string dump_network;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  GenSpec spec = a.spec;
  try {
    spec.family = parse_family(a.family);
  } catch (const std::exception& e) {
    throw DomainError(e.what());
  }
  if (spec.family == Family::random_regular) {
    auto sample = random_regular_with_girth(spec.n, spec.k, spec.g_min, spec.seed,
                                            spec.retries);
    emit(a.out, serialize_graph(sample.graph), out);
    if (!a.hint_out.empty()) write_text_file(a.hint_out, dump_json(hint_to_json(sample.hint)));
    return 0;
  }
  if (!a.hint_out.empty()) throw DomainError("--hint-out needs --family random_regular");
  emit(a.out, serialize_graph(generate(spec)), out);
  return 0;
}

int cmd_girth(const std::string& file, int cap, std::ostream& out) {
  out << format_girth(girth(read_graph_file(file), cap > 0 ? cap : kInfiniteGirth)) << '\n';
  return 0;
}

int cmd_factorize(const std::string& file, int k, const std::string& path,
                  std::ostream& out) {
  const Graph g = read_graph_file(file);
  if (k == 0) k = infer_k(g);
  if (!is_regular(g, 2 * k)) {
    throw DomainError("graph is not " + std::to_string(2 * k) + "-regular");
  }
  const TwoFactorization tf = two_factorize(g, k);
  const auto check = verify_two_factorization(g, tf);
  if (!check.ok) throw DomainError("factorization failed its check: " + check.diagnostic);
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["digest_algorithm"] = kDigestAlgorithm;
  j["graph_digest"] = graph_digest(g);
  j["k"] = k;
  j["factors"] = nlohmann::ordered_json::array();
  for (const Factor& f : tf.factors) {
    auto cycles = nlohmann::ordered_json::array();
    for (const Cycle& c : f.cycles) cycles.push_back(c.vertices);
    j["factors"].push_back(cycles);
  }
  emit(path, dump_json(j), out);
  if (!path.empty() && path != "-") {
    out << k << " factors, " << tf.cycle_count() << " cycles\n";
  }
  return 0;
}

int cmd_decompose(const DecomposeArgs& a, std::ostream& out) {
  const Graph g = read_graph_file(a.file);
  const int k = a.k > 0 ? a.k : infer_k(g);
  DecomposeOptions opts;
  opts.strict_only = a.strict;
  opts.time_budget = std::chrono::milliseconds(a.budget_ms);
  opts.c_max = a.c_max;
  if (!a.hint.empty()) opts.hint = hint_from_json(read_json_file(a.hint));
  const auto cert = decompose(g, k, opts);
  if (!a.dump_network.empty()) {
    const TwoFactorization tf =
        opts.hint ? factorization_from_cycles(g, opts.hint->factors) : two_factorize(g, k);
    write_text_file(a.dump_network,
                    dump_network(build_network(g, tf, cert.regime.delta).net));
  }
  emit(a.out, dump_json(certificate_to_json(cert)), out);
  out << "claimed ≤ " << cert.claimed_bound << ", achieved " << cert.achieved_count
      << ", verified " << (cert.verified ? "yes" : "no") << '\n';
  if (!cert.overshoot.empty()) out << "overshoot in " << cert.overshoot << '\n';
  return cert.verified ? 0 : 1;
}

int cmd_verify(const std::string& graph_file, const std::string& cert_file,
               std::ostream& out) {
  const Graph g = read_graph_file(graph_file);
  DecompositionCertificate cert;
  try {
    cert = certificate_from_json(read_json_file(cert_file));
  } catch (const CertificateFormatError& e) {
    out << "FAIL format: " << e.what() << "\ncertificate REJECTED\n";
    return 1;
  }
  const auto report = verify_certificate(g, cert);
  out << report.to_text();
  return report.overall() ? 0 : 1;
}

int cmd_oracle(const std::string& file, long long budget_ms, const std::string& cache_path,
               std::ostream& out) {
  const Graph g = read_graph_file(file);
  std::optional<OracleCache> cache;
  std::optional<OracleResult> result;
  const std::string digest = graph_digest(g);
  if (!cache_path.empty()) {
    cache.emplace(cache_path);
    result = cache->get(digest);
    if (result && !result->exact) result.reset();
  }
  if (!result) {
    result = oracle_la(g, std::chrono::milliseconds(budget_ms));
    if (cache) {
      cache->put(digest, *result);
      cache->save();
    }
  }
  if (result->exact) {
    out << result->value << '\n';
  } else {
    out << ">= " << result->value << " (budget exhausted)\n";
  }
  return 0;
}

int cmd_embed(const std::string& file, int delta, int g, int m_start, int doublings,
              const std::string& path, std::string sidecar, std::ostream& out) {
  const Graph h = read_graph_file(file);
  const auto eg = embed(h, delta, g, m_start > 0 ? std::optional<int>(m_start) : std::nullopt,
                        doublings);
  const auto check = verify_embedding(h, eg, delta, g);
  if (!check.ok) throw DomainError("embedding failed verification: " + check.diagnostics.front());
  emit(path, serialize_graph(eg.graph), out);
  if (sidecar.empty() && !path.empty() && path != "-") sidecar = path + ".json";
  if (!sidecar.empty()) write_text_file(sidecar, dump_json(embedding_sidecar(eg)));
  return 0;
}

int cmd_sweep(const std::string& spec_file, const std::string& preset, const std::string& path,
              int jobs, bool timing, std::ostream& out) {
  SweepSpec spec;
  try {
    spec = spec_file.empty() ? sweep_preset(preset.empty() ? "default" : preset)
                             : sweep_spec_from_json(read_json_file(spec_file));
  } catch (const SweepSpecError& e) {
    throw DomainError(e.what());
  }
  spec.timing = timing;
  const auto records = run_sweep(spec, jobs);
  emit(path, dump_json(sweep_to_json(records)), out);
  if (!path.empty() && path != "-") {
    int flagged = 0;
    for (const auto& r : records) flagged += r.flagged ? 1 : 0;
    out << records.size() << " records, " << flagged << " flagged\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified linear-forest decompositions of 2k-regular graphs", "linarb"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g_cmd = app.add_subcommand("gen", "Generate a graph in edge-list format");
  g_cmd->add_option("--family", gen.family,
                    "cycle|complete|complete_bipartite|circulant|random_regular|named")
      ->required();
  g_cmd->add_option("-n,--n", gen.spec.n, "Vertex count");
  g_cmd->add_option("--a", gen.spec.a, "First part size (complete_bipartite)");
  g_cmd->add_option("--b", gen.spec.b, "Second part size (complete_bipartite)");
  g_cmd->add_option("-k,--k", gen.spec.k, "Half the degree (random_regular)");
  g_cmd->add_option("--g-min", gen.spec.g_min, "Girth floor (random_regular)");
  g_cmd->add_option("--shifts", gen.spec.shifts, "Circulant shifts")->delimiter(',');
  g_cmd->add_option("--name", gen.spec.name, "petersen|k5|k7|k44");
  g_cmd->add_option("--seed", gen.spec.seed, "Random seed");
  g_cmd->add_option("--retries", gen.spec.retries, "Rejection-sampling budget");
  g_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");
  g_cmd->add_option("--hint-out", gen.hint_out, "Write the generating Hamilton cycles");

  std::string girth_file;
  int girth_cap = 0;
  auto* gi_cmd = app.add_subcommand("girth", "Print the girth");
  gi_cmd->add_option("file", girth_file)->required();
  gi_cmd->add_option("--cap", girth_cap, "Stop searching at this length");

  std::string fac_file, fac_out;
  int fac_k = 0;
  auto* f_cmd = app.add_subcommand("factorize", "Split a 2k-regular graph into 2-factors");
  f_cmd->add_option("file", fac_file)->required();
  f_cmd->add_option("-k", fac_k, "Half the degree (inferred when omitted)");
  f_cmd->add_option("-o,--out", fac_out, "Output JSON (default stdout)");

  DecomposeArgs dec;
  auto* d_cmd = app.add_subcommand("decompose", "Certified linear-forest decomposition");
  d_cmd->add_option("file", dec.file)->required();
  d_cmd->add_option("-k", dec.k, "Half the degree (inferred when omitted)");
  d_cmd->add_flag("--strict", dec.strict, "Skip the flow network; strict search only");
  d_cmd->add_option("--time-budget", dec.budget_ms, "Search budget per stage, ms")
      ->check(CLI::PositiveNumber);
  d_cmd->add_option("--c-max", dec.c_max, "Largest delta tried")->check(CLI::PositiveNumber);
  d_cmd->add_option("--hint", dec.hint, "2-factorization JSON to use");
  d_cmd->add_option("--dump-network", dec.dump_network, "Write the flow network");
  d_cmd->add_option("-o,--out", dec.out, "Certificate JSON (default stdout)");

  std::string ver_graph, ver_cert;
  auto* v_cmd = app.add_subcommand("verify", "Re-check a certificate against a graph");
  v_cmd->add_option("graph", ver_graph)->required();
  v_cmd->add_option("cert", ver_cert)->required();

  std::string or_file, or_cache;
  long long or_budget = kDefaultOracleBudget.count();
  auto* o_cmd = app.add_subcommand("oracle-la", "Exact linear arboricity of a small graph");
  o_cmd->add_option("file", or_file)->required();
  o_cmd->add_option("--budget", or_budget, "Time budget, ms")->check(CLI::PositiveNumber);
  o_cmd->add_option("--cache", or_cache, "JSON cache keyed by graph digest");

  std::string emb_file, emb_out, emb_sidecar;
  int emb_delta = 0, emb_girth = 0, emb_m = 0, emb_doublings = kDefaultEmbedDoublings;
  auto* e_cmd = app.add_subcommand("embed", "Regular supergraph with H induced");
  e_cmd->add_option("file", emb_file)->required();
  e_cmd->add_option("--delta", emb_delta, "Host degree")->required();
  e_cmd->add_option("--girth", emb_girth, "Girth target")->required();
  e_cmd->add_option("--m-start", emb_m, "Initial layer count (even)");
  e_cmd->add_option("--max-doublings", emb_doublings, "Layer-count doublings allowed");
  e_cmd->add_option("-o,--out", emb_out, "Edge-list output (default stdout)");
  e_cmd->add_option("--sidecar", emb_sidecar, "Layer/shift JSON (default OUT.json)");

  std::string sw_spec, sw_preset, sw_out;
  int sw_jobs = 0;
  bool sw_timing = false;
  auto* s_cmd = app.add_subcommand("sweep", "Run the girth-regime grid");
  auto* spec_opt = s_cmd->add_option("--spec", sw_spec, "Sweep spec JSON");
  s_cmd->add_option("--preset", sw_preset, "Named grid (default)")->excludes(spec_opt);
  s_cmd->add_option("-o,--out", sw_out, "Results JSON (default stdout)");
  s_cmd->add_option("--jobs", sw_jobs, "Instances run in parallel");
  s_cmd->add_flag("--timing", sw_timing, "Record wall-clock runtime_ms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*g_cmd) return cmd_gen(gen, out);
    if (*gi_cmd) return cmd_girth(girth_file, girth_cap, out);
    if (*f_cmd) return cmd_factorize(fac_file, fac_k, fac_out, out);
    if (*d_cmd) return cmd_decompose(dec, out);
    if (*v_cmd) return cmd_verify(ver_graph, ver_cert, out);
    if (*o_cmd) return cmd_oracle(or_file, or_budget, or_cache, out);
    if (*e_cmd) {
      return cmd_embed(emb_file, emb_delta, emb_girth, emb_m, emb_doublings, emb_out,
                       emb_sidecar, out);
    }
    if (*s_cmd) return cmd_sweep(sw_spec, sw_preset, sw_out, sw_jobs, sw_timing, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace linarb
