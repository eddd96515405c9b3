// sse: generate regular graphs, compute expansion profiles and
// eigenspace norms, run level-set rounding, and verify the small-set
// expansion / hypercontractivity claims with JSON or CSV certificates.
//
// Exit codes: 0 all verdicts holds/hypothesis_not_satisfied,
// 2 at least one violated, 3 inconclusive present (none violated),
// 1 usage or input error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sse/errors.hpp"
#include "sse/report_json.hpp"
#include "sse/rng.hpp"
#include "sse/theorems.hpp"

namespace {

using namespace sse;

double parse_real(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInfinity;
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const double num = std::stod(text.substr(0, slash));
      const double den = std::stod(text.substr(slash + 1));
      if (den == 0) throw ParameterError("zero denominator in '" + text + "'");
      return num / den;
    }
    std::size_t pos = 0;
    const double value = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ParameterError("cannot parse number '" + text + "' (use decimals, p/q or inf)");
  }
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ','))
    if (!item.empty()) out.push_back(parse_real(item));
  if (out.empty()) throw ParameterError("empty list '" + text + "'");
  return out;
}

std::vector<std::pair<double, double>> parse_pairs(const std::string& text) {
  std::vector<std::pair<double, double>> pairs;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParameterError("pair '" + item + "' must look like p:q");
    pairs.emplace_back(parse_real(item.substr(0, colon)), parse_real(item.substr(colon + 1)));
  }
  if (pairs.empty()) throw ParameterError("no pairs in '" + text + "'");
  return pairs;
}

void require_theorem_pairs(const std::vector<std::pair<double, double>>& pairs) {
  for (const auto& [p, q] : pairs)
    if (!(p >= 2.0 && q > p))
      throw ParameterError("pair " + std::to_string(p) + ":" + std::to_string(q) +
                           " outside the supported regime 2 <= p < q");
}

struct LoadedGraph {
  Graph graph;
  GraphRef ref;
};

LoadedGraph load_graph(const std::string& source) {
  std::string path = source;
  if (source.rfind("file:", 0) == 0) {
    path = source.substr(5);
  } else if (source.find(':') != std::string::npos) {
    const FamilySpec spec = FamilySpec::parse(source);
    Graph g = generate(spec);
    GraphRef ref = GraphRef::of(spec, g);
    return {std::move(g), std::move(ref)};
  }
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open graph file '" + path + "'");
  Graph g = load_edge_list(in);
  GraphRef ref{"file:" + path, g.n(), g.degree()};
  return {std::move(g), std::move(ref)};
}

Eigen::VectorXd load_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open vector file '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ParameterError("cannot parse '" + path + "' as JSON: " + std::string(e.what()));
  }
  const Json* array = &doc;
  if (doc.is_object() && doc.contains("vector")) array = &doc["vector"];
  if (!array->is_array()) throw ParameterError("'" + path + "' does not hold a JSON array");
  Eigen::VectorXd v(array->size());
  for (std::size_t i = 0; i < array->size(); ++i)
    v[static_cast<Eigen::Index>(i)] = (*array)[i].get<double>();
  return v;
}

Eigen::MatrixXd load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open matrix file '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ParameterError("cannot parse '" + path + "' as JSON: " + std::string(e.what()));
  }
  if (!doc.is_array() || doc.empty() || !doc[0].is_array())
    throw ParameterError("'" + path + "' does not hold a JSON matrix");
  const Eigen::Index rows = static_cast<Eigen::Index>(doc.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(doc[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(doc[i].size()) != cols)
      throw ParameterError("ragged rows in '" + path + "'");
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = doc[i][j].get<double>();
  }
  return m;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SSE_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return 1;
}

std::string format_scalar(const Json& value) {
  if (value.is_null()) return "-";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

void print_summary(std::ostream& out, const std::vector<Report>& reports) {
  const Json doc = reports_document(reports);
  for (const Json& row : doc["reports"]) {
    const Json& in = row["inputs"];
    const Json& ev = row["evidence"];
    out << row["claim"].get<std::string>() << " graph=" << in["graph"]["id"].get<std::string>()
        << " delta=" << format_scalar(in["delta"]) << " eps=" << format_scalar(in["epsilon"])
        << " p=" << format_scalar(in["p"]) << " q=" << format_scalar(in["q"])
        << " verdict=" << row["verdict"].get<std::string>();
    if (!ev["phi_delta"].is_null()) out << " phi_delta=" << format_scalar(ev["phi_delta"]);
    if (!ev["norm_lower"].is_null()) out << " norm_lower=" << format_scalar(ev["norm_lower"]);
    if (!ev["norm_upper"].is_null()) out << " norm_upper=" << format_scalar(ev["norm_upper"]);
    if (!ev["bound_rhs"].is_null()) out << " bound_rhs=" << format_scalar(ev["bound_rhs"]);
    if (!ev["vacuous_flags"].empty()) {
      out << " flags=";
      for (std::size_t i = 0; i < ev["vacuous_flags"].size(); ++i)
        out << (i ? ";" : "") << ev["vacuous_flags"][i].get<std::string>();
    }
    out << '\n';
  }
}

void write_output(const std::vector<Report>& reports, const std::string& out_path,
                  const std::string& format) {
  if (out_path.empty()) return;
  std::string chosen = format;
  if (chosen.empty())
    chosen = out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".csv" ? "csv"
                                                                                   : "json";
  std::ofstream out(out_path);
  if (!out) throw ParameterError("cannot write '" + out_path + "'");
  if (chosen == "csv")
    out << reports_csv(reports);
  else
    out << dump_document(reports_document(reports));
}

int exit_code_for(const std::vector<Report>& reports) {
  switch (aggregate_verdict(reports)) {
    case Verdict::violated:
      return 2;
    case Verdict::inconclusive:
      return 3;
    default:
      return 0;
  }
}

void write_json(const Json& doc, const std::string& out_path) {
  if (out_path.empty()) return;
  std::ofstream out(out_path);
  if (!out) throw ParameterError("cannot write '" + out_path + "'");
  out << dump_document(doc);
}

// ---- subcommand drivers --------------------------------------------

int run_gen(const std::string& family, int n, int k, int m, int d, std::uint64_t seed,
            bool seed_set, const std::string& out_path) {
  FamilySpec spec;
  if (family == "complete") {
    spec = FamilySpec::complete(n);
  } else if (family == "cycle") {
    spec = FamilySpec::cycle(n);
  } else if (family == "hypercube") {
    spec = FamilySpec::hypercube(k);
  } else if (family == "clique_union") {
    spec = FamilySpec::clique_union(m, k);
  } else if (family == "random_regular") {
    if (!seed_set) throw ParameterError("random_regular requires --seed");
    spec = FamilySpec::random_regular(n, d, seed);
  } else {
    throw ParameterError("unknown family '" + family + "'");
  }
  const Graph g = generate(spec);
  const std::string text = write_edge_list(g);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParameterError("cannot write '" + out_path + "'");
    out << text;
    std::cout << spec.id() << ": n=" << g.n() << " d=" << g.degree()
              << " m=" << g.edge_count() << " -> " << out_path << '\n';
  }
  return 0;
}

int run_analyze(const std::string& source, double lambda, const std::string& out_path) {
  const LoadedGraph loaded = load_graph(source);
  const Spectrum spectrum = eigendecompose(normalized_adjacency(loaded.graph));
  const Projector projector = top_eigenspace(spectrum, lambda);
  Json doc;
  Json& a = doc["analysis"];
  a["graph"] = {{"id", loaded.ref.id}, {"n", loaded.ref.n}, {"d", loaded.ref.d}};
  a["edges"] = loaded.graph.edge_count();
  a["lambda"] = lambda;
  a["eigenvalue_max"] = json_real(spectrum.eigenvalues.maxCoeff());
  a["eigenvalue_min"] = json_real(spectrum.eigenvalues.minCoeff());
  a["eigenvalue_second"] = spectrum.n() > 1 ? json_real(spectrum.eigenvalues[1]) : Json();
  a["residual"] = json_real(spectrum.residual);
  a["eigenspace_dimension"] = projector.dimension;
  a["two_to_inf"] = json_real(two_to_inf_norm(projector));
  a["max_diagonal"] = json_real(projector.matrix.diagonal().maxCoeff());
  write_json(doc, out_path);
  std::cout << "graph " << loaded.ref.id << ": n=" << loaded.ref.n << " d=" << loaded.ref.d
            << " edges=" << loaded.graph.edge_count() << '\n'
            << "lambda=" << lambda << " dim(V_lambda)=" << projector.dimension
            << " two_to_inf=" << format_scalar(a["two_to_inf"])
            << " max_diag=" << format_scalar(a["max_diagonal"]) << '\n'
            << "eigenvalues: max=" << format_scalar(a["eigenvalue_max"])
            << " second=" << format_scalar(a["eigenvalue_second"])
            << " min=" << format_scalar(a["eigenvalue_min"]) << '\n';
  return 0;
}

int run_norm(const std::string& source, double lambda, const std::string& p_text,
             const std::string& q_text, int restarts, std::uint64_t seed,
             const std::string& out_path) {
  const double p = parse_real(p_text), q = parse_real(q_text);
  const LoadedGraph loaded = load_graph(source);
  const Projector projector =
      top_eigenspace(eigendecompose(normalized_adjacency(loaded.graph)), lambda);
  const NormEstimate est = estimate_pq_norm(projector, p, q, restarts, seed);
  Json doc;
  Json& e = doc["norm_estimate"];
  e["graph"] = {{"id", loaded.ref.id}, {"n", loaded.ref.n}, {"d", loaded.ref.d}};
  e["lambda"] = lambda;
  e["p"] = json_real(p);
  e["q"] = json_real(q);
  e["restarts"] = restarts;
  e["seed"] = seed;
  e["eigenspace_dimension"] = projector.dimension;
  e["lower"] = json_real(est.lower);
  e["upper"] = est.upper ? json_real(*est.upper) : Json();
  e["lower_method"] = est.lower_method;
  e["upper_method"] = est.upper_method.empty() ? Json() : Json(est.upper_method);
  e["witness"] = to_json(est.witness);
  write_json(doc, out_path);
  std::cout << "norm " << loaded.ref.id << " lambda=" << lambda
            << " p=" << format_scalar(e["p"]) << " q=" << format_scalar(e["q"])
            << " dim=" << projector.dimension << " lower=" << format_scalar(e["lower"])
            << " upper=" << format_scalar(e["upper"]) << '\n';
  return 0;
}

int run_profile(const std::string& source, const std::string& delta_text, bool heuristic,
                std::uint64_t budget, std::uint64_t seed, int threads,
                const std::string& out_path) {
  const double delta = parse_real(delta_text);
  const LoadedGraph loaded = load_graph(source);
  const ExpansionProfile profile =
      heuristic ? sse_profile_heuristic(loaded.graph, delta, budget, seed)
                : sse_profile(loaded.graph, delta, budget, resolve_threads(threads));
  Json doc;
  Json& p = doc["profile"];
  p["graph"] = {{"id", loaded.ref.id}, {"n", loaded.ref.n}, {"d", loaded.ref.d}};
  p["delta"] = delta;
  p["mode"] = profile.mode == ExpansionProfile::Mode::exact ? "exact" : "sampled";
  p["value"] = profile.value.str();
  p["value_approx"] = json_real(profile.value.to_double());
  p["witness"] = profile.witness.members;
  p["sets_examined"] = profile.sets_examined;
  write_json(doc, out_path);
  std::cout << "profile " << loaded.ref.id << " delta=" << delta
            << " mode=" << p["mode"].get<std::string>() << " value=" << profile.value.str()
            << " witness=" << Json(profile.witness.members).dump()
            << " sets_examined=" << profile.sets_examined << '\n';
  return 0;
}

int run_round(const std::string& source, const std::string& witness_path,
              const std::string& delta_text, const std::string& eps_text,
              const std::string& regime, double constant_c, const std::string& out_path) {
  const double delta = parse_real(delta_text);
  const LoadedGraph loaded = load_graph(source);
  const Eigen::VectorXd w = load_vector(witness_path);
  RoundingResult result;
  if (regime == "witness") {
    result = round_witness(loaded.graph, w, delta, parse_real(eps_text));
  } else if (regime == "low") {
    result = sweep_low(loaded.graph, w, delta);
  } else if (regime == "high") {
    result = sweep_high(loaded.graph, w, delta, constant_c);
  } else {
    throw ParameterError("unknown regime '" + regime + "' (witness|low|high)");
  }
  Json doc;
  doc["rounding"] = to_json(result);
  doc["rounding"]["graph"] = {{"id", loaded.ref.id}, {"n", loaded.ref.n}, {"d", loaded.ref.d}};
  doc["rounding"]["delta"] = delta;
  doc["rounding"]["regime"] = regime;
  write_json(doc, out_path);
  if (result.found) {
    std::cout << "rounding found S=" << Json(result.set.members).dump()
              << " phi=" << result.phi_value.str() << " mu=" << result.mu.str()
              << " bound=" << format_scalar(to_json(result)["bound"]);
    if (result.certified) std::cout << " certified=" << (*result.certified ? "yes" : "no");
    std::cout << '\n';
  } else {
    std::cout << "rounding found no qualifying level set\n";
  }
  return 0;
}

int run_sweep(const std::vector<double>& deltas, const std::vector<double>& epsilons,
              const std::vector<std::pair<double, double>>& pairs, std::uint64_t seed,
              int restarts, std::uint64_t budget, int threads, const std::string& out_path,
              const std::string& format) {
  require_theorem_pairs(pairs);
  BatteryOptions options;
  options.deltas = deltas;
  options.epsilons = epsilons;
  options.pairs = pairs;
  options.verify.restarts = restarts;
  options.verify.seed = seed;
  options.verify.budget = budget;
  options.workers = threads;
  const std::vector<Report> reports = main_theorem_battery(options);
  print_summary(std::cout, reports);
  write_output(reports, out_path, format);
  return exit_code_for(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical certificates for small-set expansion vs. top-eigenspace "
               "hypercontractivity on regular graphs"};
  app.require_subcommand(1);

  std::string graph_source, out_path, format, witness_path, matrix_path;
  std::string family, delta_text = "0.25", eps_text = "0.1", p_text = "2", q_text = "4";
  std::string pairs_text = "2:4,2:inf", deltas_text = "1/32,1/16,1/8",
              epsilons_text = "0.05,0.1,0.2", regime = "witness";
  double lambda = 0.5, constant_c = 100.0;
  int n = 0, k = 0, m = 0, d = 0, restarts = 50, trials = 1000, threads = 0;
  int random_sym = 0, count = 1;
  std::uint64_t seed = 1, budget = kDefaultEnumerationBudget;
  std::uint64_t sweep_budget = 20'000'000'000ULL;  // admits Q_5 at 4*delta = 1/2
  bool heuristic = false;

  auto* gen = app.add_subcommand("gen", "generate a graph family member as an edge list");
  gen->add_option("--family", family, "complete|cycle|hypercube|clique_union|random_regular")
      ->required();
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--k", k, "hypercube dimension / clique size");
  gen->add_option("--m", m, "number of cliques");
  gen->add_option("--d", d, "degree (random_regular)");
  auto* gen_seed = gen->add_option("--seed", seed, "generation seed");
  gen->add_option("--out", out_path, "output edge-list path (stdout when empty)");

  auto* analyze = app.add_subcommand("analyze", "spectrum and eigenspace summary");
  analyze->add_option("--graph", graph_source, "edge-list path or family spec")->required();
  analyze->add_option("--lambda", lambda, "eigenspace threshold")->required();
  analyze->add_option("--out", out_path, "write JSON here");

  auto* norm = app.add_subcommand("norm", "p->q norm bounds for an eigenspace projector");
  norm->add_option("--graph", graph_source)->required();
  norm->add_option("--lambda", lambda)->required();
  norm->add_option("--p", p_text)->required();
  norm->add_option("--q", q_text)->required();
  norm->add_option("--restarts", restarts);
  norm->add_option("--seed", seed);
  norm->add_option("--out", out_path);

  auto* profile = app.add_subcommand("profile", "expansion profile Phi(delta)");
  profile->add_option("--graph", graph_source)->required();
  profile->add_option("--delta", delta_text)->required();
  profile->add_flag("--heuristic", heuristic, "sampled upper bound instead of enumeration");
  profile->add_option("--budget", budget, "work budget");
  profile->add_option("--seed", seed);
  profile->add_option("--threads", threads, "0 = SSE_THREADS or 1");
  profile->add_option("--out", out_path);

  auto* round = app.add_subcommand("round", "level-set rounding of a witness vector");
  round->add_option("--graph", graph_source)->required();
  round->add_option("--witness", witness_path, "JSON array vector")->required();
  round->add_option("--delta", delta_text)->required();
  round->add_option("--eps", eps_text);
  round->add_option("--regime", regime, "witness|low|high");
  round->add_option("--C", constant_c, "high-expansion constant");
  round->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "verify a claim numerically");
  verify->require_subcommand(1);
  auto* easy = verify->add_subcommand("easy", "non-expansion vs norm bound over all sets");
  easy->add_option("--graph", graph_source)->required();
  easy->add_option("--eps", eps_text)->required();
  easy->add_option("--p", p_text);
  easy->add_option("--q", q_text);
  easy->add_option("--out", out_path);
  easy->add_option("--format", format);

  auto* main_cmd = verify->add_subcommand("main", "hard direction certificate");
  main_cmd->add_option("--graph", graph_source)->required();
  main_cmd->add_option("--delta", delta_text)->required();
  main_cmd->add_option("--eps", eps_text)->required();
  main_cmd->add_option("--pairs", pairs_text, "comma list of p:q");
  main_cmd->add_option("--seed", seed);
  main_cmd->add_option("--restarts", restarts);
  main_cmd->add_option("--budget", budget);
  main_cmd->add_option("--threads", threads);
  main_cmd->add_option("--out", out_path);
  main_cmd->add_option("--format", format, "json|csv");

  auto* high = verify->add_subcommand("high", "high-expansion regime certificate");
  high->add_option("--graph", graph_source)->required();
  high->add_option("--delta", delta_text)->required();
  high->add_option("--eps", eps_text)->required();
  high->add_option("--pairs", pairs_text);
  high->add_option("--C", constant_c, "hypothesis constant (default 100)");
  high->add_option("--seed", seed);
  high->add_option("--restarts", restarts);
  high->add_option("--budget", budget);
  high->add_option("--threads", threads);
  high->add_option("--out", out_path);
  high->add_option("--format", format);

  auto* duality = verify->add_subcommand("duality", "p->q vs transpose dual estimates");
  auto* duality_graph = duality->add_option("--graph", graph_source,
                                            "projector source (with --lambda)");
  duality->add_option("--lambda", lambda);
  auto* duality_matrix =
      duality->add_option("--matrix", matrix_path, "JSON matrix file")->excludes(duality_graph);
  duality->add_option("--random-sym", random_sym, "seeded random symmetric dimension")
      ->excludes(duality_graph)
      ->excludes(duality_matrix);
  duality->add_option("--count", count, "number of random matrices");
  duality->add_option("--p", p_text)->required();
  duality->add_option("--q", q_text)->required();
  duality->add_option("--restarts", restarts);
  duality->add_option("--seed", seed);
  duality->add_option("--out", out_path);
  duality->add_option("--format", format);

  auto* lemmas =
      verify->add_subcommand("lemmas", "inner-product and projector-subspace lemmas");
  lemmas->add_option("--graph", graph_source)->required();
  lemmas->add_option("--lambda", lambda)->required();
  lemmas->add_option("--p", p_text);
  lemmas->add_option("--q", q_text);
  lemmas->add_option("--trials", trials);
  lemmas->add_option("--restarts", restarts);
  lemmas->add_option("--seed", seed);
  lemmas->add_option("--out", out_path);
  lemmas->add_option("--format", format);

  auto* sweep = app.add_subcommand("sweep", "built-in family battery for the main theorem");
  sweep->add_option("--deltas", deltas_text);
  sweep->add_option("--epsilons", epsilons_text);
  sweep->add_option("--pairs", pairs_text);
  sweep->add_option("--seed", seed);
  sweep->add_option("--restarts", restarts);
  sweep->add_option("--budget", sweep_budget);
  sweep->add_option("--threads", threads);
  sweep->add_option("--out", out_path);
  sweep->add_option("--format", format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen) return run_gen(family, n, k, m, d, seed, gen_seed->count() > 0, out_path);
    if (*analyze) return run_analyze(graph_source, lambda, out_path);
    if (*norm) return run_norm(graph_source, lambda, p_text, q_text, restarts, seed, out_path);
    if (*profile)
      return run_profile(graph_source, delta_text, heuristic, budget, seed, threads, out_path);
    if (*round)
      return run_round(graph_source, witness_path, delta_text, eps_text, regime, constant_c,
                       out_path);
    if (*easy) {
      const LoadedGraph loaded = load_graph(graph_source);
      const std::vector<Report> reports = {
          verify_easy_direction(loaded.graph, loaded.ref, parse_real(eps_text),
                                parse_real(p_text), parse_real(q_text))};
      print_summary(std::cout, reports);
      write_output(reports, out_path, format);
      return exit_code_for(reports);
    }
    if (*main_cmd || *high) {
      const auto pairs = parse_pairs(pairs_text);
      require_theorem_pairs(pairs);
      const LoadedGraph loaded = load_graph(graph_source);
      VerifyOptions opts;
      opts.restarts = restarts;
      opts.seed = seed;
      opts.budget = budget;
      opts.threads = resolve_threads(threads);
      opts.constant_c = constant_c;
      const double delta = parse_real(delta_text), eps = parse_real(eps_text);
      const std::vector<Report> reports = {
          *main_cmd
              ? verify_main(loaded.graph, loaded.ref, delta, eps, pairs, opts)
              : verify_high_expansion(loaded.graph, loaded.ref, delta, eps, pairs, opts)};
      print_summary(std::cout, reports);
      write_output(reports, out_path, format);
      return exit_code_for(reports);
    }
    if (*duality) {
      const double p = parse_real(p_text), q = parse_real(q_text);
      std::vector<Report> reports;
      if (random_sym > 0) {
        for (int i = 0; i < count; ++i) {
          Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
          Eigen::MatrixXd mat(random_sym, random_sym);
          for (int r = 0; r < random_sym; ++r)
            for (int c = 0; c <= r; ++c) mat(r, c) = mat(c, r) = rng.normal();
          reports.push_back(verify_duality(
              mat,
              "random_sym:" + std::to_string(random_sym) + ",seed=" + std::to_string(seed) +
                  ",index=" + std::to_string(i),
              p, q, restarts, splitmix64(seed) + static_cast<std::uint64_t>(i)));
        }
      } else if (!matrix_path.empty()) {
        reports.push_back(verify_duality(load_matrix(matrix_path), "file:" + matrix_path, p, q,
                                         restarts, seed));
      } else if (!graph_source.empty()) {
        const LoadedGraph loaded = load_graph(graph_source);
        const Projector projector =
            top_eigenspace(eigendecompose(normalized_adjacency(loaded.graph)), lambda);
        reports.push_back(verify_duality(projector.matrix,
                                         loaded.ref.id + "|P_" + std::to_string(lambda), p, q,
                                         restarts, seed));
      } else {
        throw ParameterError("duality needs --graph, --matrix or --random-sym");
      }
      print_summary(std::cout, reports);
      write_output(reports, out_path, format);
      return exit_code_for(reports);
    }
    if (*lemmas) {
      const LoadedGraph loaded = load_graph(graph_source);
      const std::vector<Report> reports = {
          verify_lemma_inner_product(loaded.graph, loaded.ref, lambda, trials, seed),
          verify_projector_subspace(loaded.graph, loaded.ref, lambda, parse_real(p_text),
                                    parse_real(q_text), trials, seed, restarts)};
      print_summary(std::cout, reports);
      write_output(reports, out_path, format);
      return exit_code_for(reports);
    }
    if (*sweep)
      return run_sweep(parse_real_list(deltas_text), parse_real_list(epsilons_text),
                       parse_pairs(pairs_text), seed, restarts, sweep_budget,
                       resolve_threads(threads), out_path, format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
