#include "sse/theorems.hpp"

#include <atomic>
#include <chrono>
#include <thread>
#include <cmath>

#include "sse/errors.hpp"
#include "sse/rng.hpp"
#include "sse/subset_enum.hpp"

namespace sse {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::hypothesis_not_satisfied:
      return "hypothesis_not_satisfied";
    case Verdict::violated:
      return "violated";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

class Stopwatch {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int severity(Verdict v) {
  switch (v) {
    case Verdict::violated:
      return 3;
    case Verdict::inconclusive:
      return 2;
    case Verdict::hypothesis_not_satisfied:
      return 1;
    case Verdict::holds:
      return 0;
  }
  return 0;
}

Verdict worse(Verdict a, Verdict b) { return severity(a) >= severity(b) ? a : b; }

void note_theorem_range(Report& report, double delta, double eps) {
  if (!(delta > 0.0 && delta < 0.25)) report.vacuous_flags.push_back("delta_outside_theorem_range");
  if (!(eps > 0.0 && eps < 0.25)) report.vacuous_flags.push_back("epsilon_outside_theorem_range");
}

// Shared skeleton of the main and high-expansion certificates: exact
// hypothesis evaluation at `hypothesis_delta`, then per-pair norm
// certification against 1/sqrt(delta) at eigenspace threshold `lambda`.
Report verify_norm_theorem(const Graph& g, const GraphRef& ref, const std::string& claim,
                           double delta, double eps, double lambda,
                           double hypothesis_delta, double hypothesis_threshold,
                           bool hypothesis_strict,
                           const std::vector<std::pair<double, double>>& pairs,
                           const VerifyOptions& opts) {
  Stopwatch watch;
  Report report;
  report.claim = claim;
  report.graph = ref;
  report.delta = delta;
  report.epsilon = eps;
  report.lambda = lambda;
  report.seed = opts.seed;
  report.restarts = opts.restarts;
  report.tolerances = {{"norm_slack", 1e-9}, {"eigen_residual", 1e-9}};
  report.bound_rhs = 1.0 / std::sqrt(delta);
  report.metrics.emplace_back("hypothesis_threshold", hypothesis_threshold);

  bool hypothesis_ok = false;
  const int family_cap = scaled_set_size(std::min(hypothesis_delta, 1.0), g.n());
  if (family_cap < 1) {
    // no nonempty set has density <= hypothesis_delta: the infimum over
    // an empty family is +inf and the hypothesis holds vacuously
    report.vacuous_flags.push_back("empty_density_family");
    hypothesis_ok = true;
  } else {
    ExpansionProfile profile;
    try {
      const double profile_delta = std::min(hypothesis_delta, 1.0);
      const auto compute = [&] {
        return sse_profile(g, profile_delta, opts.budget, opts.threads);
      };
      profile = opts.profile_cache
                    ? opts.profile_cache->get_or_compute(
                          ref.id + "|" + std::to_string(profile_delta), compute)
                    : compute();
    } catch (const BudgetError&) {
      report.verdict = Verdict::inconclusive;
      report.vacuous_flags.push_back("enumeration_budget_exceeded");
      report.runtime_ms = watch.elapsed_ms();
      return report;
    }
    report.phi_delta = profile.value;
    report.witness_set = profile.witness;
    const double phi_value = profile.value.to_double();
    hypothesis_ok = hypothesis_strict ? (phi_value > hypothesis_threshold)
                                      : (phi_value >= hypothesis_threshold);
  }

  const Spectrum spectrum = eigendecompose(normalized_adjacency(g));
  const Projector projector = top_eigenspace(spectrum, lambda);
  report.metrics.emplace_back("eigenspace_dimension", projector.dimension);
  const double target = *report.bound_rhs;

  Verdict overall = hypothesis_ok ? Verdict::holds : Verdict::hypothesis_not_satisfied;
  std::uint64_t pair_index = 0;
  for (const auto& [p, q] : pairs) {
    PairOutcome outcome;
    outcome.p = p;
    outcome.q = q;
    if (!(p >= 2.0 && q > p)) {
      outcome.verdict = Verdict::inconclusive;
      outcome.note = "pair outside the supported regime 2 <= p < q";
      report.pairs.push_back(std::move(outcome));
      overall = worse(overall, Verdict::inconclusive);
      ++pair_index;
      continue;
    }
    const std::uint64_t pair_seed = splitmix64(opts.seed) + pair_index;
    NormEstimate estimate = estimate_pq_norm(projector, p, q, opts.restarts, pair_seed);
    outcome.norm_lower = estimate.lower;
    outcome.norm_upper = estimate.upper;
    if (!hypothesis_ok) {
      outcome.verdict = Verdict::hypothesis_not_satisfied;
    } else if (estimate.lower >= target) {
      // the theorem's strict inequality fails: executable contradiction
      outcome.verdict = Verdict::violated;
      outcome.witness = estimate.witness;
      NormEstimate dual = pq_norm_lower(projector, holder_dual(q), holder_dual(p),
                                        opts.restarts, splitmix64(pair_seed));
      if (dual.witness.size() > 0) {
        const Eigen::VectorXd in_range = projector.matrix * dual.witness;
        try {
          outcome.rounding = round_witness(g, in_range, delta, eps);
        } catch (const Error& e) {
          outcome.note = std::string("round_witness on the dual witness failed: ") + e.what();
        }
      }
    } else if (estimate.upper && *estimate.upper < target) {
      outcome.verdict = Verdict::holds;
    } else {
      outcome.verdict = Verdict::inconclusive;
      outcome.note = "upper bound does not certify the strict inequality";
    }
    overall = worse(overall, outcome.verdict);
    report.pairs.push_back(std::move(outcome));
    ++pair_index;
  }
  report.verdict = overall;
  report.runtime_ms = watch.elapsed_ms();
  return report;
}

}  // namespace

Report verify_easy_direction(const Graph& g, const GraphRef& ref, double eps, double p,
                             double q, int all_subsets_cap, int small_set_cap) {
  if (!(p >= 1.0 && q >= 1.0 && p < q))
    throw ParameterError("verify_easy_direction requires 1 <= p < q");
  Stopwatch watch;
  Report report;
  report.claim = "easy_direction";
  report.graph = ref;
  report.epsilon = eps;
  report.lambda = eps;  // the proposition thresholds the eigenspace at eps itself
  report.p = p;
  report.q = q;
  report.tolerances = {{"inequality_slack", 1e-9}};

  const Spectrum spectrum = eigendecompose(normalized_adjacency(g));
  const Projector projector = top_eigenspace(spectrum, eps);
  report.metrics.emplace_back("eigenspace_dimension", projector.dimension);

  double upper = 0.0;
  try {
    upper = pq_norm_upper(projector, p, q);
  } catch (const DomainError&) {
    report.verdict = Verdict::inconclusive;
    report.vacuous_flags.push_back("upper_bound_unsupported_pair");
    report.runtime_ms = watch.elapsed_ms();
    return report;
  }
  report.norm_upper = upper;

  const double exponent = (std::isinf(p) ? 0.0 : 1.0 / p) - (std::isinf(q) ? 0.0 : 1.0 / q);
  const int max_size = g.n() <= all_subsets_cap ? g.n() : small_set_cap;
  report.metrics.emplace_back("max_set_size", max_size);

  double worst_margin = -kInfinity;
  std::vector<int> worst_set;
  double worst_phi_bar = 0.0;
  for_each_subset(g, max_size, [&](const int* members, int size, std::int64_t cut) {
    const double phi_bar =
        1.0 - double(cut) / (double(g.degree()) * size);
    const double rhs = upper * std::pow(double(size) / g.n(), exponent) + eps;
    const double margin = phi_bar - rhs;
    if (margin > worst_margin) {
      worst_margin = margin;
      worst_set.assign(members, members + size);
      worst_phi_bar = phi_bar;
    }
  });
  report.metrics.emplace_back("worst_margin", worst_margin);
  report.metrics.emplace_back("worst_phi_bar", worst_phi_bar);
  report.witness_set = VertexSet::of(g.n(), worst_set);
  report.verdict = worst_margin > 1e-9 ? Verdict::violated : Verdict::holds;
  report.runtime_ms = watch.elapsed_ms();
  return report;
}

Report verify_main(const Graph& g, const GraphRef& ref, double delta, double eps,
                   const std::vector<std::pair<double, double>>& pairs,
                   const VerifyOptions& opts) {
  if (!(delta > 0.0 && delta < 1.0) || !(eps > 0.0 && eps < 1.0))
    throw ParameterError("verify_main requires delta, eps in (0, 1)");
  Report report = verify_norm_theorem(g, ref, "main_theorem", delta, eps,
                                      /*lambda=*/1.0 - eps,
                                      /*hypothesis_delta=*/4.0 * delta,
                                      /*hypothesis_threshold=*/2.0 * std::sqrt(eps),
                                      /*hypothesis_strict=*/false, pairs, opts);
  note_theorem_range(report, delta, eps);
  return report;
}

Report verify_high_expansion(const Graph& g, const GraphRef& ref, double delta, double eps,
                             const std::vector<std::pair<double, double>>& pairs,
                             const VerifyOptions& opts) {
  if (!(delta > 0.0 && delta < 1.0) || !(eps > 0.0 && eps < 1.0))
    throw ParameterError("verify_high_expansion requires delta, eps in (0, 1)");
  const double hypothesis_rhs = 1.0 - opts.constant_c * eps * eps;
  Report report = verify_norm_theorem(g, ref, "high_expansion", delta, eps,
                                      /*lambda=*/std::sqrt(eps),
                                      /*hypothesis_delta=*/delta,
                                      /*hypothesis_threshold=*/hypothesis_rhs,
                                      /*hypothesis_strict=*/true, pairs, opts);
  report.constant_c = opts.constant_c;
  if (hypothesis_rhs <= 0.0) report.vacuous_flags.push_back("hypothesis_bound_vacuous");
  return report;
}

Report verify_duality(const Eigen::MatrixXd& m, const std::string& matrix_id, double p,
                      double q, int restarts, std::uint64_t seed) {
  Stopwatch watch;
  Report report;
  report.claim = "holder_duality";
  report.graph = {matrix_id, static_cast<int>(m.rows()), 0};
  report.p = p;
  report.q = q;
  report.seed = seed;
  report.restarts = restarts;
  report.tolerances = {{"relative_agreement", 1e-4}};

  const NormEstimate primal = pq_norm_lower(m, p, q, restarts, seed);
  const NormEstimate dual = pq_norm_lower(Eigen::MatrixXd(m.transpose()), holder_dual(q),
                                          holder_dual(p), restarts, splitmix64(seed));
  report.norm_lower = primal.lower;
  report.metrics.emplace_back("dual_estimate", dual.lower);
  const double scale = std::max({std::abs(primal.lower), std::abs(dual.lower), 1e-300});
  const double gap = std::abs(primal.lower - dual.lower) / scale;
  report.metrics.emplace_back("relative_gap", gap);
  report.witness_vector = primal.witness;
  // estimates are lower bounds on both sides of an exact equality, so a
  // gap can only mean the search missed the optimum on one side
  report.verdict = gap <= 1e-4 ? Verdict::holds : Verdict::inconclusive;
  report.runtime_ms = watch.elapsed_ms();
  return report;
}

Report verify_lemma_inner_product(const Graph& g, const GraphRef& ref, double lambda,
                                  int trials, std::uint64_t seed) {
  if (trials < 1) throw ParameterError("verify_lemma_inner_product requires trials >= 1");
  Stopwatch watch;
  Report report;
  report.claim = "inner_product_lemma";
  report.graph = ref;
  report.lambda = lambda;
  report.seed = seed;
  report.trials = trials;
  report.tolerances = {{"slack", 1e-9}};

  const SymmetricOperator a = normalized_adjacency(g);
  const Spectrum spectrum = eigendecompose(a);
  const Projector projector = top_eigenspace(spectrum, lambda);
  report.metrics.emplace_back("eigenspace_dimension", projector.dimension);
  if (projector.dimension == 0) {
    report.verdict = Verdict::holds;
    report.vacuous_flags.push_back("eigenspace_dimension_zero");
    report.runtime_ms = watch.elapsed_ms();
    return report;
  }

  double min_slack = kInfinity;
  report.verdict = Verdict::holds;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    const Eigen::VectorXd v = projector.matrix * rng.normal_vector(g.n());
    const double l2sq = v.squaredNorm() / g.n();
    if (l2sq < 1e-28) continue;
    const double slack = inner(v, (a * v).eval()) - lambda * l2sq;
    min_slack = std::min(min_slack, slack);
    if (slack < -1e-9 && report.verdict == Verdict::holds) {
      report.verdict = Verdict::violated;
      report.witness_vector = v;
    }
  }
  report.metrics.emplace_back("min_slack", min_slack);
  report.runtime_ms = watch.elapsed_ms();
  return report;
}

Report verify_projector_subspace(const Graph& g, const GraphRef& ref, double lambda,
                                 double p, double q, int trials, std::uint64_t seed,
                                 int restarts) {
  if (trials < 1) throw ParameterError("verify_projector_subspace requires trials >= 1");
  Stopwatch watch;
  Report report;
  report.claim = "projector_subspace";
  report.graph = ref;
  report.lambda = lambda;
  report.p = p;
  report.q = q;
  report.seed = seed;
  report.trials = trials;
  report.restarts = restarts;
  report.tolerances = {{"ratio_slack", 1e-9}, {"range_distance", 1e-8}};

  const Spectrum spectrum = eigendecompose(normalized_adjacency(g));
  const Projector projector = top_eigenspace(spectrum, lambda);
  report.metrics.emplace_back("eigenspace_dimension", projector.dimension);
  if (projector.dimension == 0) {
    report.verdict = Verdict::holds;
    report.vacuous_flags.push_back("eigenspace_dimension_zero");
    report.runtime_ms = watch.elapsed_ms();
    return report;
  }

  const NormEstimate estimate = pq_norm_lower(projector, p, q, restarts, seed);
  report.norm_lower = estimate.lower;
  report.witness_vector = estimate.witness;

  double max_ratio = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    const Eigen::VectorXd v = projector.matrix * rng.normal_vector(g.n());
    const double den = lp_norm(v, p);
    if (den < 1e-14) continue;
    max_ratio = std::max(max_ratio, lp_norm(v, q) / den);
  }
  report.metrics.emplace_back("max_sampled_ratio", max_ratio);

  const Eigen::VectorXd projected = projector.matrix * estimate.witness;
  const double witness_distance =
      std::sqrt((estimate.witness - projected).squaredNorm() / g.n());
  report.metrics.emplace_back("witness_range_distance", witness_distance);
  double projected_ratio = 0.0;
  const double projected_den = lp_norm(projected, p);
  if (projected_den > 0.0) projected_ratio = lp_norm(projected, q) / projected_den;
  report.metrics.emplace_back("projected_witness_ratio", projected_ratio);

  const bool samples_ok = max_ratio <= estimate.lower + 1e-9;
  const bool witness_ok =
      witness_distance <= 1e-8 && std::abs(projected_ratio - estimate.lower) <= 1e-9;
  report.verdict = (samples_ok && witness_ok) ? Verdict::holds : Verdict::inconclusive;
  report.runtime_ms = watch.elapsed_ms();
  return report;
}

Verdict aggregate_verdict(const std::vector<Report>& reports) {
  Verdict v = Verdict::holds;
  for (const Report& r : reports) v = worse(v, r.verdict);
  return v;
}

std::vector<FamilySpec> battery_specs() {
  std::vector<FamilySpec> specs;
  for (int n = 4; n <= 12; ++n) specs.push_back(FamilySpec::complete(n));
  for (int k = 2; k <= 5; ++k) specs.push_back(FamilySpec::hypercube(k));
  for (std::uint64_t s = 1; s <= 10; ++s)
    specs.push_back(FamilySpec::random_regular(24, 3, s));
  for (auto [m, k] :
       {std::pair{2, 3}, {3, 4}, {2, 6}, {4, 3}, {2, 12}, {3, 8}, {4, 6}, {8, 3}})
    specs.push_back(FamilySpec::clique_union(m, k));
  return specs;
}

std::vector<Report> main_theorem_battery(const BatteryOptions& options) {
  struct Task {
    FamilySpec spec;
    double delta;
  };
  std::vector<Task> tasks;
  for (const FamilySpec& spec : battery_specs())
    for (double delta : options.deltas) tasks.push_back({spec, delta});

  std::vector<std::vector<Report>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
      const Task& task = tasks[t];
      const Graph g = generate(task.spec);
      const GraphRef ref = GraphRef::of(task.spec, g);
      ProfileCache cache;
      VerifyOptions opts = options.verify;
      opts.profile_cache = &cache;
      for (double eps : options.epsilons)
        results[t].push_back(verify_main(g, ref, task.delta, eps, options.pairs, opts));
    }
  };
  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<Report> reports;
  for (auto& group : results)
    for (auto& report : group) reports.push_back(std::move(report));
  return reports;
}

}  // namespace sse
