#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sse/expansion.hpp"
#include "sse/graph.hpp"
#include "sse/norms.hpp"
#include "sse/rounding.hpp"
#include "sse/spectral.hpp"

namespace sse {

enum class Verdict { holds, hypothesis_not_satisfied, violated, inconclusive };

std::string to_string(Verdict v);

/// How reports identify the graph they were computed on.
struct GraphRef {
  std::string id;
  int n = 0;
  int d = 0;

  static GraphRef of(const FamilySpec& spec, const Graph& g) {
    return {spec.id(), g.n(), g.degree()};
  }
};

/// Per-(p,q) outcome inside a theorem certificate.
struct PairOutcome {
  double p = 2.0;
  double q = 2.0;
  double norm_lower = 0.0;
  std::optional<double> norm_upper;
  Verdict verdict = Verdict::holds;
  std::optional<Eigen::VectorXd> witness;        // violated only
  std::optional<RoundingResult> rounding;        // round_witness on the witness
  std::string note;
};

/// Machine-checkable certificate for one claim of the equivalence.
/// Every numeric evidence field recomputes from the echoed inputs;
/// verdict = violated always carries a concrete witness.
struct Report {
  std::string claim;
  GraphRef graph;
  std::optional<double> delta;
  std::optional<double> epsilon;
  std::optional<double> lambda;
  std::optional<double> p;
  std::optional<double> q;
  std::uint64_t seed = 0;
  int restarts = 0;
  int trials = 0;
  std::optional<double> constant_c;

  Verdict verdict = Verdict::holds;

  std::optional<Rational> phi_delta;
  std::optional<VertexSet> witness_set;
  std::optional<double> norm_lower;
  std::optional<double> norm_upper;
  std::optional<double> bound_rhs;
  std::optional<Eigen::VectorXd> witness_vector;
  std::vector<std::string> vacuous_flags;
  std::vector<PairOutcome> pairs;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::pair<std::string, double>> tolerances;

  long long runtime_ms = 0;
};

/// Memoizes exact expansion profiles so a sweep can verify several
/// epsilon values against one enumeration.  Thread-safe; results are
/// exact, so sharing cannot change any verdict.
class ProfileCache {
 public:
  ExpansionProfile get_or_compute(const std::string& key,
                                  const std::function<ExpansionProfile()>& compute) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      const auto it = entries_.find(key);
      if (it != entries_.end()) return it->second;
    }
    ExpansionProfile profile = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.emplace(key, std::move(profile)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::string, ExpansionProfile> entries_;
};

struct VerifyOptions {
  int restarts = 50;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
  int threads = 1;
  double constant_c = 100.0;
  ProfileCache* profile_cache = nullptr;
};

/// Checks, over every enumerated nonempty S (all subsets for
/// n <= all_subsets_cap, else |S| <= small_set_cap), that
/// 1 - Phi(S) <= UB mu(S)^(1/p - 1/q) + eps + 1e-9 where
/// UB = pq_norm_upper at threshold lambda = eps.  Unsupported (p,q)
/// yields an inconclusive verdict, never a silent pass.
Report verify_easy_direction(const Graph& g, const GraphRef& ref, double eps, double p,
                             double q, int all_subsets_cap = 16, int small_set_cap = 6);

/// Hypothesis Phi(4 delta) >= 2 sqrt(eps) evaluated exactly; on success
/// certifies ||P_{1-eps}||_{p->q} < 1/sqrt(delta) per pair via the
/// closed-form upper bound, cross-checked against the search lower
/// bound.  A lower bound at or above 1/sqrt(delta) under a satisfied
/// hypothesis is reported violated, and the dual-side witness is pushed
/// through round_witness so the report carries an explicit small
/// non-expanding set alongside the offending vector.
Report verify_main(const Graph& g, const GraphRef& ref, double delta, double eps,
                   const std::vector<std::pair<double, double>>& pairs,
                   const VerifyOptions& opts = {});

/// High-expansion regime: hypothesis Phi(delta) > 1 - C eps^2 (flagged
/// vacuous when the right side is <= 0), eigenspace threshold sqrt(eps).
Report verify_high_expansion(const Graph& g, const GraphRef& ref, double delta, double eps,
                             const std::vector<std::pair<double, double>>& pairs,
                             const VerifyOptions& opts = {});

/// Witness-based estimates of ||M||_{p->q} and ||M^T||_{q*->p*} with a
/// shared restart budget; holds when they agree within 1e-4 relative,
/// inconclusive otherwise (ascent can miss the optimum, so estimate
/// disagreement is never reported as violated).
Report verify_duality(const Eigen::MatrixXd& m, const std::string& matrix_id, double p,
                      double q, int restarts, std::uint64_t seed);

/// Samples seeded vectors, projects into V_lambda, and checks
/// <v, Av> >= lambda ||v||_2^2 - 1e-9.
Report verify_lemma_inner_product(const Graph& g, const GraphRef& ref, double lambda,
                                  int trials, std::uint64_t seed);

/// Checks that sampled in-subspace ratios ||v||_q / ||v||_p never beat
/// the projector norm lower bound, and that the search witness lies in
/// range(P) and reproduces its ratio after projection.  Failures are
/// search shortfalls, reported inconclusive.
Report verify_projector_subspace(const Graph& g, const GraphRef& ref, double lambda,
                                 double p, double q, int trials, std::uint64_t seed,
                                 int restarts = 50);

/// Worst verdict wins: violated > inconclusive > hypothesis_not_satisfied > holds.
Verdict aggregate_verdict(const std::vector<Report>& reports);

/// The built-in instance battery for theorem sweeps: K_n (n <= 12),
/// Q_k (k <= 5), ten seeded random 3-regular graphs on 24 vertices,
/// and clique unions with mk <= 24.
std::vector<FamilySpec> battery_specs();

struct BatteryOptions {
  std::vector<double> deltas = {1.0 / 32, 1.0 / 16, 1.0 / 8};
  std::vector<double> epsilons = {0.05, 0.1, 0.2};
  std::vector<std::pair<double, double>> pairs = {{2.0, 4.0}, {2.0, kInfinity}};
  VerifyOptions verify;
  int workers = 1;
};

/// verify_main over battery x deltas x epsilons.  Instances may run on
/// several workers; reports come back ordered by (instance, delta,
/// epsilon) regardless of scheduling, and each (instance, delta) task
/// shares one exact profile across its epsilon values.
std::vector<Report> main_theorem_battery(const BatteryOptions& options);

}  // namespace sse
