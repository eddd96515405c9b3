#pragma once

#include <optional>

#include <Eigen/Dense>

#include "sse/expansion.hpp"
#include "sse/graph.hpp"
#include "sse/rational.hpp"

namespace sse {

/// Outcome of a level-set sweep.  When found, `set` is the level set
/// {i : score_i > threshold} for the recorded threshold, and `phi`/`mu`
/// recompute exactly from it.
struct RoundingResult {
  bool found = false;
  VertexSet set;
  Rational phi_value;
  Rational mu;
  std::optional<double> bound;  // lemma right-hand side; may be +inf
  bool bound_vacuous = false;   // bound <= 0 or >= 1 carries no content
  std::optional<double> threshold;
  std::optional<bool> certified;  // round_witness only: Phi(S) < 2 sqrt(eps)
};

/// Right-hand side of the low-expansion Local Cheeger Bound,
/// sqrt(1 - <v,Av>^2 / ||v||_2^4) / (1 - ||v||_1^2 / (delta ||v||_2^2)),
/// evaluated with expectation norms.  Returns +inf when the denominator
/// is <= 0; the radicand is clamped into [0,1] within 1e-12.
double lcb_bound_low(const Graph& g, const Eigen::VectorXd& v, double delta);

/// Sweeps the level sets of v^2: vertices sorted by v_i^2 descending,
/// ties inseparable, each threshold an observed score value (so every
/// examined set is a proper nonempty subset).  Among level sets of
/// density <= delta returns the one minimizing Phi; found = false when
/// none qualifies.  `bound` is lcb_bound_low(g, v, delta).
RoundingResult sweep_low(const Graph& g, const Eigen::VectorXd& v, double delta);

/// High-expansion variant: sweeps level sets of (Az + z)^2.  The lemma
/// hypothesis ||Az||_2^2 >= eps ||z||_2^2 is tightest at
/// eps = ||Az||_2^2 / ||z||_2^2, giving bound = 1 - C eps^2; it is
/// reported even when vacuous.
RoundingResult sweep_high(const Graph& g, const Eigen::VectorXd& z, double delta,
                          double constant_c = 100.0);

/// Witness-to-set pipeline: requires the collision condition
/// delta ||w||_2^2 >= ||w||_1^2, normalizes w to sum_i |z_i| = 1, sweeps
/// level sets of z^2 with density cap 4 delta, and marks whether the
/// returned set certifies Phi(S) < 2 sqrt(epsilon).
RoundingResult round_witness(const Graph& g, const Eigen::VectorXd& w, double delta,
                             double epsilon);

/// The exact disjunction of the low-expansion lemma: some level set S
/// of v^2 (here including S = V, threshold below the minimum score)
/// has mu(S) > delta or Phi(S) <= lcb_bound_low(g, v, delta) + slack.
bool lcb_disjunction_holds(const Graph& g, const Eigen::VectorXd& v, double delta,
                           double slack = 1e-9);

}  // namespace sse
