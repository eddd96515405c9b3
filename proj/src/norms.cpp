#include "sse/norms.hpp"

#include <algorithm>

#include "sse/rng.hpp"

namespace sse {

double holder_dual(double p) {
  if (!(p >= 1.0)) throw DomainError("holder_dual requires p >= 1");
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return kInfinity;
  return p / (p - 1.0);
}

double two_to_inf_norm(const Projector& p) {
  const double max_diag = std::max(0.0, p.matrix.diagonal().maxCoeff());
  return std::sqrt(double(p.n()) * max_diag);
}

double pq_ratio(const Eigen::MatrixXd& m, const Eigen::VectorXd& v, double p, double q) {
  const double den = lp_norm(v, p);
  if (den == 0.0 || !std::isfinite(den)) return 0.0;
  return lp_norm((m * v).eval(), q) / den;
}

namespace {

// Gradient of log lp_norm(v, p), treating |.| one-sidedly at zeros.
// For p = inf this is the subgradient at the (first) max coordinate.
Eigen::VectorXd grad_log_lp(const Eigen::VectorXd& v, double p) {
  const Eigen::Index n = v.size();
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  if (std::isinf(p)) {
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v[imax] != 0.0) g[imax] = 1.0 / v[imax];
    return g;
  }
  const double norm = lp_norm(v, p);
  if (norm == 0.0) return g;
  const double scale = 1.0 / (double(n) * std::pow(norm, p));
  for (Eigen::Index i = 0; i < n; ++i) {
    if (v[i] == 0.0) continue;
    const double mag = std::pow(std::abs(v[i]), p - 1.0);
    g[i] = scale * (v[i] > 0 ? mag : -mag);
  }
  return g;
}

struct Ascent {
  const Eigen::MatrixXd& m;
  double p, q;

  double objective(const Eigen::VectorXd& v) const {
    const double num = lp_norm((m * v).eval(), q);
    const double den = lp_norm(v, p);
    if (num <= 0.0 || den <= 0.0) return -kInfinity;
    return std::log(num) - std::log(den);
  }

  // Maximize log||Mv||_q - log||v||_p by normalized gradient steps with
  // backtracking; stop when relative improvement < 1e-10 or after 10000
  // steps.  Any iterate is a certified lower bound, so convergence to
  // the global supremum is not required.
  Eigen::VectorXd run(Eigen::VectorXd v) const {
    constexpr int kMaxSteps = 10000;
    constexpr double kRelTol = 1e-10;
    double l2 = std::sqrt(v.squaredNorm());
    if (l2 == 0.0) return v;
    v /= l2;
    double f = objective(v);
    if (!std::isfinite(f)) return v;
    for (int step = 0; step < kMaxSteps; ++step) {
      const Eigen::VectorXd u = m * v;
      Eigen::VectorXd grad = m.transpose() * grad_log_lp(u, q) - grad_log_lp(v, p);
      const double glen = std::sqrt(grad.squaredNorm());
      if (glen < 1e-14) break;
      grad /= glen;
      double t = 1.0;
      double f_next = -kInfinity;
      Eigen::VectorXd v_next;
      for (int halving = 0; halving < 45; ++halving) {
        v_next = v + t * grad;
        f_next = objective(v_next);
        if (f_next > f) break;
        t *= 0.5;
      }
      if (!(f_next > f)) break;
      const double improvement = f_next - f;
      v = v_next / std::sqrt(v_next.squaredNorm());
      f = objective(v);
      if (improvement < kRelTol * std::max(1.0, std::abs(f))) break;
    }
    return v;
  }
};

struct Candidate {
  double ratio = 0.0;
  Eigen::VectorXd vector;
  std::string method;
};

void consider(Candidate& best, double ratio, const Eigen::VectorXd& v, const char* method) {
  if (std::isfinite(ratio) && ratio > best.ratio) {
    best.ratio = ratio;
    best.vector = v;
    best.method = method;
  }
}

// Scale so the first entry of largest magnitude becomes +1.
Eigen::VectorXd normalize_witness(const Eigen::VectorXd& v) {
  Eigen::Index imax = 0;
  const double m = v.cwiseAbs().maxCoeff(&imax);
  if (m == 0.0) return v;
  return v / v[imax];
}

}  // namespace

NormEstimate pq_norm_lower(const Eigen::MatrixXd& m, double p, double q, int restarts,
                           std::uint64_t seed) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw DomainError("pq_norm_lower requires p, q >= 1");
  if (restarts < 1) throw DomainError("pq_norm_lower requires restarts >= 1");
  const Eigen::Index n = m.rows();
  if (n == 0 || m.cols() != n) throw DomainError("operator must be square and nonempty");

  Candidate best;
  consider(best, pq_ratio(m, Eigen::VectorXd::Ones(n), p, q), Eigen::VectorXd::Ones(n),
           "ones");
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[i] = 1.0;
    consider(best, pq_ratio(m, e, p, q), e, "basis");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::VectorXd row = m.row(i).transpose();
    if (row.squaredNorm() == 0.0) continue;
    consider(best, pq_ratio(m, row, p, q), row, "row");
  }
  const Ascent ascent{m, p, q};
  for (int r = 0; r < restarts; ++r) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));
    const Eigen::VectorXd refined = ascent.run(rng.normal_vector(n));
    consider(best, pq_ratio(m, refined, p, q), refined, "ascent");
  }

  NormEstimate est;
  est.p = p;
  est.q = q;
  if (best.ratio <= 0.0) {
    est.lower = 0.0;
    est.lower_method = "zero_operator";
    return est;
  }
  est.witness = normalize_witness(best.vector);
  est.lower = pq_ratio(m, est.witness, p, q);
  est.lower_method = best.method;
  return est;
}

NormEstimate pq_norm_lower(const Projector& p_lambda, double p, double q, int restarts,
                           std::uint64_t seed) {
  if (p_lambda.dimension == 0) {
    NormEstimate est;
    est.p = p;
    est.q = q;
    est.lower = 0.0;
    est.lower_method = "zero_projector";
    return est;
  }
  NormEstimate est = pq_norm_lower(p_lambda.matrix, p, q, restarts, seed);
  if (est.witness.size() == 0) return est;
  // Prefer an in-range witness whenever projecting does not hurt.  For
  // p = 2 this can only increase the ratio (the orthogonal component
  // inflates the denominator and leaves P v unchanged).
  const Eigen::VectorXd projected = p_lambda.matrix * est.witness;
  const double projected_ratio = pq_ratio(p_lambda.matrix, projected, p, q);
  if (projected_ratio >= est.lower - 1e-12 && projected.cwiseAbs().maxCoeff() > 0.0) {
    est.witness = normalize_witness(projected);
    est.lower = pq_ratio(p_lambda.matrix, est.witness, p, q);
    est.lower_method += "+projected";
  }
  return est;
}

double pq_norm_upper(const Projector& p_lambda, double p, double q) {
  if (!(p >= 2.0)) throw DomainError("pq_norm_upper supports only p >= 2");
  if (!(q >= p)) throw DomainError("pq_norm_upper supports only q >= p");
  const double b = two_to_inf_norm(p_lambda);
  double bound = b;
  if (p == 2.0 && b > 0.0) {
    const double exponent = 1.0 - (std::isinf(q) ? 0.0 : 2.0 / q);
    bound = std::min(bound, std::pow(b, exponent));
  }
  return bound;
}

NormEstimate estimate_pq_norm(const Projector& p_lambda, double p, double q, int restarts,
                              std::uint64_t seed) {
  NormEstimate est = pq_norm_lower(p_lambda, p, q, restarts, seed);
  if (p >= 2.0 && q >= p) {
    const double b = two_to_inf_norm(p_lambda);
    double bound = b;
    est.upper_method = "two_to_inf";
    if (p == 2.0 && b > 0.0) {
      const double exponent = 1.0 - (std::isinf(q) ? 0.0 : 2.0 / q);
      const double interp = std::pow(b, exponent);
      if (interp < bound) {
        bound = interp;
        est.upper_method = "interpolation";
      }
    }
    est.upper = bound;
  }
  return est;
}

}  // namespace sse
