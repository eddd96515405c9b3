#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "sse/errors.hpp"
#include "sse/spectral.hpp"

namespace sse {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// L_p norm under expectation normalization: ((1/n) sum |v_i|^p)^(1/p);
/// max |v_i| for p = infinity.  Entries are taken in absolute value so
/// the norm is defined for arbitrary sign patterns.
template <typename Derived>
double lp_norm(const Eigen::MatrixBase<Derived>& v, double p) {
  if (!(p >= 1.0)) throw DomainError("lp_norm requires p >= 1");
  const Eigen::Index n = v.size();
  if (n < 1) throw DomainError("lp_norm of an empty vector");
  const auto a = v.derived().array().abs();
  if (std::isinf(p)) return a.maxCoeff();
  if (p == 1.0) return a.sum() / double(n);
  if (p == 2.0) return std::sqrt(a.square().sum() / double(n));
  const double m = a.maxCoeff();
  if (m == 0.0) return 0.0;
  // scale by the max entry so v_i^p cannot overflow for large p
  return m * std::pow((a / m).pow(p).sum() / double(n), 1.0 / p);
}

/// Expectation inner product (1/n) sum u_i v_i; <v,v> = lp_norm(v,2)^2.
template <typename DerivedU, typename DerivedV>
double inner(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedV>& v) {
  if (u.size() != v.size()) throw DomainError("inner product dimension mismatch");
  if (u.size() < 1) throw DomainError("inner product of empty vectors");
  return u.derived().dot(v.derived()) / double(u.size());
}

/// Holder dual p* with 1/p + 1/p* = 1; dual(1) = inf, dual(inf) = 1.
double holder_dual(double p);

/// ||P||_{2->inf} = sqrt(n * max_i P_ii), exact for orthogonal
/// projectors under expectation norms.
double two_to_inf_norm(const Projector& p);

/// ||Mv||_q / ||v||_p; 0 when v = 0.
double pq_ratio(const Eigen::MatrixXd& m, const Eigen::VectorXd& v, double p, double q);

/// Certified two-sided estimate of a p->q norm.  `lower` is always a
/// true bound (it is achieved by `witness`); `upper`, when present,
/// comes from a closed-form argument.
struct NormEstimate {
  double p = 2.0;
  double q = 2.0;
  double lower = 0.0;
  std::optional<double> upper;
  Eigen::VectorXd witness;  // empty for the zero operator
  std::string lower_method;
  std::string upper_method;
};

/// Best ratio ||Mv||_q / ||v||_p over the all-ones vector, all standard
/// basis vectors, all rows of M, and gradient-ascent refinements from
/// `restarts` seeded random starts.  Deterministic given the seed, and
/// each restart draws from its own (seed, index) stream so the result
/// does not depend on evaluation order.
NormEstimate pq_norm_lower(const Eigen::MatrixXd& m, double p, double q, int restarts,
                           std::uint64_t seed);

/// Projector overload: same search, but when projecting the witness
/// into range(P) does not lower its ratio, the projected witness is
/// returned, keeping witnesses inside the eigenspace they certify.
NormEstimate pq_norm_lower(const Projector& p_lambda, double p, double q, int restarts,
                           std::uint64_t seed);

/// Closed-form upper bound for projectors, valid for 2 <= p <= q <= inf:
/// min of ||P||_{2->inf} and, when p = 2, the Riesz-Thorin interpolation
/// bound ||P||_{2->inf}^(1-2/q) (using ||P||_{2->2} <= 1).
double pq_norm_upper(const Projector& p_lambda, double p, double q);

/// Lower and upper bound in one estimate; `upper` is absent when the
/// pair lies outside the closed-form regime.
NormEstimate estimate_pq_norm(const Projector& p_lambda, double p, double q, int restarts,
                              std::uint64_t seed);

}  // namespace sse
