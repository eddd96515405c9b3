#pragma once

#include <Eigen/Dense>

#include "sse/graph.hpp"

namespace sse {

/// Dense symmetric operator on R^n.  Normalized adjacency matrices,
/// projectors and the random test matrices all use this type.
using SymmetricOperator = Eigen::MatrixXd;

/// A_ij = 1/d on edges, 0 elsewhere; row-stochastic and symmetric.
SymmetricOperator normalized_adjacency(const Graph& g);

/// Full eigendecomposition under the expectation inner product
/// <u,v> = (1/n) sum u_i v_i.  Eigenvalues sorted descending;
/// eigenvector columns are expectation-orthonormal, so entries are
/// O(1) (hypercube characters come out +-1-valued) and
/// A = (1/n) sum_i lambda_i u_i u_i^T.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;  // column i pairs with eigenvalues[i]
  double residual;               // max_i ||A u_i - lambda_i u_i||_2

  int n() const { return static_cast<int>(eigenvalues.size()); }
};

Spectrum eigendecompose(const SymmetricOperator& a);

/// Orthogonal projector P_lambda onto the direct sum of eigenspaces
/// with eigenvalue >= lambda.  Eigenvalues within 1e-9 below lambda are
/// included so floating-point splitting of exact multiplicities cannot
/// change the subspace.
struct Projector {
  double threshold = 0.0;
  Eigen::MatrixXd matrix;
  int dimension = 0;

  int n() const { return static_cast<int>(matrix.rows()); }
};

/// Slack under the inclusion threshold, shared with tests.
inline constexpr double kEigenvalueTieTolerance = 1e-9;

Projector top_eigenspace(const Spectrum& spectrum, double lambda);

}  // namespace sse
