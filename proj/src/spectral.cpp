#include "sse/spectral.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "sse/errors.hpp"

namespace sse {

SymmetricOperator normalized_adjacency(const Graph& g) {
  const int n = g.n();
  const double w = 1.0 / g.degree();
  SymmetricOperator a = SymmetricOperator::Zero(n, n);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) a(v, u) = w;
  return a;
}

Spectrum eigendecompose(const SymmetricOperator& a) {
  const Eigen::Index n = a.rows();
  if (n == 0 || a.cols() != n) throw DomainError("operator must be square and nonempty");
  if ((a - a.transpose()).cwiseAbs().maxCoeff() != 0.0)
    throw DomainError("operator is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw NumericalError("symmetric eigensolver did not converge",
                         std::numeric_limits<double>::quiet_NaN());

  // Eigen sorts ascending with unit-l2 columns; flip to descending and
  // rescale by sqrt(n) for the expectation convention.
  Spectrum s;
  s.eigenvalues = solver.eigenvalues().reverse();
  s.eigenvectors = solver.eigenvectors().rowwise().reverse() * std::sqrt(double(n));

  double residual = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::VectorXd r =
        a * s.eigenvectors.col(i) - s.eigenvalues[i] * s.eigenvectors.col(i);
    residual = std::max(residual, std::sqrt(r.squaredNorm() / double(n)));
  }
  s.residual = residual;
  if (!(residual <= 1e-9))
    throw NumericalError("eigendecomposition residual too large", residual);
  return s;
}

Projector top_eigenspace(const Spectrum& spectrum, double lambda) {
  if (!(lambda >= -1.0 && lambda <= 1.0))
    throw DomainError("eigenspace threshold must lie in [-1, 1]");
  const int n = spectrum.n();
  Projector p;
  p.threshold = lambda;
  p.matrix = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (spectrum.eigenvalues[i] < lambda - kEigenvalueTieTolerance) break;
    p.matrix.noalias() +=
        spectrum.eigenvectors.col(i) * spectrum.eigenvectors.col(i).transpose() / double(n);
    ++p.dimension;
  }
  return p;
}

}  // namespace sse
