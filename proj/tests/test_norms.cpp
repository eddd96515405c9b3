#include <doctest.h>

#include <cmath>

#include "sse/errors.hpp"
#include "sse/norms.hpp"
#include "sse/rng.hpp"
#include "test_support.hpp"

using namespace sse;
namespace ts = testsupport;

TEST_CASE("expectation lp norms on a basis vector") {
  Eigen::VectorXd v(4);
  v << 1, 0, 0, 0;
  CHECK(lp_norm(v, 1) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(lp_norm(v, 2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(lp_norm(v, kInfinity) == 1.0);
  CHECK(lp_norm(Eigen::VectorXd::Ones(7), 3.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(lp_norm(v, 0.5), DomainError);
  CHECK_THROWS_AS(lp_norm(Eigen::VectorXd(0), 2.0), DomainError);
}

TEST_CASE("lp norms take absolute values and are monotone in p") {
  Rng rng(5);
  const double grid[] = {1.0, 4.0 / 3, 2.0, 3.0, 4.0, 8.0, kInfinity};
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::VectorXd v = rng.normal_vector(2 + int(rng.below(14)));
    CHECK(lp_norm(v, 2) == doctest::Approx(lp_norm((-v).eval(), 2)).epsilon(1e-15));
    for (std::size_t i = 0; i + 1 < std::size(grid); ++i)
      CHECK(lp_norm(v, grid[i]) <= lp_norm(v, grid[i + 1]) + 1e-12);
  }
}

TEST_CASE("inner product matches the expectation convention") {
  CHECK(inner(Eigen::VectorXd::Ones(6), Eigen::VectorXd::Ones(6)) == 1.0);
  Rng rng(6);
  const Eigen::VectorXd v = rng.normal_vector(9);
  CHECK(inner(v, v) == doctest::Approx(lp_norm(v, 2) * lp_norm(v, 2)).epsilon(1e-12));
  CHECK_THROWS_AS(inner(Eigen::VectorXd::Ones(3), Eigen::VectorXd::Ones(4)), DomainError);
}

TEST_CASE("holder duals") {
  CHECK(holder_dual(2.0) == 2.0);
  CHECK(holder_dual(4.0 / 3) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(holder_dual(1.0) == kInfinity);
  CHECK(holder_dual(kInfinity) == 1.0);
  CHECK(holder_dual(4.0) == doctest::Approx(4.0 / 3).epsilon(1e-15));
  CHECK_THROWS_AS(holder_dual(0.9), DomainError);
}

namespace {

Projector projector_for(const FamilySpec& spec, double lambda) {
  const Graph g = generate(spec);
  return top_eigenspace(eigendecompose(normalized_adjacency(g)), lambda);
}

}  // namespace

TEST_CASE("two_to_inf closed form on worked projectors") {
  CHECK(two_to_inf_norm(projector_for(FamilySpec::complete(4), 0.9)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(two_to_inf_norm(projector_for(FamilySpec::hypercube(3), 0.3)) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(two_to_inf_norm(projector_for(FamilySpec::clique_union(2, 3), 0.9)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("pq_norm_lower: averaging projector has norm 1 with constant witness") {
  const Projector p = projector_for(FamilySpec::hypercube(3), 0.5);
  REQUIRE(p.dimension == 1);
  const NormEstimate est = pq_norm_lower(p, 2.0, 4.0, 20, 3);
  CHECK(est.lower == doctest::Approx(1.0).epsilon(1e-9));
  // witness is a constant vector
  REQUIRE(est.witness.size() == 8);
  CHECK((est.witness.array() - est.witness[0]).abs().maxCoeff() <= 1e-9);
}

TEST_CASE("pq_norm_lower: clique union (2,inf) reaches sqrt(2) via a triangle") {
  const Projector p = projector_for(FamilySpec::clique_union(2, 3), 0.9);
  const NormEstimate est = pq_norm_lower(p, 2.0, kInfinity, 20, 3);
  CHECK(est.lower == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  // witness proportional to the indicator of one triangle
  REQUIRE(est.witness.size() == 6);
  const double top = est.witness.cwiseAbs().maxCoeff();
  int heavy = 0;
  for (int i = 0; i < 6; ++i)
    if (std::abs(est.witness[i]) > top * 1e-6) ++heavy;
  CHECK(heavy == 3);
}

TEST_CASE("pq_norm_lower: identity projector reaches sqrt(n) on a basis vector") {
  Projector identity;
  identity.threshold = -1.0;
  identity.matrix = Eigen::MatrixXd::Identity(8, 8);
  identity.dimension = 8;
  const NormEstimate est = pq_norm_lower(identity, 2.0, kInfinity, 5, 3);
  CHECK(est.lower == doctest::Approx(std::sqrt(8.0)).epsilon(1e-9));
  int support = 0;
  for (int i = 0; i < 8; ++i)
    if (est.witness[i] != 0.0) ++support;
  CHECK(support == 1);
}

TEST_CASE("pq_norm_lower: zero projector returns 0 with null witness") {
  Projector zero;
  zero.threshold = 1.0;
  zero.matrix = Eigen::MatrixXd::Zero(5, 5);
  zero.dimension = 0;
  const NormEstimate est = pq_norm_lower(zero, 2.0, 4.0, 3, 3);
  CHECK(est.lower == 0.0);
  CHECK(est.witness.size() == 0);
}

TEST_CASE("pq_norm_lower witness reproduces the bound and input checks fire") {
  const Projector p = projector_for(FamilySpec::hypercube(3), 0.3);
  const NormEstimate est = pq_norm_lower(p, 2.0, 4.0, 10, 9);
  CHECK(pq_ratio(p.matrix, est.witness, 2.0, 4.0) == doctest::Approx(est.lower).epsilon(1e-12));
  CHECK_THROWS_AS(pq_norm_lower(p.matrix, 0.5, 2.0, 5, 1), DomainError);
  CHECK_THROWS_AS(pq_norm_lower(p.matrix, 2.0, 2.0, 0, 1), DomainError);
}

TEST_CASE("pq_norm_upper: worked values and the supported regime") {
  const Projector avg = projector_for(FamilySpec::complete(4), 0.9);
  CHECK(pq_norm_upper(avg, 2.0, 4.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pq_norm_upper(avg, 4.0, kInfinity) == doctest::Approx(1.0).epsilon(1e-12));

  const Projector q3 = projector_for(FamilySpec::hypercube(3), 0.3);
  CHECK(pq_norm_upper(q3, 2.0, 4.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(pq_norm_upper(q3, 4.0, kInfinity) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(pq_norm_upper(q3, 2.0, kInfinity) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(pq_norm_upper(q3, 1.5, 4.0), DomainError);
  CHECK_THROWS_AS(pq_norm_upper(q3, 4.0, 2.0), DomainError);
}

TEST_CASE("sandwich: lower <= upper across the family") {
  for (const auto& [spec, g] : ts::test_family()) {
    CAPTURE(spec.id());
    const Spectrum s = eigendecompose(normalized_adjacency(g));
    for (double lambda : {0.3, 0.9}) {
      const Projector p = top_eigenspace(s, lambda);
      for (auto [pp, qq] : {std::pair{2.0, 4.0}, {2.0, kInfinity}, {4.0, kInfinity}}) {
        const NormEstimate est = estimate_pq_norm(p, pp, qq, 12, 21);
        REQUIRE(est.upper.has_value());
        CHECK(est.lower <= *est.upper + 1e-9);
      }
    }
  }
}

TEST_CASE("holder duality of search estimates on seeded symmetric matrices") {
  // slow search agreement; the acceptance suite runs the full version
  for (int id = 0; id < 3; ++id) {
    Rng rng = Rng::stream(31, id);
    const int n = 6 + 2 * id;
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = rng.normal();
    for (auto [p, q] : {std::pair{4.0 / 3, 2.0}, {1.0, 2.0}, {2.0, 4.0}}) {
      const NormEstimate a = pq_norm_lower(m, p, q, 200, 7);
      const NormEstimate b =
          pq_norm_lower(Eigen::MatrixXd(m.transpose()), holder_dual(q), holder_dual(p), 200, 8);
      CHECK(std::abs(a.lower - b.lower) / std::max(a.lower, b.lower) <= 1e-4);
    }
  }
}

TEST_CASE("projector-vs-subspace: samples never beat the bound, witness in range") {
  for (const auto& spec :
       {FamilySpec::complete(4), FamilySpec::hypercube(3), FamilySpec::clique_union(2, 3)}) {
    CAPTURE(spec.id());
    const Graph g = generate(spec);
    const Spectrum s = eigendecompose(normalized_adjacency(g));
    const Projector p = top_eigenspace(s, 0.3);
    for (auto [pp, qq] : {std::pair{2.0, 4.0}, {2.0, kInfinity}}) {
      const NormEstimate est = pq_norm_lower(p, pp, qq, 50, 13);
      double max_ratio = 0.0;
      for (int t = 0; t < 1000; ++t) {
        Rng rng = Rng::stream(99, t);
        const Eigen::VectorXd v = p.matrix * rng.normal_vector(g.n());
        const double den = lp_norm(v, pp);
        if (den < 1e-14) continue;
        max_ratio = std::max(max_ratio, lp_norm(v, qq) / den);
      }
      CHECK(max_ratio <= est.lower + 1e-9);
      const Eigen::VectorXd projected = p.matrix * est.witness;
      CHECK(std::sqrt((projected - est.witness).squaredNorm() / g.n()) <= 1e-8);
    }
  }
}
