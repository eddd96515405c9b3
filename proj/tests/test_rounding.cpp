#include <doctest.h>

#include <cmath>

#include "sse/errors.hpp"
#include "sse/norms.hpp"
#include "sse/rng.hpp"
#include "sse/rounding.hpp"
#include "sse/spectral.hpp"
#include "test_support.hpp"

using namespace sse;
namespace ts = testsupport;

TEST_CASE("lcb_bound_low: eigenvector numerators vanish") {
  const Graph cu = generate(FamilySpec::clique_union(2, 3));
  const Eigen::VectorXd triangle = ts::indicator(6, {0, 1, 2});
  // Av = v, so the numerator is 0; denominator 1 - (1/4)/(1/2) = 1/2
  CHECK(lcb_bound_low(cu, triangle, 1.0) == doctest::Approx(0.0).epsilon(1e-12));

  const Graph k4 = generate(FamilySpec::complete(4));
  CHECK(lcb_bound_low(k4, Eigen::VectorXd::Ones(4), 2.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(lcb_bound_low(k4, Eigen::VectorXd::Zero(4), 1.0), DomainError);
}

TEST_CASE("lcb_bound_low: synthetic Rayleigh 0.99 with collision term 1/4") {
  // v = a * ones + chi_1 on Q_3 tunes <v,Av>/||v||_2^2 to exactly 0.99
  const Graph q3 = generate(FamilySpec::hypercube(3));
  const double a = std::sqrt((0.99 - 1.0 / 3) / 0.01);
  const Eigen::VectorXd v =
      a * Eigen::VectorXd::Ones(8) + ts::hypercube_character(3, 0b001);
  const SymmetricOperator adj = normalized_adjacency(q3);
  const double l2sq = v.squaredNorm() / 8.0;
  CHECK(inner(v, (adj * v).eval()) / l2sq == doctest::Approx(0.99).epsilon(1e-12));
  const double l1 = lp_norm(v, 1);
  const double delta = 4.0 * l1 * l1 / l2sq;  // makes ||v||_1^2/(delta ||v||_2^2) = 1/4
  const double oracle = std::sqrt(1.0 - 0.99 * 0.99) / (1.0 - 0.25);
  CHECK(oracle == doctest::Approx(0.18808981).epsilon(1e-6));
  CHECK(lcb_bound_low(q3, v, delta) == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("lcb_bound_low returns +inf when the denominator dies") {
  const Graph k4 = generate(FamilySpec::complete(4));
  // constants: ||v||_1^2 = ||v||_2^2, so delta < 1 kills the denominator
  CHECK(std::isinf(lcb_bound_low(k4, Eigen::VectorXd::Ones(4), 0.5)));
}

TEST_CASE("sweep_low on worked examples") {
  const Graph cu = generate(FamilySpec::clique_union(2, 3));
  const RoundingResult triangle = sweep_low(cu, ts::indicator(6, {0, 1, 2}), 0.5);
  REQUIRE(triangle.found);
  CHECK(triangle.set.members == std::vector<int>{0, 1, 2});
  CHECK(triangle.phi_value == Rational(0));
  CHECK(triangle.mu == Rational(1, 2));

  const Graph q3 = generate(FamilySpec::hypercube(3));
  std::vector<int> half;
  for (int x = 0; x < 8; ++x)
    if (x & 1) half.push_back(x);
  const RoundingResult hc = sweep_low(q3, ts::indicator(8, half), 0.5);
  REQUIRE(hc.found);
  CHECK(hc.set.members == half);
  CHECK(hc.phi_value == Rational(1, 3));

  const RoundingResult flat = sweep_low(q3, Eigen::VectorXd::Ones(8), 0.5);
  CHECK(!flat.found);

  CHECK_THROWS_AS(sweep_low(q3, Eigen::VectorXd::Zero(8), 0.5), DomainError);
}

TEST_CASE("sweep results are level sets of the recorded threshold") {
  for (const auto& [spec, g] : ts::test_family()) {
    CAPTURE(spec.id());
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::VectorXd v = rng.normal_vector(g.n());
      const RoundingResult r = sweep_low(g, v, 0.5);
      if (!r.found) continue;
      REQUIRE(r.threshold.has_value());
      std::vector<int> from_threshold;
      for (int i = 0; i < g.n(); ++i)
        if (v[i] * v[i] > *r.threshold) from_threshold.push_back(i);
      CHECK(from_threshold == r.set.members);
      CHECK(phi(g, r.set) == r.phi_value);
      CHECK(density(g, r.set) == r.mu);
    }
  }
}

TEST_CASE("sweep_low is invariant under scaling of the score vector") {
  const Graph q4 = generate(FamilySpec::hypercube(4));
  Rng rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    Eigen::VectorXd v = rng.normal_vector(16);
    if (trial % 3 == 0) v = ts::indicator(16, {1, 2, 3, 9}) + 0.5 * v;
    const RoundingResult base = sweep_low(q4, v, 0.4);
    for (double c : {-2.0, 0.5, 3.0}) {
      const RoundingResult scaled = sweep_low(q4, (c * v).eval(), 0.4);
      CHECK(scaled.found == base.found);
      if (base.found) CHECK(scaled.set.members == base.set.members);
    }
  }
}

TEST_CASE("sweep_high on worked examples") {
  const Graph cu = generate(FamilySpec::clique_union(2, 3));
  const RoundingResult triangle = sweep_high(cu, ts::indicator(6, {0, 1, 2}), 0.5);
  REQUIRE(triangle.found);
  CHECK(triangle.set.members == std::vector<int>{0, 1, 2});
  CHECK(triangle.phi_value == Rational(0));
  // Az = z so eps = 1 and the default C = 100 makes the bound -99
  CHECK(*triangle.bound == doctest::Approx(-99.0).epsilon(1e-9));
  CHECK(triangle.bound_vacuous);

  CHECK(!sweep_high(cu, Eigen::VectorXd::Ones(6), 0.5).found);

  // characters have constant magnitude, so (Az+z)^2 has a single level
  const Graph q3 = generate(FamilySpec::hypercube(3));
  CHECK(!sweep_high(q3, ts::hypercube_character(3, 0b001), 0.5).found);

  CHECK_THROWS_AS(sweep_high(q3, Eigen::VectorXd::Zero(8), 0.5), DomainError);
}

TEST_CASE("sweep_high honors the constant override") {
  const Graph cu = generate(FamilySpec::clique_union(2, 3));
  const RoundingResult r = sweep_high(cu, ts::indicator(6, {0, 1, 2}), 0.5, 0.5);
  CHECK(*r.bound == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(!r.bound_vacuous);
}

TEST_CASE("round_witness pipeline on the contrapositive examples") {
  const Graph cu = generate(FamilySpec::clique_union(2, 3));
  const RoundingResult r = round_witness(cu, ts::indicator(6, {0, 1, 2}), 0.5, 0.01);
  REQUIRE(r.found);
  CHECK(r.set.members == std::vector<int>{0, 1, 2});
  CHECK(r.phi_value == Rational(0));
  CHECK(r.mu == Rational(1, 2));
  REQUIRE(r.certified.has_value());
  CHECK(*r.certified);  // 0 < 2 sqrt(0.01) = 0.2

  const Graph q3 = generate(FamilySpec::hypercube(3));
  std::vector<int> half;
  for (int x = 0; x < 8; ++x)
    if (x & 1) half.push_back(x);
  const RoundingResult rh = round_witness(q3, ts::indicator(8, half), 0.5, 0.25);
  REQUIRE(rh.found);
  CHECK(rh.set.members == half);
  CHECK(rh.phi_value == Rational(1, 3));
  CHECK(*rh.certified);  // 1/3 < 2 sqrt(0.25) = 1
}

TEST_CASE("round_witness enforces the collision condition") {
  const Graph k4 = generate(FamilySpec::complete(4));
  // constants: ||w||_1^2 / (delta ||w||_2^2) = 2 > 1
  CHECK_THROWS_WITH_AS(round_witness(k4, Eigen::VectorXd::Ones(4), 0.5, 0.01),
                       doctest::Contains("2.0"), PreconditionError);
}

TEST_CASE("round_witness returns only sets of density at most 4 delta") {
  for (const auto& [spec, g] : ts::test_family()) {
    CAPTURE(spec.id());
    const Spectrum s = eigendecompose(normalized_adjacency(g));
    const Projector p = top_eigenspace(s, 0.5);
    for (int t = 0; t < 50; ++t) {
      Rng rng = Rng::stream(57, t);
      const Eigen::VectorXd w = p.matrix * rng.normal_vector(g.n());
      if (w.cwiseAbs().maxCoeff() < 1e-12) continue;
      const double delta = 0.2;
      const double l1 = lp_norm(w, 1);
      const double l2sq = w.squaredNorm() / g.n();
      if (l1 * l1 > delta * l2sq) continue;  // collision condition required
      const RoundingResult r = round_witness(g, w, delta, 0.1);
      if (r.found) CHECK(r.mu.to_double() <= 4 * delta + 1e-12);
    }
  }
}

TEST_CASE("local Cheeger disjunction holds for spectrally concentrated vectors") {
  // 500 seeded vectors per (graph, eps, delta) configuration
  for (const auto& [spec, g] : ts::test_family()) {
    if (g.n() > 16) continue;  // the acceptance suite covers the full battery
    CAPTURE(spec.id());
    const Spectrum s = eigendecompose(normalized_adjacency(g));
    for (double eps : {0.1, 0.25}) {
      const Projector p = top_eigenspace(s, 1.0 - eps);
      for (double delta : {0.25, 0.5}) {
        for (int t = 0; t < 500; ++t) {
          Rng rng = Rng::stream(201, t);
          Eigen::VectorXd v = p.matrix * rng.normal_vector(g.n());
          if (v.squaredNorm() == 0.0) continue;
          v /= std::sqrt(v.squaredNorm() / g.n());
          CHECK(lcb_disjunction_holds(g, v, delta));
        }
      }
    }
  }
}
