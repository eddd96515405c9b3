#include <doctest.h>

#include <set>

#include "sse/errors.hpp"
#include "sse/expansion.hpp"
#include "sse/graph.hpp"
#include "test_support.hpp"

using namespace sse;

TEST_CASE("complete graph K_4") {
  const Graph g = generate(FamilySpec::complete(4));
  CHECK(g.n() == 4);
  CHECK(g.degree() == 3);
  CHECK(g.edge_count() == 6);
}

TEST_CASE("hypercube Q_3 has 8 vertices, degree 3, 12 edges") {
  const Graph g = generate(FamilySpec::hypercube(3));
  CHECK(g.n() == 8);
  CHECK(g.degree() == 3);
  CHECK(g.edge_count() == 12);  // k * 2^(k-1)
  CHECK(g.has_edge(0b000, 0b001));
  CHECK(!g.has_edge(0b000, 0b011));
}

TEST_CASE("clique_union(2,3) is two disjoint triangles") {
  const Graph g = generate(FamilySpec::clique_union(2, 3));
  CHECK(g.n() == 6);
  CHECK(g.degree() == 2);
  CHECK(g.edge_count() == 6);
  // no edge crosses the two components
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) CHECK(!g.has_edge(u, v));
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(generate(FamilySpec::complete(1)), ParameterError);
  CHECK_THROWS_AS(generate(FamilySpec::cycle(2)), ParameterError);
  CHECK_THROWS_AS(generate(FamilySpec::clique_union(2, 1)), ParameterError);
  CHECK_THROWS_AS(generate(FamilySpec::random_regular(5, 3, 1)), ParameterError);  // nd odd
  CHECK_THROWS_AS(generate(FamilySpec::random_regular(4, 4, 1)), ParameterError);  // d >= n
  FamilySpec no_seed = FamilySpec::random_regular(8, 3, 0);
  no_seed.seed.reset();
  CHECK_THROWS_AS(generate(no_seed), ParameterError);
}

TEST_CASE("random regular graphs are valid and deterministic per seed") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const Graph a = generate(FamilySpec::random_regular(16, 3, seed));
    const Graph b = generate(FamilySpec::random_regular(16, 3, seed));
    CHECK(a.adjacency() == b.adjacency());
  }
  const Graph a = generate(FamilySpec::random_regular(16, 3, 1));
  const Graph b = generate(FamilySpec::random_regular(16, 3, 2));
  CHECK(a.adjacency() != b.adjacency());
}

TEST_CASE("degree sums and symmetry across the family") {
  for (const auto& [spec, g] : testsupport::test_family()) {
    CAPTURE(spec.id());
    std::int64_t degree_sum = 0;
    for (int v = 0; v < g.n(); ++v) {
      degree_sum += static_cast<std::int64_t>(g.neighbors(v).size());
      for (int u : g.neighbors(v)) CHECK(g.has_edge(u, v));
    }
    CHECK(degree_sum == static_cast<std::int64_t>(g.n()) * g.degree());
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("edge list round trip") {
  const std::string k4 = "4 3\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  const Graph g = load_edge_list_string(k4);
  CHECK(g.n() == 4);
  CHECK(g.degree() == 3);
  CHECK(write_edge_list(g) == k4);

  for (const auto& [spec, graph] : testsupport::test_family()) {
    CAPTURE(spec.id());
    const Graph reloaded = load_edge_list_string(write_edge_list(graph));
    CHECK(reloaded.adjacency() == graph.adjacency());
  }
}

TEST_CASE("edge list accepts comments and blank lines") {
  const Graph g = load_edge_list_string("# triangle\n\n3 2\n0 1\n# middle\n0 2\n1 2\n");
  CHECK(g.n() == 3);
}

TEST_CASE("edge list rejections carry line numbers") {
  // header claims d=2 but vertex 0 has degree 3
  const std::string irregular = "4 2\n0 1\n0 2\n0 3\n1 2\n";
  CHECK_THROWS_WITH_AS(load_edge_list_string(irregular),
                       doctest::Contains("vertex 0"), DomainError);

  try {
    load_edge_list_string("3 2\n0 1\n0 1\n1 2\n0 2\n");
    FAIL("duplicate edge accepted");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }

  CHECK_THROWS_AS(load_edge_list_string("3 2\n0 1\n1 1\n"), ParseError);   // self-loop
  CHECK_THROWS_AS(load_edge_list_string("3 2\n1 0\n"), ParseError);        // u >= v
  CHECK_THROWS_AS(load_edge_list_string("3 2\n0 7\n"), ParseError);        // out of range
  CHECK_THROWS_AS(load_edge_list_string("nonsense\n"), ParseError);
  CHECK_THROWS_AS(load_edge_list_string(""), ParseError);
}

TEST_CASE("density is exact") {
  const Graph k4 = generate(FamilySpec::complete(4));
  CHECK(density(k4, VertexSet::of(4, {0})) == Rational(1, 4));
  const Graph cu = generate(FamilySpec::clique_union(2, 3));
  CHECK(density(cu, VertexSet::of(6, {0, 1, 2})) == Rational(1, 2));
  CHECK(density(cu, VertexSet::of(6, {})) == Rational(0));
  CHECK_THROWS_AS(VertexSet::of(4, {5}), DomainError);
}

TEST_CASE("family spec string round trip") {
  for (const char* text : {"complete:8", "cycle:6", "hypercube:3", "clique_union:2x3",
                           "random_regular:24,3,7"}) {
    CHECK(FamilySpec::parse(text).id() == text);
  }
  CHECK_THROWS_AS(FamilySpec::parse("complete"), ParameterError);
  CHECK_THROWS_AS(FamilySpec::parse("moebius:8"), ParameterError);
}
