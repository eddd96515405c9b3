#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sse/rational.hpp"

namespace sse {

/// Finite undirected d-regular simple graph.  Immutable after
/// construction; construction validates symmetry, regularity,
/// simplicity and 1 <= d < n.
class Graph {
 public:
  static Graph from_adjacency(int n, int d, std::vector<std::vector<int>> adjacency);
  static Graph from_edges(int n, int d, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int degree() const { return d_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(n_) * d_ / 2; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  bool has_edge(int u, int v) const;

 private:
  Graph(int n, int d, std::vector<std::vector<int>> adjacency)
      : n_(n), d_(d), adjacency_(std::move(adjacency)) {}

  int n_ = 0;
  int d_ = 0;
  std::vector<std::vector<int>> adjacency_;
};

/// Subset of {0,...,n-1}, stored sorted and deduplicated.
struct VertexSet {
  std::vector<int> members;
  int n = 0;

  static VertexSet of(int n, std::vector<int> members);
  int size() const { return static_cast<int>(members.size()); }
  bool contains(int v) const;
};

enum class Family { complete, cycle, hypercube, clique_union, random_regular };

/// Parameterized graph family, the unit of reproducible test instances.
struct FamilySpec {
  Family family = Family::complete;
  int n = 0;  // complete, cycle, random_regular
  int k = 0;  // hypercube dimension / clique size
  int m = 0;  // number of cliques
  int d = 0;  // random_regular degree
  std::optional<std::uint64_t> seed;

  static FamilySpec complete(int n);
  static FamilySpec cycle(int n);
  static FamilySpec hypercube(int k);
  static FamilySpec clique_union(int m, int k);
  static FamilySpec random_regular(int n, int d, std::uint64_t seed);

  /// Parses "complete:8", "cycle:6", "hypercube:3", "clique_union:2x3",
  /// "random_regular:24,3,7" (n, d, seed).
  static FamilySpec parse(const std::string& text);

  std::string id() const;
};

Graph generate(const FamilySpec& spec);

Graph load_edge_list(std::istream& in);
Graph load_edge_list_string(const std::string& text);
std::string write_edge_list(const Graph& g);

/// mu(S) = |S|/n, exact.
Rational density(const Graph& g, const VertexSet& s);

}  // namespace sse
