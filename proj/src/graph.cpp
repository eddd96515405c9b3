#include "sse/graph.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

#include "sse/errors.hpp"
#include "sse/rng.hpp"

namespace sse {

Graph Graph::from_adjacency(int n, int d, std::vector<std::vector<int>> adjacency) {
  if (n <= 0) throw ParameterError("vertex count must be positive");
  if (d < 1 || d >= n) throw ParameterError("degree must satisfy 1 <= d < n");
  if (static_cast<int>(adjacency.size()) != n)
    throw ParameterError("adjacency size does not match vertex count");
  for (int v = 0; v < n; ++v) {
    auto& nbrs = adjacency[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (static_cast<int>(nbrs.size()) != d)
      throw DomainError("vertex " + std::to_string(v) + " has degree " +
                        std::to_string(nbrs.size()) + ", expected " + std::to_string(d));
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const int u = nbrs[i];
      if (u < 0 || u >= n)
        throw DomainError("neighbor out of range at vertex " + std::to_string(v));
      if (u == v) throw DomainError("self-loop at vertex " + std::to_string(v));
      if (i > 0 && nbrs[i - 1] == u)
        throw DomainError("repeated neighbor " + std::to_string(u) + " at vertex " +
                          std::to_string(v));
    }
  }
  for (int v = 0; v < n; ++v)
    for (int u : adjacency[v])
      if (!std::binary_search(adjacency[u].begin(), adjacency[u].end(), v))
        throw DomainError("asymmetric adjacency between " + std::to_string(v) + " and " +
                          std::to_string(u));
  return Graph(n, d, std::move(adjacency));
}

Graph Graph::from_edges(int n, int d, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(std::max(n, 0)));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge endpoint out of range");
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  return from_adjacency(n, d, std::move(adjacency));
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

VertexSet VertexSet::of(int n, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int v : members)
    if (v < 0 || v >= n)
      throw DomainError("vertex " + std::to_string(v) + " outside {0,...," +
                        std::to_string(n - 1) + "}");
  return VertexSet{std::move(members), n};
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

FamilySpec FamilySpec::complete(int n) { return {Family::complete, n, 0, 0, 0, {}}; }
FamilySpec FamilySpec::cycle(int n) { return {Family::cycle, n, 0, 0, 0, {}}; }
FamilySpec FamilySpec::hypercube(int k) { return {Family::hypercube, 0, k, 0, 0, {}}; }
FamilySpec FamilySpec::clique_union(int m, int k) {
  return {Family::clique_union, 0, k, m, 0, {}};
}
FamilySpec FamilySpec::random_regular(int n, int d, std::uint64_t seed) {
  return {Family::random_regular, n, 0, 0, d, seed};
}

namespace {

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw ParameterError("cannot parse " + what + " from '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParameterError("family spec '" + text + "' missing ':'");
  const std::string name = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  if (name == "complete") return complete(parse_int(args, "n"));
  if (name == "cycle") return cycle(parse_int(args, "n"));
  if (name == "hypercube") return hypercube(parse_int(args, "k"));
  if (name == "clique_union") {
    auto parts = split(args, 'x');
    if (parts.size() != 2) parts = split(args, ',');
    if (parts.size() != 2)
      throw ParameterError("clique_union expects MxK, got '" + args + "'");
    return clique_union(parse_int(parts[0], "m"), parse_int(parts[1], "k"));
  }
  if (name == "random_regular") {
    const auto parts = split(args, ',');
    if (parts.size() != 3)
      throw ParameterError("random_regular expects n,d,seed, got '" + args + "'");
    return random_regular(parse_int(parts[0], "n"), parse_int(parts[1], "d"),
                          static_cast<std::uint64_t>(std::stoull(parts[2])));
  }
  throw ParameterError("unknown family '" + name + "'");
}

std::string FamilySpec::id() const {
  switch (family) {
    case Family::complete:
      return "complete:" + std::to_string(n);
    case Family::cycle:
      return "cycle:" + std::to_string(n);
    case Family::hypercube:
      return "hypercube:" + std::to_string(k);
    case Family::clique_union:
      return "clique_union:" + std::to_string(m) + "x" + std::to_string(k);
    case Family::random_regular:
      return "random_regular:" + std::to_string(n) + "," + std::to_string(d) + "," +
             std::to_string(seed.value_or(0));
  }
  return "?";
}

namespace {

Graph generate_complete(int n) {
  if (n < 2) throw ParameterError("complete graph needs n >= 2");
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v) adj[v].push_back(u);
  return Graph::from_adjacency(n, n - 1, std::move(adj));
}

Graph generate_cycle(int n) {
  if (n < 3) throw ParameterError("cycle needs n >= 3");
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    adj[v].push_back((v + 1) % n);
    adj[v].push_back((v + n - 1) % n);
  }
  return Graph::from_adjacency(n, 2, std::move(adj));
}

Graph generate_hypercube(int k) {
  if (k < 1 || k > 30) throw ParameterError("hypercube needs 1 <= k <= 30");
  const int n = 1 << k;
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < k; ++b) adj[v].push_back(v ^ (1 << b));
  return Graph::from_adjacency(n, k, std::move(adj));
}

Graph generate_clique_union(int m, int k) {
  if (m < 1) throw ParameterError("clique_union needs m >= 1");
  if (k < 2) throw ParameterError("clique_union needs k >= 2");
  const int n = m * k;
  std::vector<std::vector<int>> adj(n);
  for (int c = 0; c < m; ++c)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j) adj[c * k + i].push_back(c * k + j);
  return Graph::from_adjacency(n, k - 1, std::move(adj));
}

constexpr int kPairingRetries = 1000;

Graph generate_random_regular(int n, int d, std::uint64_t seed) {
  if (n < 2 || d < 1 || d >= n) throw ParameterError("random_regular needs 1 <= d < n");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
    throw ParameterError("random_regular needs n*d even");
  Rng rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(n) * d);
  for (int attempt = 0; attempt < kPairingRetries; ++attempt) {
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < d; ++i) stubs[static_cast<std::size_t>(v) * d + i] = v;
    for (std::size_t i = stubs.size(); i > 1; --i)
      std::swap(stubs[i - 1], stubs[rng.below(i)]);
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    std::vector<std::vector<int>> adj(n);
    for (std::size_t t = 0; ok && t + 1 < stubs.size(); t += 2) {
      int u = stubs[t], v = stubs[t + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      if (!seen.emplace(u, v).second) {
        ok = false;
        break;
      }
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    if (ok) return Graph::from_adjacency(n, d, std::move(adj));
  }
  throw GenerationError("pairing model rejected " + std::to_string(kPairingRetries) +
                        " times for n=" + std::to_string(n) + ", d=" + std::to_string(d));
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete:
      return generate_complete(spec.n);
    case Family::cycle:
      return generate_cycle(spec.n);
    case Family::hypercube:
      return generate_hypercube(spec.k);
    case Family::clique_union:
      return generate_clique_union(spec.m, spec.k);
    case Family::random_regular:
      if (!spec.seed) throw ParameterError("random_regular requires a seed");
      return generate_random_regular(spec.n, spec.d, *spec.seed);
  }
  throw ParameterError("unknown family");
}

Graph load_edge_list(std::istream& in) {
  std::string line;
  long lineno = 0;
  int n = -1, d = -1;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream row(line);
    if (n < 0) {
      if (!(row >> n >> d) || n <= 0 || d <= 0)
        throw ParseError("expected header 'n d'", lineno);
      std::string tail;
      if (row >> tail) throw ParseError("trailing tokens after header", lineno);
      continue;
    }
    int u, v;
    if (!(row >> u >> v)) throw ParseError("expected edge 'u v'", lineno);
    std::string tail;
    if (row >> tail) throw ParseError("trailing tokens after edge", lineno);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("endpoint out of range", lineno);
    if (u == v) throw ParseError("self-loop is not allowed", lineno);
    if (u > v) throw ParseError("edges must be written 'u v' with u < v", lineno);
    if (!seen.emplace(u, v).second) throw ParseError("duplicate edge", lineno);
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("missing header 'n d'", lineno == 0 ? 1 : lineno);
  return Graph::from_edges(n, d, edges);
}

Graph load_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.degree() << '\n';
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
  return out.str();
}

Rational density(const Graph& g, const VertexSet& s) {
  if (s.n != g.n()) throw DomainError("vertex set built for a different graph size");
  for (int v : s.members)
    if (v < 0 || v >= g.n()) throw DomainError("vertex set member out of range");
  return Rational(s.size(), g.n());
}

}  // namespace sse
