#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sse/graph.hpp"

namespace sse {

/// Lexicographic enumeration of nonempty vertex subsets with
/// incremental boundary maintenance: adding v changes the cut by
/// d - 2|N(v) ∩ S|.  The visitor sees (members, size, cut) for every
/// nonempty S with |S| <= max_size, in lexicographic order of the
/// sorted member sequence.  Subsets with minimum element `first` form
/// an independent subtree, which is the unit of thread partitioning.
namespace subset_detail {

template <class Visitor>
struct MaskWalk {
  const std::vector<std::uint64_t>& adj;
  int n, d, max_size;
  Visitor& visit;
  std::vector<int> stack;
  std::uint64_t mask = 0;
  std::int64_t cut = 0;

  void descend(int start) {
    for (int v = start; v < n; ++v) {
      cut += d - 2 * std::popcount(adj[v] & mask);
      mask |= std::uint64_t{1} << v;
      stack.push_back(v);
      visit(stack.data(), static_cast<int>(stack.size()), cut);
      if (static_cast<int>(stack.size()) < max_size) descend(v + 1);
      stack.pop_back();
      mask &= ~(std::uint64_t{1} << v);
      cut -= d - 2 * std::popcount(adj[v] & mask);
    }
  }
};

template <class Visitor>
struct GenericWalk {
  const Graph& g;
  int max_size;
  Visitor& visit;
  std::vector<int> stack;
  std::vector<char> member;
  std::int64_t cut = 0;

  void descend(int start) {
    const int n = g.n();
    for (int v = start; v < n; ++v) {
      int inside = 0;
      for (int u : g.neighbors(v)) inside += member[u];
      cut += g.degree() - 2 * inside;
      member[v] = 1;
      stack.push_back(v);
      visit(stack.data(), static_cast<int>(stack.size()), cut);
      if (static_cast<int>(stack.size()) < max_size) descend(v + 1);
      stack.pop_back();
      member[v] = 0;
      int inside_after = 0;
      for (int u : g.neighbors(v)) inside_after += member[u];
      cut -= g.degree() - 2 * inside_after;
    }
  }
};

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    for (int u : g.neighbors(v)) adj[v] |= std::uint64_t{1} << u;
  return adj;
}

}  // namespace subset_detail

/// Visits the subtree of subsets whose minimum element is `first`.
template <class Visitor>
void for_each_subset_with_min(const Graph& g, int max_size, int first, Visitor&& visit) {
  if (max_size < 1 || first >= g.n()) return;
  if (g.n() <= 64) {
    const auto adj = subset_detail::adjacency_masks(g);
    subset_detail::MaskWalk<Visitor> walk{adj, g.n(), g.degree(), max_size, visit, {}, 0, 0};
    walk.stack.reserve(max_size);
    walk.cut += g.degree();
    walk.mask = std::uint64_t{1} << first;
    walk.stack.push_back(first);
    visit(walk.stack.data(), 1, walk.cut);
    if (max_size > 1) walk.descend(first + 1);
  } else {
    subset_detail::GenericWalk<Visitor> walk{g, max_size, visit, {}, {}, 0};
    walk.member.assign(g.n(), 0);
    walk.stack.reserve(max_size);
    walk.cut = g.degree();
    walk.member[first] = 1;
    walk.stack.push_back(first);
    visit(walk.stack.data(), 1, walk.cut);
    if (max_size > 1) walk.descend(first + 1);
  }
}

/// Visits every nonempty subset with |S| <= max_size.
template <class Visitor>
void for_each_subset(const Graph& g, int max_size, Visitor&& visit) {
  for (int first = 0; first < g.n(); ++first)
    for_each_subset_with_min(g, max_size, first, visit);
}

}  // namespace sse
