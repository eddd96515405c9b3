#pragma once

#include <cstdint>

#include "sse/graph.hpp"
#include "sse/rational.hpp"

namespace sse {

/// Number of edges with exactly one endpoint in S.
std::int64_t cut_size(const Graph& g, const VertexSet& s);

/// Edge expansion Phi(S) = |boundary edges| / (d |S|), exact.
Rational phi(const Graph& g, const VertexSet& s);

/// Phi(delta) together with the set attaining it.
struct ExpansionProfile {
  enum class Mode { exact, sampled };

  double delta = 0.0;
  Rational value;
  VertexSet witness;
  Mode mode = Mode::exact;
  std::uint64_t sets_examined = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Exact minimum of Phi(S) over all nonempty S with |S| <= floor(delta n),
/// witness lexicographically least among minimizers.  Refuses when the
/// enumeration size C(n, floor(delta n)) * floor(delta n) exceeds the
/// budget.  The subset space may be partitioned across `threads`; the
/// merge (min value, then lexicographic witness) makes the result
/// independent of the partition.
ExpansionProfile sse_profile(const Graph& g, double delta,
                             std::uint64_t budget = kDefaultEnumerationBudget,
                             int threads = 1);

/// Seeded upper bound on Phi(delta): all singletons, then random
/// restarts with first-improvement local search (swap, drop and add
/// moves) until `budget` candidate evaluations are spent.
ExpansionProfile sse_profile_heuristic(const Graph& g, double delta, std::uint64_t budget,
                                       std::uint64_t seed);

/// floor(delta * n) with a guard against floating-point droop.
int scaled_set_size(double delta, int n);

}  // namespace sse
