#include "sse/expansion.hpp"

#include <algorithm>
#include <cstdio>
#include <atomic>
#include <cmath>
#include <thread>

#include "sse/errors.hpp"
#include "sse/rng.hpp"
#include "sse/subset_enum.hpp"

namespace sse {

std::int64_t cut_size(const Graph& g, const VertexSet& s) {
  if (s.n != g.n()) throw DomainError("vertex set built for a different graph size");
  std::vector<char> member(g.n(), 0);
  for (int v : s.members) {
    if (v < 0 || v >= g.n()) throw DomainError("vertex set member out of range");
    member[v] = 1;
  }
  std::int64_t cut = 0;
  for (int v : s.members)
    for (int u : g.neighbors(v)) cut += !member[u];
  return cut;
}

Rational phi(const Graph& g, const VertexSet& s) {
  if (s.size() == 0) throw DomainError("expansion of the empty set is undefined");
  return Rational(cut_size(g, s),
                  static_cast<std::int64_t>(g.degree()) * s.size());
}

int scaled_set_size(double delta, int n) {
  const double scaled = delta * n;
  int k = static_cast<int>(std::floor(scaled + 1e-9));
  return std::min(k, n);
}

namespace {

long double enumeration_work(int n, int k) {
  long double binom = 1.0L;
  for (int i = 1; i <= k; ++i) {
    binom *= static_cast<long double>(n - k + i) / i;
    if (binom > 1e30L) return binom * k;
  }
  return binom * k;
}

struct BestSet {
  // Compare cut_a/(d sa) < cut_b/(d sb) without building rationals.
  bool improves(std::int64_t cut, int size) const {
    if (witness.empty()) return true;
    return cut * static_cast<std::int64_t>(witness.size()) <
           best_cut * static_cast<std::int64_t>(size);
  }
  std::int64_t best_cut = 0;
  std::vector<int> witness;
  std::uint64_t examined = 0;
};

}  // namespace

ExpansionProfile sse_profile(const Graph& g, double delta, std::uint64_t budget,
                             int threads) {
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("sse_profile requires 0 < delta <= 1");
  const int n = g.n();
  const int max_size = scaled_set_size(delta, n);
  if (max_size < 1)
    throw DomainError("sse_profile requires floor(delta * n) >= 1");
  const long double work = enumeration_work(n, max_size);
  if (work > static_cast<long double>(budget)) {
    char estimate[32];
    std::snprintf(estimate, sizeof(estimate), "%.3Lg", work);
    throw BudgetError("exact enumeration needs about " + std::string(estimate) +
                      " set-membership checks, above the budget of " +
                      std::to_string(budget) + "; use sse_profile_heuristic instead");
  }

  std::vector<BestSet> per_first(n);
  const auto run_first = [&](int first) {
    BestSet& best = per_first[first];
    for_each_subset_with_min(g, max_size, first,
                             [&](const int* members, int size, std::int64_t cut) {
                               ++best.examined;
                               if (best.improves(cut, size)) {
                                 best.best_cut = cut;
                                 best.witness.assign(members, members + size);
                               }
                             });
  };

  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int first = 0; first < n; ++first) run_first(first);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (int first = next.fetch_add(1); first < n; first = next.fetch_add(1))
          run_first(first);
      });
    for (auto& th : pool) th.join();
  }

  ExpansionProfile profile;
  profile.delta = delta;
  profile.mode = ExpansionProfile::Mode::exact;
  Rational best_value;
  std::vector<int> best_witness;
  for (const BestSet& best : per_first) {
    profile.sets_examined += best.examined;
    if (best.witness.empty()) continue;
    const Rational value(best.best_cut,
                         static_cast<std::int64_t>(g.degree()) * best.witness.size());
    if (best_witness.empty() || value < best_value ||
        (value == best_value &&
         std::lexicographical_compare(best.witness.begin(), best.witness.end(),
                                      best_witness.begin(), best_witness.end()))) {
      best_value = value;
      best_witness = best.witness;
    }
  }
  profile.value = best_value;
  profile.witness = VertexSet::of(n, best_witness);
  return profile;
}

ExpansionProfile sse_profile_heuristic(const Graph& g, double delta, std::uint64_t budget,
                                       std::uint64_t seed) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw DomainError("sse_profile_heuristic requires 0 < delta <= 1");
  if (budget < 1) throw DomainError("sse_profile_heuristic requires budget >= 1");
  const int n = g.n();
  const int max_size = scaled_set_size(delta, n);
  if (max_size < 1)
    throw DomainError("sse_profile_heuristic requires floor(delta * n) >= 1");

  std::uint64_t evals = 0;
  Rational best_value;
  std::vector<int> best_witness;
  const auto evaluate = [&](const std::vector<int>& members) {
    ++evals;
    const Rational value = phi(g, VertexSet::of(n, members));
    if (best_witness.empty() || value < best_value) {
      best_value = value;
      best_witness = members;
      std::sort(best_witness.begin(), best_witness.end());
      return true;
    }
    return false;
  };

  for (int v = 0; v < n && evals < budget; ++v) evaluate({v});

  Rng rng(seed);
  while (evals < budget) {
    std::vector<int> pool_vertices(n);
    for (int v = 0; v < n; ++v) pool_vertices[v] = v;
    for (int i = 0; i < max_size; ++i)
      std::swap(pool_vertices[i],
                pool_vertices[i + static_cast<int>(rng.below(n - i))]);
    std::vector<int> current(pool_vertices.begin(), pool_vertices.begin() + max_size);
    std::sort(current.begin(), current.end());
    Rational current_value = phi(g, VertexSet::of(n, current));
    ++evals;
    if (best_witness.empty() || current_value < best_value) {
      best_value = current_value;
      best_witness = current;
    }

    bool improved = true;
    while (improved && evals < budget) {
      improved = false;
      std::vector<char> member(n, 0);
      for (int v : current) member[v] = 1;
      // swap moves
      for (std::size_t i = 0; i < current.size() && !improved; ++i) {
        for (int w = 0; w < n && !improved; ++w) {
          if (member[w]) continue;
          std::vector<int> candidate = current;
          candidate[i] = w;
          std::sort(candidate.begin(), candidate.end());
          ++evals;
          const Rational value = phi(g, VertexSet::of(n, candidate));
          if (value < current_value) {
            current = candidate;
            current_value = value;
            improved = true;
            if (value < best_value) {
              best_value = value;
              best_witness = candidate;
            }
          }
          if (evals >= budget) break;
        }
      }
      // drop moves
      for (std::size_t i = 0; i < current.size() && !improved && current.size() > 1; ++i) {
        std::vector<int> candidate = current;
        candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
        ++evals;
        const Rational value = phi(g, VertexSet::of(n, candidate));
        if (value < current_value) {
          current = candidate;
          current_value = value;
          improved = true;
          if (value < best_value) {
            best_value = value;
            best_witness = candidate;
          }
        }
        if (evals >= budget) break;
      }
      // add moves
      if (static_cast<int>(current.size()) < max_size) {
        for (int w = 0; w < n && !improved; ++w) {
          if (std::binary_search(current.begin(), current.end(), w)) continue;
          std::vector<int> candidate = current;
          candidate.insert(std::lower_bound(candidate.begin(), candidate.end(), w), w);
          ++evals;
          const Rational value = phi(g, VertexSet::of(n, candidate));
          if (value < current_value) {
            current = candidate;
            current_value = value;
            improved = true;
            if (value < best_value) {
              best_value = value;
              best_witness = candidate;
            }
          }
          if (evals >= budget) break;
        }
      }
    }
  }

  ExpansionProfile profile;
  profile.delta = delta;
  profile.mode = ExpansionProfile::Mode::sampled;
  profile.value = best_value;
  profile.witness = VertexSet::of(n, best_witness);
  profile.sets_examined = evals;
  return profile;
}

}  // namespace sse
