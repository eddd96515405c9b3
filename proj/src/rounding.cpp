#include "sse/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sse/errors.hpp"
#include "sse/norms.hpp"

namespace sse {

double lcb_bound_low(const Graph& g, const Eigen::VectorXd& v, double delta) {
  if (v.size() != g.n()) throw DomainError("vector dimension does not match graph");
  if (!(delta > 0.0)) throw DomainError("lcb_bound_low requires delta > 0");
  const double l2sq = v.squaredNorm() / double(g.n());
  if (l2sq == 0.0) throw DomainError("lcb_bound_low of the zero vector");
  const Eigen::VectorXd av = normalized_adjacency(g) * v;
  const double rayleigh = inner(v, av) / l2sq;  // <v,Av>/||v||_2^2 in [-1,1]
  double radicand = 1.0 - rayleigh * rayleigh;
  if (radicand < 0.0) {
    if (radicand < -1e-12) throw NumericalError("radicand outside [0,1]", radicand);
    radicand = 0.0;
  }
  if (radicand > 1.0) radicand = 1.0;
  const double l1 = lp_norm(v, 1);
  const double denominator = 1.0 - l1 * l1 / (delta * l2sq);
  if (denominator <= 0.0) return kInfinity;
  return std::sqrt(radicand) / denominator;
}

namespace {

struct LevelSets {
  // group boundaries over vertices sorted by score descending; equal
  // scores are never split
  std::vector<int> order;
  std::vector<int> group_end;  // prefix length after each tie group
  std::vector<double> group_score;
};

LevelSets level_sets_of(const Eigen::VectorXd& score) {
  LevelSets ls;
  const int n = static_cast<int>(score.size());
  ls.order.resize(n);
  std::iota(ls.order.begin(), ls.order.end(), 0);
  std::sort(ls.order.begin(), ls.order.end(), [&](int a, int b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return a < b;
  });
  int i = 0;
  while (i < n) {
    int j = i;
    while (j < n && score[ls.order[j]] == score[ls.order[i]]) ++j;
    ls.group_end.push_back(j);
    ls.group_score.push_back(score[ls.order[i]]);
    i = j;
  }
  return ls;
}

// Shared sweep: min-Phi proper level set of `score` with |S| <= cap.
RoundingResult sweep_level_sets(const Graph& g, const Eigen::VectorXd& score,
                                double delta) {
  const int n = g.n();
  const LevelSets ls = level_sets_of(score);
  const int groups = static_cast<int>(ls.group_end.size());
  const int cap = scaled_set_size(delta, n);

  RoundingResult result;
  std::vector<char> member(n, 0);
  std::int64_t cut = 0;
  int size = 0;
  for (int gi = 0; gi + 1 < groups; ++gi) {  // proper prefixes only
    for (int idx = (gi == 0 ? 0 : ls.group_end[gi - 1]); idx < ls.group_end[gi]; ++idx) {
      const int v = ls.order[idx];
      int inside = 0;
      for (int u : g.neighbors(v)) inside += member[u];
      cut += g.degree() - 2 * inside;
      member[v] = 1;
      ++size;
    }
    if (size > cap) break;  // level sets only grow
    const Rational value(cut, static_cast<std::int64_t>(g.degree()) * size);
    if (!result.found || value < result.phi_value) {
      result.found = true;
      result.phi_value = value;
      result.mu = Rational(size, n);
      result.threshold = ls.group_score[gi + 1];
      std::vector<int> members(ls.order.begin(), ls.order.begin() + ls.group_end[gi]);
      result.set = VertexSet::of(n, std::move(members));
    }
  }
  return result;
}

void flag_vacuous(RoundingResult& r) {
  r.bound_vacuous = r.bound && (!std::isfinite(*r.bound) || *r.bound <= 0.0 || *r.bound >= 1.0);
}

}  // namespace

RoundingResult sweep_low(const Graph& g, const Eigen::VectorXd& v, double delta) {
  if (v.size() != g.n()) throw DomainError("vector dimension does not match graph");
  if (v.squaredNorm() == 0.0) throw DomainError("sweep_low of the zero vector");
  RoundingResult result = sweep_level_sets(g, v.cwiseProduct(v), delta);
  result.bound = lcb_bound_low(g, v, delta);
  flag_vacuous(result);
  return result;
}

RoundingResult sweep_high(const Graph& g, const Eigen::VectorXd& z, double delta,
                          double constant_c) {
  if (z.size() != g.n()) throw DomainError("vector dimension does not match graph");
  const double z2 = z.squaredNorm();
  if (z2 == 0.0) throw DomainError("sweep_high of the zero vector");
  const Eigen::VectorXd az = normalized_adjacency(g) * z;
  const Eigen::VectorXd score = (az + z).cwiseProduct(az + z);
  RoundingResult result = sweep_level_sets(g, score, delta);
  const double eps = az.squaredNorm() / z2;  // largest eps with ||Az||^2 >= eps ||z||^2
  result.bound = 1.0 - constant_c * eps * eps;
  flag_vacuous(result);
  return result;
}

RoundingResult round_witness(const Graph& g, const Eigen::VectorXd& w, double delta,
                             double epsilon) {
  if (w.size() != g.n()) throw DomainError("vector dimension does not match graph");
  if (w.squaredNorm() == 0.0) throw DomainError("round_witness of the zero vector");
  if (!(delta > 0.0)) throw DomainError("round_witness requires delta > 0");
  const double l1 = lp_norm(w, 1);
  const double l2sq = w.squaredNorm() / double(g.n());
  const double ratio = l1 * l1 / (delta * l2sq);
  if (ratio > 1.0 + 1e-12)
    throw PreconditionError(
        "collision condition fails: ||w||_1^2 / (delta ||w||_2^2) = " +
        std::to_string(ratio) + " > 1");
  const Eigen::VectorXd z = w / w.cwiseAbs().sum();
  RoundingResult result = sweep_low(g, z, 4.0 * delta);
  if (result.found)
    result.certified = result.phi_value.to_double() < 2.0 * std::sqrt(epsilon);
  else
    result.certified = false;
  return result;
}

bool lcb_disjunction_holds(const Graph& g, const Eigen::VectorXd& v, double delta,
                           double slack) {
  if (v.squaredNorm() == 0.0) throw DomainError("lcb disjunction of the zero vector");
  const double rhs = lcb_bound_low(g, v, delta);
  if (std::isinf(rhs)) return true;
  const int n = g.n();
  const LevelSets ls = level_sets_of(v.cwiseProduct(v));
  std::vector<char> member(n, 0);
  std::int64_t cut = 0;
  int size = 0;
  // here every threshold t = an observed score, S = {score >= t},
  // including S = V at the minimum score
  for (std::size_t gi = 0; gi < ls.group_end.size(); ++gi) {
    for (int idx = (gi == 0 ? 0 : ls.group_end[gi - 1]); idx < ls.group_end[gi]; ++idx) {
      const int u = ls.order[idx];
      int inside = 0;
      for (int w : g.neighbors(u)) inside += member[w];
      cut += g.degree() - 2 * inside;
      member[u] = 1;
      ++size;
    }
    const double mu = double(size) / n;
    if (mu > delta) return true;
    const double phi_s = double(cut) / (double(g.degree()) * size);
    if (phi_s <= rhs + slack) return true;
  }
  return false;
}

}  // namespace sse
