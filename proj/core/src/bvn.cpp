#include "bvnkit/bvn.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "bvnkit/errors.hpp"

namespace bvnkit {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::kOriginal: return "original";
    case Variant::kLargestWeight: return "largest";
    case Variant::kBottleneck: return "bottleneck";
    case Variant::kThreshold: return "threshold";
    case Variant::kCutoffPruned: return "cutoff";
  }
  throw InternalError("unknown variant");
}

Variant variant_from_string(std::string_view name) {
  if (name == "original") return Variant::kOriginal;
  if (name == "largest") return Variant::kLargestWeight;
  if (name == "bottleneck") return Variant::kBottleneck;
  if (name == "threshold") return Variant::kThreshold;
  if (name == "cutoff") return Variant::kCutoffPruned;
  throw InvalidInputError("unknown variant '" + std::string(name) + "'");
}

namespace {

using Selector =
    std::function<std::optional<MatchingResult>(const SupportGraph&)>;

Decomposition greedy_decompose(const Matrix& s, double eps, Variant variant,
                               double cutoff, std::optional<double> theta,
                               const Selector& select,
                               const ToleranceConfig& cfg) {
  validate(cfg);
  const std::size_t n = s.dim();
  if (n == 0) throw InvalidInputError("cannot decompose an empty matrix");
  if (!is_doubly_stochastic(s, cfg.ds_tolerance))
    throw NotDoublyStochasticError(
        "input is not doubly stochastic within tolerance " +
        std::to_string(cfg.ds_tolerance));
  if (!(eps > 0.0) || !(eps < static_cast<double>(n)))
    throw InvalidInputError("eps must lie in (0, N)");

  Matrix residual = s;
  const std::size_t step_cap = n * n + 1;
  std::vector<double> raw;
  std::vector<Permutation> perms;
  double res_norm = induced_l1_norm(residual);

  while (res_norm > eps) {
    if (raw.size() >= step_cap)
      throw InternalError("residual failed to shrink within N^2 + 1 steps");
    auto m = select(SupportGraph{residual, cutoff});
    if (!m) {
      if (raw.empty())
        throw DegenerateError("support graph has no perfect matching");
      break;  // threshold stepping can run out of matchings above theta
    }
    const double w = m->min_edge;
    for (std::size_t i = 0; i < n; ++i) residual(i, m->perm(i)) -= w;
    raw.push_back(w);
    perms.push_back(std::move(m->perm));
    res_norm = induced_l1_norm(residual);
  }

  Decomposition d;
  d.raw_weights = std::move(raw);
  d.residual_l1 = res_norm;
  d.variant = variant;
  d.epsilon = eps;
  d.theta = theta;
  const double total =
      std::accumulate(d.raw_weights.begin(), d.raw_weights.end(), 0.0);
  d.terms.reserve(perms.size());
  for (std::size_t k = 0; k < perms.size(); ++k)
    d.terms.push_back({d.raw_weights[k] / total, std::move(perms[k])});
  return d;
}

}  // namespace

Decomposition decompose_original(const Matrix& s, double eps,
                                 const ToleranceConfig& cfg) {
  return greedy_decompose(s, eps, Variant::kOriginal, cfg.zero_threshold,
                          std::nullopt, perfect_matching, cfg);
}

Decomposition decompose_largest_weight(const Matrix& s, double eps,
                                       const ToleranceConfig& cfg) {
  return greedy_decompose(s, eps, Variant::kLargestWeight, cfg.zero_threshold,
                          std::nullopt, max_weight_perfect_matching, cfg);
}

Decomposition decompose_bottleneck(const Matrix& s, double eps,
                                   const ToleranceConfig& cfg) {
  return greedy_decompose(s, eps, Variant::kBottleneck, cfg.zero_threshold,
                          std::nullopt, bottleneck_perfect_matching, cfg);
}

Decomposition decompose_threshold(const Matrix& s, double eps, double theta,
                                  const ToleranceConfig& cfg) {
  if (!(theta >= 0.0) || !std::isfinite(theta))
    throw InvalidInputError("theta must be nonnegative and finite");
  return greedy_decompose(s, eps, Variant::kThreshold,
                          std::max(cfg.zero_threshold, theta), theta,
                          perfect_matching, cfg);
}

double find_threshold(const Matrix& s, double eps, const ToleranceConfig& cfg) {
  // Reaching eps is monotone: raising theta only removes edges.
  auto feasible = [&](double theta) {
    try {
      return decompose_threshold(s, eps, theta, cfg).residual_l1 <= eps;
    } catch (const DegenerateError&) {
      return false;
    }
  };
  if (!feasible(0.0))
    throw DegenerateError("not decomposable to eps even without a threshold");
  double lo = 0.0, hi = s.max_entry();
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

Decomposition cutoff_prune(const Decomposition& d, const Matrix& s, double tol) {
  const std::size_t n = s.dim();
  if (d.terms.empty()) throw InvalidInputError("cannot prune an empty decomposition");
  if (d.raw_weights.size() != d.terms.size())
    throw InvalidInputError("raw weights and terms disagree in length");
  if (d.dim() != n)
    throw DimensionMismatchError("decomposition and matrix dimensions differ");
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw InvalidInputError("pruning tolerance must be positive");

  const std::size_t k = d.terms.size();
  Matrix kept_sum = reconstruct_with_raw_weights(d);
  double kept_weight = 0.0;
  for (double w : d.raw_weights) kept_weight += w;
  std::size_t kept_count = k;

  auto error_now = [&]() {
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double e = s(i, j) - kept_sum(i, j) / kept_weight;
        sq += e * e;
      }
    return std::sqrt(sq);
  };

  if (error_now() > tol)
    throw ToleranceTooTightError(
        "even the unpruned expansion misses Frobenius tolerance " +
        std::to_string(tol));

  // Ascending raw weight, ties by extraction order.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.raw_weights[a] < d.raw_weights[b];
  });

  std::vector<bool> kept(k, true);
  for (std::size_t idx : order) {
    if (kept_count == 1) break;
    const double w = d.raw_weights[idx];
    const auto& p = d.terms[idx].perm;
    for (std::size_t i = 0; i < n; ++i) kept_sum(i, p(i)) -= w;
    kept_weight -= w;
    if (error_now() <= tol) {
      kept[idx] = false;
      --kept_count;
    } else {
      for (std::size_t i = 0; i < n; ++i) kept_sum(i, p(i)) += w;
      kept_weight += w;
      break;
    }
  }

  // Renormalize against the exact sum of the survivors, not the running
  // difference, so a single kept term gets weight exactly 1.
  double kept_total = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    if (kept[i]) kept_total += d.raw_weights[i];

  Decomposition out;
  out.variant = Variant::kCutoffPruned;
  out.epsilon = tol;
  out.terms.reserve(kept_count);
  out.raw_weights.reserve(kept_count);
  for (std::size_t i = 0; i < k; ++i) {
    if (!kept[i]) continue;
    out.raw_weights.push_back(d.raw_weights[i]);
    out.terms.push_back({d.raw_weights[i] / kept_total, d.terms[i].perm});
  }
  out.residual_l1 = induced_l1_norm(s - reconstruct_with_raw_weights(out));
  return out;
}

Matrix reconstruct(const Decomposition& d) {
  Matrix out(d.dim());
  for (const Term& t : d.terms)
    for (std::size_t i = 0; i < t.perm.size(); ++i)
      out(i, t.perm(i)) += t.weight;
  return out;
}

Matrix reconstruct_with_raw_weights(const Decomposition& d) {
  Matrix out(d.dim());
  for (std::size_t k = 0; k < d.terms.size(); ++k) {
    const auto& p = d.terms[k].perm;
    for (std::size_t i = 0; i < p.size(); ++i)
      out(i, p(i)) += d.raw_weights[k];
  }
  return out;
}

}  // namespace bvnkit
