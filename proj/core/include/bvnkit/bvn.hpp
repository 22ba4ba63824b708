#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bvnkit/matching.hpp"
#include "bvnkit/matrix.hpp"

namespace bvnkit {

enum class Variant {
  kOriginal,       // any perfect matching per step
  kLargestWeight,  // max-total-weight perfect matching per step
  kBottleneck,     // maximin perfect matching per step
  kThreshold,      // original restricted to entries above theta
  kCutoffPruned,   // post-processed by cutoff_prune
};

// Canonical lower-case spelling, as used on the command line and in CSV.
std::string_view to_string(Variant v);
Variant variant_from_string(std::string_view name);

struct Term {
  double weight = 0.0;  // normalized: weights of a decomposition sum to 1
  Permutation perm;
};

// A convex combination of permutation matrices approximating a doubly
// stochastic matrix. raw_weights[k] is the amount actually subtracted at
// step k (terms[k].weight before normalization); the raw reconstruction
// sum_k raw_weights[k] P_k differs from the input by exactly the final
// residual.
struct Decomposition {
  std::vector<Term> terms;
  std::vector<double> raw_weights;
  // Max-absolute-column-sum norm of the final residual. For the greedy
  // variants the residual stays nonnegative with equal row and column
  // sums, so this is that common sum.
  double residual_l1 = 0.0;
  Variant variant = Variant::kOriginal;
  double epsilon = 0.0;
  // Threshold variant only.
  std::optional<double> theta;

  std::size_t size() const { return terms.size(); }
  std::size_t dim() const { return terms.empty() ? 0 : terms.front().perm.size(); }
};

// Greedy decomposition: repeatedly pick a perfect matching of the
// residual's support graph, subtract the minimum entry along it, stop
// once the residual norm is at most eps (or no perfect matching
// remains). Weights are normalized at the end.
//
// Requires s doubly stochastic within cfg.ds_tolerance and 0 < eps < N.
// Throws DegenerateError when even the first step has no matching.
Decomposition decompose_original(const Matrix& s, double eps,
                                 const ToleranceConfig& cfg = {});
Decomposition decompose_largest_weight(const Matrix& s, double eps,
                                       const ToleranceConfig& cfg = {});
Decomposition decompose_bottleneck(const Matrix& s, double eps,
                                   const ToleranceConfig& cfg = {});

// Original stepping restricted to entries above theta (theta >= 0). The
// effective support cutoff is max(zero_threshold, theta), so theta = 0
// reproduces decompose_original exactly.
Decomposition decompose_threshold(const Matrix& s, double eps, double theta,
                                  const ToleranceConfig& cfg = {});

// Largest theta (to within 1e-6) for which decompose_threshold still
// reaches eps, found by bisection on [0, max entry].
double find_threshold(const Matrix& s, double eps,
                      const ToleranceConfig& cfg = {});

// Discards the smallest-raw-weight terms one at a time while the
// Frobenius distance between s and the re-normalized kept expansion
// stays at most tol; stops at the first term whose removal would break
// that, and always keeps at least one term. Throws ToleranceTooTightError
// when even the full expansion misses tol.
Decomposition cutoff_prune(const Decomposition& d, const Matrix& s, double tol);

// Sum of weight * permutation matrix with normalized weights.
Matrix reconstruct(const Decomposition& d);
// Same with raw weights; input minus this equals the final residual.
Matrix reconstruct_with_raw_weights(const Decomposition& d);

}  // namespace bvnkit
