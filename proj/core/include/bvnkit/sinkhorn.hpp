#pragma once

#include <cstddef>
#include <vector>

#include "bvnkit/matrix.hpp"

namespace bvnkit {

// Result of Sinkhorn-Knopp scaling: s = diag(d1) * a * diag(d2).
struct ScalingResult {
  std::vector<double> d1;
  std::vector<double> d2;
  Matrix s;
  std::size_t iterations = 0;
  // Max deviation of a row or column sum of s from 1.
  double achieved_tol = 0.0;
};

// A 2N x 2N doubly stochastic embedding of a subnormalized matrix:
//
//   m = [ a/scale   diag(r) ]
//       [ diag(r)   a/scale ]
//
// with r_i = 1 - (row sum i of a/scale).
struct CompletionResult {
  Matrix m;
  double scale = 1.0;
  std::size_t original_dim = 0;
};

// Alternately normalizes rows and columns of a nonnegative matrix until
// every row and column sum is within tol of 1. One iteration is one full
// row sweep plus one full column sweep. Requires every row and column to
// contain at least one entry above cfg.zero_threshold; throws
// InvalidInputError otherwise (total support is not checked up front, so
// a supportless pattern surfaces as NonConvergenceError instead).
ScalingResult sinkhorn_scale(const Matrix& a, double tol = 1e-10,
                             std::size_t max_iter = 10000,
                             const ToleranceConfig& cfg = {});

// Undoes the scaling: entry (i, j) of the result is s(i,j) / (d1[i] d2[j]).
Matrix reconstruct_original(const ScalingResult& r);

// Embeds a nonnegative matrix whose row sums equal its column sums
// (within cfg.ds_tolerance, elementwise by index) into a doubly
// stochastic matrix of twice the dimension. Throws UnsupportedShapeError
// when the sums disagree.
CompletionResult complete_to_doubly_stochastic(const Matrix& a,
                                               const ToleranceConfig& cfg = {});

}  // namespace bvnkit
