#include "bvnkit/sinkhorn.hpp"

#include <cmath>
#include <string>

#include "bvnkit/errors.hpp"

namespace bvnkit {

namespace {

double max_unit_deviation(const Matrix& s) {
  double dev = 0.0;
  for (double v : s.row_sums()) dev = std::max(dev, std::abs(v - 1.0));
  for (double v : s.col_sums()) dev = std::max(dev, std::abs(v - 1.0));
  return dev;
}

// s = diag(d1) * a * diag(d2), rebuilt from scratch so d1/d2 and s can
// never drift apart.
Matrix scaled_matrix(const Matrix& a, const std::vector<double>& d1,
                     const std::vector<double>& d2) {
  const std::size_t n = a.dim();
  Matrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = d1[i] * a(i, j) * d2[j];
  return s;
}

}  // namespace

ScalingResult sinkhorn_scale(const Matrix& a, double tol, std::size_t max_iter,
                             const ToleranceConfig& cfg) {
  validate(cfg);
  const std::size_t n = a.dim();
  if (n == 0) throw InvalidInputError("cannot scale an empty matrix");
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw InvalidInputError("scaling tolerance must be positive");
  for (double v : a.entries())
    if (!(v >= 0.0)) throw InvalidInputError("entries must be nonnegative");

  for (std::size_t i = 0; i < n; ++i) {
    double rmax = 0.0, cmax = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      rmax = std::max(rmax, a(i, j));
      cmax = std::max(cmax, a(j, i));
    }
    if (rmax <= cfg.zero_threshold)
      throw InvalidInputError("row " + std::to_string(i) + " has no support");
    if (cmax <= cfg.zero_threshold)
      throw InvalidInputError("column " + std::to_string(i) + " has no support");
  }

  std::vector<double> d1(n, 1.0), d2(n, 1.0);
  Matrix s = scaled_matrix(a, d1, d2);
  std::size_t iterations = 0;
  double dev = max_unit_deviation(s);
  while (dev > tol) {
    if (iterations >= max_iter)
      throw NonConvergenceError("no convergence to tolerance " +
                                std::to_string(tol) + " within " +
                                std::to_string(max_iter) + " iterations");
    auto rs = s.row_sums();
    for (std::size_t i = 0; i < n; ++i) {
      if (!(rs[i] > 0.0) || !std::isfinite(rs[i]))
        throw NonConvergenceError("row sum collapsed during scaling");
      d1[i] /= rs[i];
    }
    s = scaled_matrix(a, d1, d2);
    auto cs = s.col_sums();
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cs[j] > 0.0) || !std::isfinite(cs[j]))
        throw NonConvergenceError("column sum collapsed during scaling");
      d2[j] /= cs[j];
    }
    s = scaled_matrix(a, d1, d2);
    ++iterations;
    dev = max_unit_deviation(s);
  }
  return {std::move(d1), std::move(d2), std::move(s), iterations, dev};
}

Matrix reconstruct_original(const ScalingResult& r) {
  const std::size_t n = r.s.dim();
  if (r.d1.size() != n || r.d2.size() != n)
    throw DimensionMismatchError("scaling vectors do not match matrix dimension");
  for (std::size_t i = 0; i < n; ++i)
    if (!(r.d1[i] > 0.0) || !(r.d2[i] > 0.0))
      throw DivisionByZeroError("scaling vectors must be strictly positive");
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = r.s(i, j) / (r.d1[i] * r.d2[j]);
  return a;
}

CompletionResult complete_to_doubly_stochastic(const Matrix& a,
                                               const ToleranceConfig& cfg) {
  validate(cfg);
  const std::size_t n = a.dim();
  if (n == 0) throw InvalidInputError("cannot complete an empty matrix");
  for (double v : a.entries())
    if (!(v >= 0.0)) throw InvalidInputError("entries must be nonnegative");

  const auto rs = a.row_sums();
  const auto cs = a.col_sums();
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(rs[i] - cs[i]) > cfg.ds_tolerance)
      throw UnsupportedShapeError(
          "row sum " + std::to_string(i) + " differs from column sum " +
          std::to_string(i) + "; no doubly stochastic completion exists");

  double scale = 1.0;
  for (double v : rs) scale = std::max(scale, v);

  Matrix m(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    double block_row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = a(i, j) / scale;
      m(i, j) = v;
      m(n + i, n + j) = v;
      block_row_sum += v;
    }
    // Exactly 1 - (row sum of the scaled block); clamp fp dust at 0.
    const double r = std::max(0.0, 1.0 - block_row_sum);
    m(i, n + i) = r;
    m(n + i, i) = r;
  }
  return {std::move(m), scale, n};
}

}  // namespace bvnkit
