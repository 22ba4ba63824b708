#include "bvnkit/matrix.hpp"

#include <cmath>
#include <string>

#include "bvnkit/errors.hpp"

namespace bvnkit {

void validate(const ToleranceConfig& cfg) {
  if (!std::isfinite(cfg.zero_threshold) || !std::isfinite(cfg.ds_tolerance))
    throw InvalidInputError("tolerance config must be finite");
  if (!(cfg.zero_threshold > 0.0))
    throw InvalidInputError("zero_threshold must be positive");
  if (!(cfg.zero_threshold < cfg.ds_tolerance))
    throw InvalidInputError("zero_threshold must be below ds_tolerance");
}

Matrix::Matrix(std::size_t n, double fill) : n_(n), entries_(n * n, fill) {
  if (!std::isfinite(fill)) throw InvalidInputError("matrix fill must be finite");
}

Matrix::Matrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n)
    throw InvalidInputError("expected " + std::to_string(n * n) +
                            " entries, got " + std::to_string(entries_.size()));
  for (double v : entries_)
    if (!std::isfinite(v)) throw InvalidInputError("matrix entries must be finite");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> Matrix::row_sums() const {
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += entries_[i * n_ + j];
  return out;
}

std::vector<double> Matrix::col_sums() const {
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[j] += entries_[i * n_ + j];
  return out;
}

double Matrix::sum() const {
  double s = 0.0;
  for (double v : entries_) s += v;
  return s;
}

double Matrix::max_entry() const {
  double m = 0.0;
  bool first = true;
  for (double v : entries_) {
    if (first || v > m) m = v;
    first = false;
  }
  return m;
}

bool Matrix::all_finite() const {
  for (double v : entries_)
    if (!std::isfinite(v)) return false;
  return true;
}

std::vector<double> Matrix::apply(std::span<const double> x) const {
  if (x.size() != n_)
    throw DimensionMismatchError("vector length does not match matrix dimension");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) y[i] += entries_[i * n_ + j] * x[j];
  return y;
}

namespace {

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatchError("matrix dimensions differ");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

Matrix operator*(double c, const Matrix& m) {
  Matrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = c * m(i, j);
  return out;
}

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t v : map_) {
    if (v >= map_.size() || seen[v])
      throw InvalidInputError("permutation map is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  return Permutation(std::move(map));
}

bool is_doubly_stochastic(const Matrix& m, double tol) {
  if (m.dim() == 0) return false;
  for (double v : m.entries())
    if (!(v >= -tol)) return false;
  for (double s : m.row_sums())
    if (!(std::abs(s - 1.0) <= tol)) return false;
  for (double s : m.col_sums())
    if (!(std::abs(s - 1.0) <= tol)) return false;
  return true;
}

Matrix permutation_to_matrix(const Permutation& p) {
  Matrix m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, p(i)) = 1.0;
  return m;
}

double l1_norm(const Matrix& m) {
  double s = 0.0;
  for (double v : m.entries()) s += std::abs(v);
  return s;
}

double induced_l1_norm(const Matrix& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) col += std::abs(m(i, j));
    if (col > best) best = col;
  }
  return best;
}

double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (double v : m.entries()) s += v * v;
  return std::sqrt(s);
}

}  // namespace bvnkit
