#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bvnkit {

// Tolerances shared across the library.
//
// zero_threshold decides when an entry counts as a structural zero (no
// edge in the support graph). ds_tolerance is the largest deviation of a
// row or column sum from 1 that still counts as doubly stochastic.
struct ToleranceConfig {
  double zero_threshold = 1e-12;
  double ds_tolerance = 1e-8;
};

// Throws InvalidInputError unless 0 < zero_threshold < ds_tolerance and
// both are finite.
void validate(const ToleranceConfig& cfg);

// Dense real square matrix, row-major.
//
// Entries are finite by construction; code that mutates entries in place
// is expected to keep them that way.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0);
  // Takes exactly n*n entries, row-major.
  Matrix(std::size_t n, std::vector<double> entries);

  static Matrix identity(std::size_t n);

  std::size_t dim() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * n_ + j];
  }

  std::span<const double> entries() const { return entries_; }

  std::vector<double> row_sums() const;
  std::vector<double> col_sums() const;
  double sum() const;
  double max_entry() const;
  bool all_finite() const;

  // y = M x. Throws DimensionMismatchError if x has the wrong length.
  std::vector<double> apply(std::span<const double> x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double c, const Matrix& m);

// Permutation sigma of {0, ..., N-1}; term k of a decomposition selects
// the entries (i, sigma(i)).
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidInputError unless map is a bijection on {0..N-1}.
  explicit Permutation(std::vector<std::size_t> map);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return map_.size(); }
  std::size_t operator()(std::size_t i) const { return map_[i]; }
  const std::vector<std::size_t>& map() const { return map_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

// Entries nonnegative (within -tol) and every row and column sum within
// tol of 1.
bool is_doubly_stochastic(const Matrix& m, double tol);

Matrix permutation_to_matrix(const Permutation& p);

// Entrywise l1 norm: sum of absolute values of all entries.
double l1_norm(const Matrix& m);

// Induced 1-norm: maximum absolute column sum. For a nonnegative matrix
// with equal row and column sums this equals that common sum, which is
// why the decomposition loops use it as their residual error metric.
double induced_l1_norm(const Matrix& m);

double frobenius_norm(const Matrix& m);

}  // namespace bvnkit
