#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bvnkit/bvn.hpp"
#include "bvnkit/matrix.hpp"

namespace bvnkit {

// Costs of block-encoding a K-term convex combination of permutations.
struct ResourceReport {
  std::size_t k = 0;
  // ceil(log2 k): qubits indexing the terms.
  unsigned ancilla_qubits = 0;
  // log2 N when N is a power of two, absent otherwise.
  std::optional<unsigned> system_qubits;
  // l1 norm of the expansion coefficients; 1 for normalized weights.
  double alpha = 0.0;
  // Success probability of the block encoding applied to the uniform
  // superposition: || s |u> ||^2 with u_i = 1/sqrt(N).
  double p_succ_uniform = 0.0;
  std::optional<double> second_singular_value;
};

struct PauliCount {
  unsigned n_qubits = 0;
  std::size_t nonzero_terms = 0;
  // Sum of |c_P| over all Pauli strings.
  double coefficient_l1 = 0.0;
};

// Throws InvalidInputError on an empty decomposition and
// DimensionMismatchError when d and s disagree in dimension. Computing
// the second singular value is opt-in (it is the one dense O(N^3) step).
ResourceReport resource_report(const Decomposition& d, const Matrix& s,
                               bool with_second_singular_value = false);

// || s |psi> ||^2 for a unit-norm real state vector. Throws
// NotNormalizedError if psi is off unit length by more than 1e-10.
double success_probability(const Matrix& s, std::span<const double> psi);

// Coefficients c_P = tr(P^dag a) / N over all 4^n Pauli strings for an
// N = 2^n real matrix, indexed base 4 (I=0, X=1, Y=2, Z=3) with qubit 0
// as the most significant digit. O(N^2 log N) via one recursive block
// transform per qubit. Throws NotPowerOfTwoError otherwise.
std::vector<std::complex<double>> pauli_coefficients(const Matrix& a);

// Number of Pauli strings with |c_P| > tol, plus the coefficient l1 norm.
PauliCount pauli_term_count(const Matrix& a, double tol = 1e-12);

}  // namespace bvnkit
