#include "bvnkit/lcu.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <bit>
#include <cmath>

#include "bvnkit/errors.hpp"

namespace bvnkit {

ResourceReport resource_report(const Decomposition& d, const Matrix& s,
                               bool with_second_singular_value) {
  if (d.terms.empty())
    throw InvalidInputError("resource report needs at least one term");
  const std::size_t n = s.dim();
  for (const Term& t : d.terms)
    if (t.perm.size() != n)
      throw DimensionMismatchError("decomposition and matrix dimensions differ");

  ResourceReport rep;
  rep.k = d.terms.size();
  rep.ancilla_qubits = static_cast<unsigned>(std::bit_width(rep.k - 1));
  if (std::has_single_bit(n))
    rep.system_qubits = static_cast<unsigned>(std::countr_zero(n));
  for (const Term& t : d.terms) rep.alpha += std::abs(t.weight);

  std::vector<double> uniform(n, 1.0 / std::sqrt(static_cast<double>(n)));
  rep.p_succ_uniform = success_probability(s, uniform);

  if (with_second_singular_value && n >= 2) {
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    rep.second_singular_value = svd.singularValues()(1);
  }
  return rep;
}

double success_probability(const Matrix& s, std::span<const double> psi) {
  if (psi.size() != s.dim())
    throw DimensionMismatchError("state vector length does not match matrix");
  double sq = 0.0;
  for (double v : psi) sq += v * v;
  if (std::abs(std::sqrt(sq) - 1.0) > 1e-10)
    throw NotNormalizedError("state vector is not unit norm");
  double out = 0.0;
  for (double y : s.apply(psi)) out += y * y;
  return out;
}

namespace {

using cvec = std::vector<std::complex<double>>;

// One level per qubit: split an m x m block into quadrants and emit the
// four half-size blocks that carry the I, X, Y, Z components, in label
// order. Each level halves m and scales by 1/2, which accumulates to the
// 1/N in c_P = tr(P^dag a) / N.
void pauli_transform(const cvec& a, std::size_t m, cvec& out) {
  if (m == 1) {
    out.push_back(a[0]);
    return;
  }
  const std::size_t h = m / 2;
  const std::complex<double> im(0.0, 1.0);
  cvec sub(h * h);
  for (int sigma = 0; sigma < 4; ++sigma) {
    for (std::size_t i = 0; i < h; ++i) {
      for (std::size_t j = 0; j < h; ++j) {
        const auto a00 = a[i * m + j];
        const auto a01 = a[i * m + j + h];
        const auto a10 = a[(i + h) * m + j];
        const auto a11 = a[(i + h) * m + j + h];
        std::complex<double> v;
        switch (sigma) {
          case 0: v = 0.5 * (a00 + a11); break;
          case 1: v = 0.5 * (a01 + a10); break;
          case 2: v = 0.5 * im * (a01 - a10); break;
          default: v = 0.5 * (a00 - a11); break;
        }
        sub[i * h + j] = v;
      }
    }
    pauli_transform(sub, h, out);
  }
}

}  // namespace

std::vector<std::complex<double>> pauli_coefficients(const Matrix& a) {
  const std::size_t n = a.dim();
  if (n == 0 || !std::has_single_bit(n))
    throw NotPowerOfTwoError("dimension must be a power of two");
  cvec buf(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) buf[i * n + j] = a(i, j);
  cvec out;
  out.reserve(buf.size());
  pauli_transform(buf, n, out);
  return out;
}

PauliCount pauli_term_count(const Matrix& a, double tol) {
  if (!(tol >= 0.0)) throw InvalidInputError("tolerance must be nonnegative");
  const auto coeffs = pauli_coefficients(a);
  PauliCount count;
  count.n_qubits = static_cast<unsigned>(std::countr_zero(a.dim()));
  for (const auto& c : coeffs) {
    const double mag = std::abs(c);
    count.coefficient_l1 += mag;
    if (mag > tol) ++count.nonzero_terms;
  }
  return count;
}

}  // namespace bvnkit
