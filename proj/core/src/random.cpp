#include "bvnkit/random.hpp"

#include <random>
#include <vector>

#include "bvnkit/errors.hpp"
#include "bvnkit/sinkhorn.hpp"

namespace bvnkit {

Matrix random_positive_matrix(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidInputError("dimension must be positive");
  std::mt19937_64 eng(seed);
  std::vector<double> entries(n * n);
  for (double& v : entries) {
    // Top 53 bits, offset by half a step: lands strictly inside (0, 1).
    v = (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
  }
  return Matrix(n, std::move(entries));
}

Matrix random_doubly_stochastic(std::size_t n, std::uint64_t seed, double tol) {
  if (n < 2) throw InvalidInputError("need dimension at least 2");
  return sinkhorn_scale(random_positive_matrix(n, seed), tol).s;
}

}  // namespace bvnkit
