#pragma once

#include <cstdint>

#include "bvnkit/matrix.hpp"

namespace bvnkit {

// I.i.d. uniform draws from the open interval (0, 1), bitwise
// reproducible for a fixed seed across platforms (mt19937_64 with an
// explicit 53-bit mapping; no distribution objects involved).
Matrix random_positive_matrix(std::size_t n, std::uint64_t seed);

// Uniform (0,1) entries scaled to doubly stochastic form. Strictly
// positive inputs always converge.
Matrix random_doubly_stochastic(std::size_t n, std::uint64_t seed,
                                double tol = 1e-10);

}  // namespace bvnkit
