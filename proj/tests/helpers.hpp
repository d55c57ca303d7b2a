#pragma once

#include <random>

#include "finq/matrix.hpp"

namespace finq::testing {

// Fixed-seed generators keep every property test reproducible.
inline std::mt19937_64 rng(std::uint64_t seed = 0x5eed5eedULL) { return std::mt19937_64(seed); }

inline Matrix random_matrix(std::mt19937_64& gen, int dim) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(dist(gen), dist(gen));
  }
  return m;
}

inline Matrix random_hermitian(std::mt19937_64& gen, int dim) {
  const Matrix m = random_matrix(gen, dim);
  return (m + m.adjoint()) / 2.0;
}

inline Vector random_unit_vector(std::mt19937_64& gen, int dim) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(dist(gen), dist(gen));
  v /= v.norm();
  return v;
}

} // namespace finq::testing
