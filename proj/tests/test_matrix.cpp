#include <doctest.h>

#include "finq/spectrum.hpp"
#include "finq/su2.hpp"
#include "helpers.hpp"

using namespace finq;

TEST_CASE("commutator basics") {
  auto gen = testing::rng();
  const Matrix b = testing::random_matrix(gen, 4);
  const Matrix id = Matrix::Identity(4, 4);
  CHECK(max_norm(commutator(id, b)) == 0.0);

  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  Matrix n = Matrix::Zero(2, 2);
  n(0, 1) = 1.0;
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 1) = 2.0;
  CHECK(max_norm(commutator(d, n) - expected) == 0.0);

  // Pauli-matrix oracle: [L1, L2] = i L3 at l = 1/2.
  const auto rep = build_angular_momentum(0.5);
  Matrix pauli_half_z(2, 2);
  pauli_half_z << 0.5, 0, 0, -0.5;
  CHECK(max_norm(commutator(rep.L1, rep.L2) - kI * pauli_half_z) <= 1e-15);

  CHECK_THROWS_AS(commutator(Matrix::Zero(2, 2), Matrix::Zero(3, 3)), ValidationError);
}

TEST_CASE("commutator antisymmetry property") {
  auto gen = testing::rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = testing::random_matrix(gen, 5);
    const Matrix b = testing::random_matrix(gen, 5);
    CHECK(max_norm(commutator(a, b) + commutator(b, a)) == 0.0);
  }
}

TEST_CASE("hermitian eigensystem on simple inputs") {
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const Spectrum s = hermitian_eigensystem(d);
  CHECK(s.values(0) == doctest::Approx(1.0));
  CHECK(s.values(1) == doctest::Approx(2.0));
  CHECK(s.values(2) == doctest::Approx(3.0));
  CHECK(s.groups.size() == 3);

  const Spectrum z = hermitian_eigensystem(Matrix::Zero(4, 4));
  CHECK(z.groups.size() == 1);
  CHECK(z.groups[0].multiplicity == 4);
  CHECK(z.groups[0].value == 0.0);

  // l=1, kappa=1, K=1 oscillator: closed form (1/2)(l(l+1) - m^2).
  const auto rep = build_angular_momentum(1.0);
  const Matrix h = 0.5 * (rep.L2 * rep.L2 + rep.L1 * rep.L1);
  const Spectrum hs = hermitian_eigensystem(h);
  CHECK(hs.values(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(hs.values(1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(hs.values(2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hs.groups.size() == 2);
  CHECK(hs.groups[0].multiplicity == 2);

  Matrix nh = Matrix::Zero(2, 2);
  nh(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigensystem(nh), ValidationError);
}

TEST_CASE("eigensystem reconstruction and orthonormality properties") {
  auto gen = testing::rng(2);
  for (int dim : {2, 5, 12, 30}) {
    const Matrix h = testing::random_hermitian(gen, dim);
    const Spectrum s = hermitian_eigensystem(h);
    const Matrix rebuilt =
        s.vectors * s.values.asDiagonal().toDenseMatrix().cast<Complex>() * s.vectors.adjoint();
    CHECK(frobenius_norm(Matrix(rebuilt - h)) <= 1e-10 * std::max(1.0, frobenius_norm(h)));
    const Matrix gram = s.vectors.adjoint() * s.vectors;
    CHECK(max_norm(gram - Matrix::Identity(dim, dim)) <= 1e-10);
    int total = 0;
    for (const auto& g : s.groups) total += g.multiplicity;
    CHECK(total == dim);
    for (int i = 1; i < dim; ++i) CHECK(s.values(i) >= s.values(i - 1));
  }
}

TEST_CASE("eigensystem determinism is bit exact") {
  auto gen = testing::rng(3);
  const Matrix h = testing::random_hermitian(gen, 9);
  const Spectrum a = hermitian_eigensystem(h);
  const Spectrum b = hermitian_eigensystem(h);
  CHECK(std::memcmp(a.values.data(), b.values.data(), sizeof(double) * 9) == 0);
  CHECK(std::memcmp(a.vectors.data(), b.vectors.data(), sizeof(Complex) * 81) == 0);
}

TEST_CASE("expectation and variance") {
  const auto rep1 = build_angular_momentum(1.0);
  const auto mv = expectation_and_variance(rep1.L3, l3_eigenstate(rep1, 2));
  CHECK(mv.mean == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mv.variance == doctest::Approx(0.0));

  const auto rep_half = build_angular_momentum(0.5);
  const auto half = expectation_and_variance(rep_half.L1, l3_eigenstate(rep_half, 1));
  CHECK(half.mean == doctest::Approx(0.0));
  CHECK(half.variance == doctest::Approx(0.25).epsilon(1e-12));

  const auto rep10 = build_angular_momentum(10.0);
  const Matrix l1sq = rep10.L1 * rep10.L1;
  const auto big = expectation_and_variance(l1sq, l3_eigenstate(rep10, 20));
  CHECK(big.mean == doctest::Approx(5.0).epsilon(1e-12));

  Vector bad = Vector::Ones(3);
  CHECK_THROWS_AS(expectation_and_variance(Matrix::Identity(3, 3), bad), ValidationError);
}
