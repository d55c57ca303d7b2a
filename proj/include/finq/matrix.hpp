#pragma once

#include <Eigen/Dense>
#include <complex>

#include "finq/error.hpp"

namespace finq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// Size cap for dense work; overridable via the FINQ_MAX_DIM environment
// variable or an explicit opt-in at the call site.
int max_matrix_dim();

// Entrywise max |.| norm.
double max_norm(const Matrix& a);

double frobenius_norm(const Matrix& a);

bool all_finite(const Matrix& a);

// ab - ba. Throws ValidationError on shape mismatch.
Matrix commutator(const Matrix& a, const Matrix& b);

// ab + ba.
Matrix anticommutator(const Matrix& a, const Matrix& b);

// ||h - h^dagger||_F relative to ||h||_F (absolute for near-zero h).
double hermiticity_defect(const Matrix& h);

bool is_hermitian(const Matrix& h, double tol = 1e-10);

struct MeanVariance {
  double mean = 0.0;
  double variance = 0.0;
};

// <psi|op|psi> and <op^2> - <op>^2 for Hermitian op on a unit vector.
// Variance is clamped to 0 from tiny negative round-off.
MeanVariance expectation_and_variance(const Matrix& op, const Vector& state);

} // namespace finq
