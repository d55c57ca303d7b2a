#include "finq/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace finq {

int max_matrix_dim() {
  static const int cap = [] {
    if (const char* env = std::getenv("FINQ_MAX_DIM")) {
      const int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 20001;
  }();
  return cap;
}

double max_norm(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double frobenius_norm(const Matrix& a) { return a.norm(); }

bool all_finite(const Matrix& a) { return a.allFinite(); }

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw ValidationError("commutator: dimension mismatch (" + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()) + ")");
  }
  return a * b - b * a;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw ValidationError("anticommutator: dimension mismatch");
  }
  return a * b + b * a;
}

double hermiticity_defect(const Matrix& h) {
  const double scale = frobenius_norm(h);
  const double defect = frobenius_norm(Matrix(h - h.adjoint()));
  return scale > 0.0 ? defect / scale : defect;
}

bool is_hermitian(const Matrix& h, double tol) {
  return h.rows() == h.cols() && hermiticity_defect(h) <= tol;
}

MeanVariance expectation_and_variance(const Matrix& op, const Vector& state) {
  if (op.rows() != op.cols() || op.rows() != state.size()) {
    throw ValidationError("expectation_and_variance: operator/state dimension mismatch");
  }
  const double nrm = state.norm();
  if (std::abs(nrm - 1.0) > 1e-10) {
    throw ValidationError("expectation_and_variance: state not normalized (|norm-1| = " +
                          std::to_string(std::abs(nrm - 1.0)) + ")");
  }
  if (!is_hermitian(op)) {
    throw ValidationError("expectation_and_variance: operator not Hermitian");
  }
  const Vector op_psi = op * state;
  const Complex mean_c = state.dot(op_psi);
  if (std::abs(mean_c.imag()) > 1e-10) {
    throw ValidationError("expectation_and_variance: non-real expectation value");
  }
  const double mean = mean_c.real();
  // <op^2> as ||op psi||^2 keeps the variance real and non-negative up to round-off.
  const double second = op_psi.squaredNorm();
  double variance = second - mean * mean;
  if (variance < 0.0) variance = 0.0;
  return {mean, variance};
}

} // namespace finq
