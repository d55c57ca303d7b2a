#include "finq/lie.hpp"

#include <algorithm>
#include <cmath>

namespace finq {

StructureTensor::StructureTensor(int dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
  if (dim <= 0) throw ValidationError("StructureTensor: dim must be positive");
  if (labels_.empty()) {
    for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<int>(labels_.size()) != dim) {
    throw ValidationError("StructureTensor: label count does not match dim");
  }
  coeff_.assign(static_cast<std::size_t>(dim) * dim * dim, 0.0);
}

std::size_t StructureTensor::index(int k, int i, int j) const {
  return (static_cast<std::size_t>(k) * dim_ + i) * dim_ + j;
}

void StructureTensor::set(int k, int i, int j, double value) {
  if (k < 0 || k >= dim_ || i < 0 || i >= dim_ || j < 0 || j >= dim_) {
    throw ValidationError("StructureTensor::set: index out of range");
  }
  coeff_[index(k, i, j)] = value;
  coeff_[index(k, j, i)] = -value;
}

double jacobi_residual(const StructureTensor& t) {
  const int n = t.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int m = 0; m < n; ++m) {
          double sum = 0.0;
          for (int a = 0; a < n; ++a) {
            sum += t.c(a, i, j) * t.c(m, a, k) + t.c(a, j, k) * t.c(m, a, i) +
                   t.c(a, k, i) * t.c(m, a, j);
          }
          worst = std::max(worst, std::abs(sum));
        }
      }
    }
  }
  return worst;
}

KillingReport killing_report(const StructureTensor& t) {
  const double jac = jacobi_residual(t);
  if (jac > 1e-10) {
    throw ValidationError("killing_report: Jacobi residual " + std::to_string(jac) +
                          " exceeds 1e-10; not a Lie bracket");
  }
  const int n = t.dim();
  KillingReport report;
  report.killing = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) sum += t.c(a, i, b) * t.c(b, j, a);
      }
      report.killing(i, j) = sum;
    }
  }

  Eigen::JacobiSVD<RealMatrix> svd(report.killing);
  const auto& sv = svd.singularValues();
  for (int i = 0; i < sv.size(); ++i) report.singular_values.push_back(sv(i));
  const double tol = sv.size() > 0 ? 1e-10 * sv(0) : 0.0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol) ++report.rank;
  }
  report.semisimple = report.rank == n;

  Eigen::SelfAdjointEigenSolver<RealMatrix> es(
      RealMatrix((report.killing + report.killing.transpose()) / 2.0));
  for (int i = 0; i < n; ++i) {
    const double ev = es.eigenvalues()(i);
    if (ev > tol) {
      ++report.positive;
    } else if (ev < -tol) {
      ++report.negative;
    } else {
      ++report.zero;
    }
  }
  return report;
}

StructureTensor flexed_oscillator_algebra(double hbar, double hbar1, double hbar2, double eps) {
  if (hbar <= 0.0 || hbar1 <= 0.0 || hbar2 <= 0.0) {
    throw ValidationError("flexed_oscillator_algebra: constants must be positive");
  }
  if (eps < 0.0 || eps > 1.0) {
    throw ValidationError("flexed_oscillator_algebra: eps must lie in [0,1]");
  }
  StructureTensor t(3, {"q", "p", "r"});
  t.set(2, 0, 1, hbar);         // [q,p] = hbar r
  t.set(1, 2, 0, eps * hbar1);  // [r,q] = eps hbar' p
  t.set(0, 1, 2, eps * hbar2);  // [p,r] = eps hbar'' q
  return t;
}

StructureTensor flexed_by_rescaling(double hbar, double hbar1, double hbar2, double eps) {
  // Basis change q' = eps q, p' = eps p, r' = eps^2 r of the eps = 1 algebra.
  return flexed_oscillator_algebra(hbar, hbar1, hbar2, eps * eps);
}

StructureTensor so3_epsilon_tensor() {
  StructureTensor t(3);
  t.set(2, 0, 1, 1.0);
  t.set(0, 1, 2, 1.0);
  t.set(1, 2, 0, 1.0);
  return t;
}

StructureTensor heisenberg_tensor(double hbar) {
  StructureTensor t(3, {"q", "p", "1"});
  t.set(2, 0, 1, hbar);
  return t;
}

double contraction_distance(const StructureTensor& a, const StructureTensor& b) {
  if (a.dim() != b.dim()) throw ValidationError("contraction_distance: dimension mismatch");
  if (a.labels() != b.labels()) {
    throw ValidationError("contraction_distance: basis labels differ");
  }
  double worst = 0.0;
  for (int k = 0; k < a.dim(); ++k) {
    for (int i = 0; i < a.dim(); ++i) {
      for (int j = 0; j < a.dim(); ++j) {
        worst = std::max(worst, std::abs(a.c(k, i, j) - b.c(k, i, j)));
      }
    }
  }
  return worst;
}

std::pair<std::vector<double>, double> decompose_over_basis(const std::vector<Matrix>& basis,
                                                            const Matrix& target) {
  const int n = static_cast<int>(basis.size());
  RealMatrix gram(n, n);
  RealVector rhs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      gram(i, j) = (basis[i].adjoint() * basis[j]).trace().real();
    }
    rhs(i) = (basis[i].adjoint() * target).trace().real();
  }
  const RealVector x = gram.ldlt().solve(rhs);
  Matrix remainder = target;
  for (int i = 0; i < n; ++i) remainder -= x(i) * basis[i];
  std::vector<double> coeffs(x.data(), x.data() + n);
  return {coeffs, max_norm(remainder)};
}

ClosureResult closure_check(const LieBasisRep& rep) {
  const int n = rep.size();
  if (n == 0) throw ValidationError("closure_check: empty basis");
  ClosureResult result{0.0, StructureTensor(n, rep.labels)};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Matrix br = commutator(rep.generators[i], rep.generators[j]);
      auto [coeffs, remainder] = decompose_over_basis(rep.generators, br);
      for (int k = 0; k < n; ++k) result.tensor.set(k, i, j, coeffs[k]);
      result.residual = std::max(result.residual, remainder);
    }
  }
  return result;
}

namespace {

Matrix matrix_unit(int dim, int row, int col) {
  Matrix m = Matrix::Zero(dim, dim);
  m(row, col) = 1.0;
  return m;
}

} // namespace

ALineRep a_line_rep(int n) {
  if (n < 1) throw ValidationError("a_line_rep: n must be >= 1");
  const int dim = n + 1;
  ALineRep rep;
  for (int mu = 0; mu < dim; ++mu) {
    for (int nu = 0; nu < dim; ++nu) {
      rep.basis.generators.push_back(matrix_unit(dim, mu, nu));
      rep.basis.labels.push_back("E" + std::to_string(mu) + std::to_string(nu));
    }
  }
  // Traceless companion: project the identity component out of the diagonal
  // units, realizing the unit-sum constraint on the diagonal generators.
  const Matrix id_part = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  for (int mu = 0; mu < dim; ++mu) {
    for (int nu = 0; nu < dim; ++nu) {
      Matrix g = matrix_unit(dim, mu, nu);
      if (mu == nu) g -= id_part;
      rep.traceless.generators.push_back(std::move(g));
      rep.traceless.labels.push_back("T" + std::to_string(mu) + std::to_string(nu));
    }
  }
  for (int mu = 1; mu <= n; ++mu) {
    rep.q.push_back(matrix_unit(dim, mu, 0));
    rep.p.push_back(matrix_unit(dim, 0, mu));
    rep.q_hermitian.push_back((matrix_unit(dim, mu, 0) + matrix_unit(dim, 0, mu)) / 2.0);
    rep.p_hermitian.push_back(kI * (matrix_unit(dim, mu, 0) - matrix_unit(dim, 0, mu)) / 2.0);
  }
  rep.r = matrix_unit(dim, 0, 0);
  return rep;
}

DLineRep d_line_rep(int n, double Q, double P, double R) {
  if (n < 2 || n % 2 != 0) throw ValidationError("d_line_rep: n must be even and >= 2");
  if (Q <= 0.0 || P <= 0.0 || R <= 0.0) {
    throw ValidationError("d_line_rep: regulants must be positive");
  }
  const int dim = n + 2;
  auto o = [&](int a, int b) {
    Matrix m = Matrix::Zero(dim, dim);
    m(a, b) = 1.0;
    m(b, a) = -1.0;
    return m;
  };

  DLineRep rep;
  for (int a = 0; a < dim; ++a) {
    for (int b = a + 1; b < dim; ++b) {
      rep.basis.generators.push_back(o(a, b));
      rep.basis.labels.push_back("o" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  }
  for (int mu = 0; mu < n; ++mu) {
    rep.q.push_back(Q * o(mu, n));
    rep.p.push_back(P * o(mu, n + 1));
  }
  rep.r = R * o(n, n + 1);

  const Matrix br = commutator(rep.q[0], rep.p[0]);
  auto [coeffs, remainder] = decompose_over_basis({rep.r}, br);
  if (remainder > 1e-12 * Q * P) {
    throw StructuralError("d_line_rep: [q,p] not proportional to r");
  }
  rep.qp_coefficient = coeffs[0];
  return rep;
}

} // namespace finq
