#include "finq/su2.hpp"

#include <cmath>
#include <string>

namespace finq {

int half_integer_to_2l(double l, const char* what) {
  const double two_l = 2.0 * l;
  const double rounded = std::round(two_l);
  if (l < 0.0 || std::abs(two_l - rounded) > 1e-9) {
    throw ValidationError(std::string(what) + " must be a non-negative half-integer, got " +
                          std::to_string(l));
  }
  return static_cast<int>(rounded);
}

AngularMomentumRep build_angular_momentum_2l(int two_l, bool allow_large) {
  if (two_l < 0) throw ValidationError("build_angular_momentum: 2l must be non-negative");
  const int dim = two_l + 1;
  if (!allow_large && dim > max_matrix_dim()) {
    throw ResourceError("build_angular_momentum: dim " + std::to_string(dim) +
                        " exceeds cap " + std::to_string(max_matrix_dim()));
  }

  AngularMomentumRep rep;
  rep.two_l = two_l;
  rep.dim = dim;
  const double l = two_l / 2.0;
  const double cas = l * (l + 1.0);

  rep.L3 = Matrix::Zero(dim, dim);
  rep.Lp = Matrix::Zero(dim, dim);
  rep.Lm = Matrix::Zero(dim, dim);
  // Row k holds m = l - k. L+ |m> = sqrt(l(l+1) - m(m+1)) |m+1>.
  for (int k = 0; k < dim; ++k) {
    const double m = l - k;
    rep.L3(k, k) = m;
    if (k > 0) rep.Lp(k - 1, k) = std::sqrt(cas - m * (m + 1.0));
    if (k < dim - 1) rep.Lm(k + 1, k) = std::sqrt(cas - m * (m - 1.0));
  }
  rep.L1 = (rep.Lp + rep.Lm) / 2.0;
  rep.L2 = (rep.Lp - rep.Lm) / (2.0 * kI);
  return rep;
}

AngularMomentumRep build_angular_momentum(double l, bool allow_large) {
  return build_angular_momentum_2l(half_integer_to_2l(l), allow_large);
}

RepReport rep_report(const AngularMomentumRep& rep) {
  RepReport r;
  const Matrix i_l1 = kI * rep.L1;
  const Matrix i_l2 = kI * rep.L2;
  const Matrix i_l3 = kI * rep.L3;
  r.commutator_residual = std::max({max_norm(commutator(rep.L1, rep.L2) - i_l3),
                                    max_norm(commutator(rep.L2, rep.L3) - i_l1),
                                    max_norm(commutator(rep.L3, rep.L1) - i_l2)});
  const Matrix cas = rep.L1 * rep.L1 + rep.L2 * rep.L2 + rep.L3 * rep.L3;
  r.casimir_residual =
      max_norm(cas - rep.casimir() * Matrix::Identity(rep.dim, rep.dim));
  r.hermiticity_residual = std::max({max_norm(rep.L1 - rep.L1.adjoint()),
                                     max_norm(rep.L2 - rep.L2.adjoint()),
                                     max_norm(rep.L3 - rep.L3.adjoint())});
  return r;
}

Vector l3_eigenstate(const AngularMomentumRep& rep, int two_m) {
  if (std::abs(two_m) > rep.two_l || (rep.two_l - two_m) % 2 != 0) {
    throw ValidationError("l3_eigenstate: m must be in {-l..l} with l-m integral");
  }
  Vector v = Vector::Zero(rep.dim);
  v((rep.two_l - two_m) / 2) = 1.0;
  return v;
}

} // namespace finq
