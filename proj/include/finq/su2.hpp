#pragma once

#include "finq/matrix.hpp"

namespace finq {

// Spin-l angular momentum matrices in the L3 eigenbasis ordered m = l..-l.
// Satisfies [L1,L2] = i L3 (cyclic) and L1^2+L2^2+L3^2 = l(l+1) I.
struct AngularMomentumRep {
  int two_l = 0;
  int dim = 0;
  Matrix L1, L2, L3;
  Matrix Lp, Lm;  // ladder operators, kept for matrix-element checks

  double l() const { return two_l / 2.0; }
  double casimir() const { return l() * (l() + 1.0); }
};

struct RepReport {
  double commutator_residual = 0.0;  // max over the three cyclic identities
  double casimir_residual = 0.0;     // max-norm of L^2 - l(l+1) I
  double hermiticity_residual = 0.0;
};

// two_l must be a non-negative integer; dim = two_l+1 is capped by
// max_matrix_dim() unless allow_large is set.
AngularMomentumRep build_angular_momentum_2l(int two_l, bool allow_large = false);

// Convenience entry point; validates that 2l is integral.
AngularMomentumRep build_angular_momentum(double l, bool allow_large = false);

int half_integer_to_2l(double l, const char* what = "l");

RepReport rep_report(const AngularMomentumRep& rep);

// |L3 = m> basis vector (m given as 2m to stay exact).
Vector l3_eigenstate(const AngularMomentumRep& rep, int two_m);

} // namespace finq
