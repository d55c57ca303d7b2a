#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finq/constants.hpp"
#include "finq/matrix.hpp"

namespace finq {

// Generators of Cl(p,q) built by a fixed Kronecker recursion over Pauli
// factors. For m = p+q total generators (m even) the k-th prototype pair is
//   proto(2k-1) = s3^(k-1) (x) s1 (x) I^(m/2-k)
//   proto(2k)   = s3^(k-1) (x) s2 (x) I^(m/2-k)
// with s1 = [[0,1],[1,0]], s2 = [[0,-i],[i,0]], s3 = [[1,0],[0,-1]], all
// factors ordered left to right in the tensor chain. Negative-signature
// generators are the prototypes multiplied by the imaginary unit, so positive
// generators are Hermitian involutions and negative ones anti-Hermitian.
struct CliffordRep {
  std::vector<int> signature;   // +1 / -1 per generator
  int p_pos = 0;
  int q_neg = 0;
  int dim = 0;                  // spinor dimension 2^(total/2)
  std::vector<Matrix> gamma;

  int total() const { return p_pos + q_neg; }
};

// Signature ordering follows the metric convention diag(-1,...,+1,...):
// the q_neg negative generators come first.
CliffordRep build_clifford(int p_pos, int q_neg, bool allow_large = false);

// Explicit per-index signature (entries +1 or -1).
CliffordRep build_clifford_signature(const std::vector<int>& signature, bool allow_large = false);

// max-norm of {gamma_a, gamma_b} - 2 eta_ab I over all pairs; exactly 0 for
// the recursion above.
double anticommutation_residual(const CliffordRep& rep);

// FNV-1a 64 over a canonical text serialization of the generator list.
std::uint64_t golden_hash(const CliffordRep& rep);
std::uint64_t fnv1a64(const std::string& bytes);

// Stationary oscillator triple over 3N positive generators grouped in N
// replicas: q = Q sum_n gamma_31(n), p = Qp sum_n gamma_23(n),
// r = Qr sum_n gamma_12(n), with gamma_ab(n) = gamma_a(n) gamma_b(n).
struct StationaryRep {
  CliffordRep cl;
  Matrix q, p, r;
  int n_replicas = 0;
  // Measured pattern constants: [q,p] = hbar_eff r, [r,q] = hbar1_eff p,
  // [p,r] = hbar2_eff q. Each comes out at twice the corresponding scale.
  double hbar_eff = 0.0;
  double hbar1_eff = 0.0;
  double hbar2_eff = 0.0;
  double closure_residual = 0.0;
};

StationaryRep stationary_rep(int n_replicas, const QuantumConstants& qc,
                             bool allow_large = false);

// Dynamical representation on Cl(3N,N): N replicas of signature (-,+,+,+),
// Gamma_munu = sum_n gamma_mu(n) gamma_nu(n), and the commutation action
// Lhat = Gamma (x) I - I (x) Gamma^T on the 2^(4N)-dimensional algebra.
struct DynamicalRep {
  CliffordRep cl;
  std::vector<Matrix> gamma_pairs;  // six spinor-level Gamma, pair order (12..34)
  std::vector<Matrix> action;       // six commutation-action matrices
  int spinor_dim = 0;
  int action_dim = 0;
  double closure_residual = 0.0;          // against c * defining so(3,1) tensor
  double structure_constant_ratio = 0.0;  // the single c
};

DynamicalRep dynamical_rep(int n_replicas, bool allow_large = false);

Matrix kronecker(const Matrix& a, const Matrix& b);

// Dimension of {X : [X, G] = 0 for all G}; diagnostic for block structure.
int commutant_dimension(const std::vector<Matrix>& generators);

} // namespace finq
