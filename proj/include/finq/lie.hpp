#pragma once

#include <string>
#include <vector>

#include "finq/matrix.hpp"

namespace finq {

// Antisymmetric structure coefficients c^k_ij of a finite-dimensional
// bracket, [e_i, e_j] = sum_k c^k_ij e_k. Antisymmetry in (i,j) is enforced
// by construction; the Jacobi law is reported, never assumed.
class StructureTensor {
public:
  StructureTensor(int dim, std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  double c(int k, int i, int j) const { return coeff_[index(k, i, j)]; }
  // Sets c^k_ij and c^k_ji = -c^k_ij.
  void set(int k, int i, int j, double value);

private:
  std::size_t index(int k, int i, int j) const;
  int dim_;
  std::vector<std::string> labels_;
  std::vector<double> coeff_;
};

// max_{i,j,k,m} |sum_a (c^a_ij c^m_ak + c^a_jk c^m_ai + c^a_ki c^m_aj)|.
double jacobi_residual(const StructureTensor& t);

struct KillingReport {
  RealMatrix killing;      // B_ij = sum_{a,b} c^a_ib c^b_ja
  int rank = 0;            // singular values above 1e-10 * max
  int positive = 0;        // eigenvalue signature of the symmetric form
  int negative = 0;
  int zero = 0;
  bool semisimple = false; // Cartan: nondegenerate Killing form
  std::vector<double> singular_values;  // descending
};

// Requires jacobi_residual(t) <= 1e-10.
KillingReport killing_report(const StructureTensor& t);

// Brackets [q,p] = hbar r, [r,q] = eps hbar' p, [p,r] = eps hbar'' q on the
// basis (q,p,r). eps = 0 is the Heisenberg algebra dH(1), eps = 1 the fully
// flexed so(3)-type algebra.
StructureTensor flexed_oscillator_algebra(double hbar, double hbar1, double hbar2, double eps);

// Equivalent Inonu-Wigner style basis rescaling (q,p -> eps*(q,p),
// r -> eps^2 r): identical to flexed_oscillator_algebra at eps^2.
StructureTensor flexed_by_rescaling(double hbar, double hbar1, double hbar2, double eps);

StructureTensor so3_epsilon_tensor();
StructureTensor heisenberg_tensor(double hbar = 1.0);

// Max-norm coefficient distance between two tensors on the same basis.
double contraction_distance(const StructureTensor& a, const StructureTensor& b);

// A list of generator matrices with labels; closure under commutation is
// checked numerically, not assumed.
struct LieBasisRep {
  std::vector<Matrix> generators;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(generators.size()); }
};

struct ClosureResult {
  double residual = 0.0;          // max orthogonal remainder over all pairs
  StructureTensor tensor;         // least-squares coefficients
};

// Decompose every pairwise commutator over the basis (Frobenius least
// squares) and report the largest remainder.
ClosureResult closure_check(const LieBasisRep& rep);

// Coefficients of `target` over the basis, plus the orthogonal remainder.
std::pair<std::vector<double>, double> decompose_over_basis(const std::vector<Matrix>& basis,
                                                            const Matrix& target);

struct ALineRep {
  LieBasisRep basis;          // all (n+1)^2 matrix units E_mu_nu
  LieBasisRep traceless;      // basis with sum_mu E_mu_mu projected out of the diagonal
  std::vector<Matrix> q;      // q^mu = E_mu0, mu = 1..n
  std::vector<Matrix> p;      // p_mu = E_0mu
  Matrix r;                   // E_00
  std::vector<Matrix> q_hermitian;  // (E_mu0 + E_0mu)/2
  std::vector<Matrix> p_hermitian;  // i (E_mu0 - E_0mu)/2
};

ALineRep a_line_rep(int n);

struct DLineRep {
  LieBasisRep basis;          // o_ab = e_ab - e_ba, a < b, in dim n+2
  std::vector<Matrix> q;      // Q * o_{mu,n+1}
  std::vector<Matrix> p;      // P * o_{mu,n+2}
  Matrix r;                   // R * o_{n+1,n+2}
  double qp_coefficient = 0.0;  // measured factor in [q^mu, p^mu] = coeff * r
};

DLineRep d_line_rep(int n, double Q, double P, double R);

} // namespace finq
