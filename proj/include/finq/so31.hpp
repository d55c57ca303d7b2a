#pragma once

#include <array>
#include <string>
#include <vector>

#include "finq/lie.hpp"
#include "finq/matrix.hpp"

namespace finq {

// The six quantum units of b, q, p, t, E, r. Valid ledgers satisfy
//   Qt*Qr^2 = QE*Qq*Qp            (Jacobi-derived constraint)
//   Qq*Qp/Qr = Qt*QE/Qr = hbar    (the two hbar routes agree)
struct ConstantLedger {
  double Qb = 1.0, Qq = 1.0, Qp = 1.0, Qt = 1.0, QE = 1.0, Qr = 1.0;

  double hbar() const { return Qq * Qp / Qr; }
  double hbar_te() const { return Qt * QE / Qr; }
  double quantum(int physical_index) const;  // order b,q,p,t,E,r
};

ConstantLedger make_ledger(double Qb, double Qq, double Qp, double Qt, double QE, double Qr);

// g = diag(-1,+1,+1,+1) on indices 1..4.
RealMatrix so31_metric();

// The six 4x4 generators (L_ij)^a_b = delta^a_i g_jb - delta^a_j g_ib in the
// fixed pair order (12, 13, 14, 23, 24, 34), obeying
// [L_ij, L_kl] = g_jk L_il - g_jl L_ik - g_ik L_jl + g_il L_jk.
struct So31Rep {
  std::vector<Matrix> L;                       // six matrices, pair order
  std::vector<std::pair<int, int>> pairs;      // 1-based index pairs
  std::vector<std::string> pair_labels;        // "L12".."L34"
};

So31Rep defining_rep_so31();

// Physical generators in the order b, q, p, t, E, r:
//   b = -Qb*M12, q = +Qq*M23, p = +Qp*M24,
//   t = -Qt*M13, E = -QE*M14, r = +Qr*M34,
// optionally with the extra 1/2 used for the Clifford commutation action.
struct PhysicalGenerators {
  ConstantLedger ledger;
  std::array<Matrix, 6> ops;
  static const std::array<const char*, 6> kLabels;  // {"b","q","p","t","E","r"}
};

PhysicalGenerators physical_generators(const ConstantLedger& ledger,
                                       const std::vector<Matrix>& six_pair_ordered,
                                       bool half_normalization = false);
PhysicalGenerators physical_generators(const ConstantLedger& ledger, const So31Rep& rep);

struct CommutatorRow {
  std::string v, w;            // bracket [v, w], paper's row orientation
  std::string target;          // generator label, or "0" for a vanishing row
  double coeff_measured = 0.0;
  double coeff_pattern = 0.0;  // Qv*Qw/Qu for the measured target u
  int paper_sign = 0;          // sign in the paper's table (+1/-1/0)
  bool sign_match = false;
  double residual = 0.0;       // remainder orthogonal to the 6-generator span
};

struct CommutatorTable {
  std::vector<CommutatorRow> rows;   // all 15 pairs
  double global_constant = 0.0;      // common |coeff|/pattern over nonzero rows
  double global_constant_spread = 0.0;
  double max_residual = 0.0;
  int zero_rows = 0;
};

// Decomposes every pairwise bracket over the six generators; throws
// StructuralError when a bracket fails to close to 1e-10 relative.
CommutatorTable commutator_table(const PhysicalGenerators& gens);

struct JacobiChain {
  double hbar = 0.0;     // Qq*Qp/Qr
  double hbar_pb = 0.0;  // Qp*Qb/QE
  double hbar_qt = 0.0;  // Qq*Qt/Qb
  double lhs = 0.0;      // hbar^2
  double rhs = 0.0;      // hbar_pb * hbar_qt
  double rel_error = 0.0;
};

JacobiChain jacobi_constraint_chain(const ConstantLedger& ledger);

struct DeviationRecord {
  double dev_qt = 0.0;   // ||[q,t]||_F / ||b||_F
  double dev_Ep = 0.0;   // ||[E,p]||_F / ||b||_F
  double dev_rq = 0.0;   // ||[r,q]||_F / ||p||_F
  double dev_rp = 0.0;   // ||[r,p]||_F / ||q||_F
  double dev_rt = 0.0;   // ||[r,t]||_F / ||E||_F
  double dev_rE = 0.0;   // ||[r,E]||_F / ||t||_F
  double zero_Eq = 0.0;  // absolute bracket norms of the three vanishing rows
  double zero_br = 0.0;
  double zero_pt = 0.0;
  double te_defect = 0.0;  // ||[t,E] + hbar * r/spectral_radius(r)||_F
};

struct DeviationSeries {
  std::vector<DeviationRecord> records;
  bool b_channel_monotone = false;  // dev_qt and dev_Ep strictly decreasing
};

DeviationSeries singular_limit_deviation(const std::vector<ConstantLedger>& ledgers,
                                         const std::vector<Matrix>& six_pair_ordered,
                                         bool half_normalization = false);

struct DynamicalConstraint {
  Matrix op;               // A*M14 - B*M23^2 - C*M24^2
  Matrix probe;            // [C*M24^2, A*M14 - B*M23^2]
  double probe_norm = 0.0;
};

DynamicalConstraint dynamical_constraint(double A, double B, double C,
                                         const std::vector<Matrix>& six_pair_ordered);

struct TimeProfile {
  std::string character;  // "real" or "imaginary"
  std::vector<double> values;        // distinct eigenvalue parts, ascending
  std::vector<int> multiplicities;
};

// Histogram of the spectrum of a (anti-)Hermitian operator; throws
// DiagnosticError for operators outside those classes or defective input.
TimeProfile time_spectrum_profile(const Matrix& t_operator, double degeneracy_tol = -1.0);

} // namespace finq
