#include "finq/so31.hpp"

#include <algorithm>
#include <cmath>

#include "finq/spectrum.hpp"

namespace finq {

const std::array<const char*, 6> PhysicalGenerators::kLabels = {"b", "q", "p", "t", "E", "r"};

double ConstantLedger::quantum(int physical_index) const {
  switch (physical_index) {
    case 0: return Qb;
    case 1: return Qq;
    case 2: return Qp;
    case 3: return Qt;
    case 4: return QE;
    case 5: return Qr;
  }
  throw ValidationError("ConstantLedger::quantum: index out of range");
}

ConstantLedger make_ledger(double Qb, double Qq, double Qp, double Qt, double QE, double Qr) {
  const double vals[] = {Qb, Qq, Qp, Qt, QE, Qr};
  for (double v : vals) {
    if (!(v > 0.0)) throw ValidationError("make_ledger: all six quanta must be positive");
  }
  ConstantLedger ledger{Qb, Qq, Qp, Qt, QE, Qr};
  const double lhs = Qt * Qr * Qr;
  const double rhs = QE * Qq * Qp;
  const double constraint_residual = std::abs(lhs - rhs) / std::max(lhs, rhs);
  if (constraint_residual > 1e-9) {
    throw ValidationError("make_ledger: constraint Qt*Qr^2 = QE*Qq*Qp violated, residual " +
                          std::to_string(constraint_residual));
  }
  const double hbar_residual =
      std::abs(ledger.hbar() - ledger.hbar_te()) / std::max(ledger.hbar(), ledger.hbar_te());
  if (hbar_residual > 1e-9) {
    throw ValidationError("make_ledger: Qq*Qp/Qr and Qt*QE/Qr disagree, residual " +
                          std::to_string(hbar_residual));
  }
  return ledger;
}

RealMatrix so31_metric() {
  RealMatrix g = RealMatrix::Identity(4, 4);
  g(0, 0) = -1.0;
  return g;
}

So31Rep defining_rep_so31() {
  const RealMatrix g = so31_metric();
  So31Rep rep;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Matrix L = Matrix::Zero(4, 4);
      for (int b = 0; b < 4; ++b) {
        L(i, b) += g(j, b);
        L(j, b) -= g(i, b);
      }
      rep.L.push_back(std::move(L));
      rep.pairs.emplace_back(i + 1, j + 1);
      rep.pair_labels.push_back("L" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  return rep;
}

namespace {

// Physical generator -> (pair index in (12,13,14,23,24,34) order, sign).
constexpr int kPairIndex[6] = {0, 3, 4, 1, 2, 5};
constexpr double kSign[6] = {-1.0, +1.0, +1.0, -1.0, -1.0, +1.0};

} // namespace

PhysicalGenerators physical_generators(const ConstantLedger& ledger,
                                       const std::vector<Matrix>& six, bool half_normalization) {
  if (six.size() != 6) {
    throw ValidationError("physical_generators: expected six pair-ordered generators");
  }
  PhysicalGenerators g;
  g.ledger = ledger;
  const double s = half_normalization ? 0.5 : 1.0;
  for (int k = 0; k < 6; ++k) {
    g.ops[k] = kSign[k] * s * ledger.quantum(k) * six[kPairIndex[k]];
  }
  return g;
}

PhysicalGenerators physical_generators(const ConstantLedger& ledger, const So31Rep& rep) {
  return physical_generators(ledger, rep.L, false);
}

namespace {

// The 15 rows of the paper's table, in its order and orientation, with the
// tabulated sign of the right-hand side (0 marks a vanishing bracket).
struct PaperRow {
  int v, w;    // indices into (b,q,p,t,E,r)
  int sign;
};

constexpr PaperRow kPaperRows[15] = {
    {1, 2, +1},  // [q,p] ~ +r
    {5, 1, +1},  // [r,q] ~ +p
    {2, 5, +1},  // [p,r] ~ +q
    {3, 4, +1},  // [t,E] ~ +r
    {5, 3, +1},  // [r,t] ~ +E
    {1, 3, -1},  // [q,t] ~ -b
    {4, 5, +1},  // [E,r] ~ +t
    {4, 1, 0},   // [E,q] = 0
    {4, 2, +1},  // [E,p] ~ +b
    {0, 4, +1},  // [b,E] ~ +p
    {0, 2, -1},  // [b,p] ~ -E
    {0, 1, -1},  // [b,q] ~ -t
    {0, 3, +1},  // [b,t] ~ +q
    {0, 5, 0},   // [b,r] = 0
    {2, 3, 0},   // [p,t] = 0
};

} // namespace

CommutatorTable commutator_table(const PhysicalGenerators& gens) {
  CommutatorTable table;
  std::vector<Matrix> basis(gens.ops.begin(), gens.ops.end());

  double c_min = 0.0, c_max = 0.0;
  bool have_c = false;
  for (const PaperRow& row : kPaperRows) {
    CommutatorRow out;
    out.v = PhysicalGenerators::kLabels[row.v];
    out.w = PhysicalGenerators::kLabels[row.w];
    out.paper_sign = row.sign;

    const Matrix br = commutator(gens.ops[row.v], gens.ops[row.w]);
    const double scale =
        frobenius_norm(gens.ops[row.v]) * frobenius_norm(gens.ops[row.w]);
    auto [coeffs, remainder] = decompose_over_basis(basis, br);
    if (remainder > 1e-10 * scale) {
      throw StructuralError("commutator_table: bracket [" + out.v + "," + out.w +
                            "] does not close on the six generators");
    }

    // Pick the dominant component; fold the others into the residual.
    int target = -1;
    double best = 0.0;
    for (int k = 0; k < 6; ++k) {
      const double significance = std::abs(coeffs[k]) * frobenius_norm(basis[k]);
      if (significance > best) {
        best = significance;
        target = k;
      }
    }
    const double zero_tol = 1e-12 * std::max(scale, 1e-300);
    if (frobenius_norm(br) <= zero_tol) {
      out.target = "0";
      out.coeff_measured = 0.0;
      out.coeff_pattern = 0.0;
      out.sign_match = row.sign == 0;
      out.residual = frobenius_norm(br);
      ++table.zero_rows;
    } else {
      Matrix off_target = br - coeffs[target] * basis[target];
      out.target = PhysicalGenerators::kLabels[target];
      out.coeff_measured = coeffs[target];
      out.coeff_pattern = gens.ledger.quantum(row.v) * gens.ledger.quantum(row.w) /
                          gens.ledger.quantum(target);
      out.sign_match = (out.coeff_measured > 0 ? +1 : -1) == row.sign;
      out.residual = frobenius_norm(off_target);
      const double c = std::abs(out.coeff_measured) / out.coeff_pattern;
      if (!have_c) {
        c_min = c_max = c;
        have_c = true;
      } else {
        c_min = std::min(c_min, c);
        c_max = std::max(c_max, c);
      }
    }
    table.max_residual = std::max(table.max_residual, out.residual);
    table.rows.push_back(std::move(out));
  }
  table.global_constant = (c_min + c_max) / 2.0;
  table.global_constant_spread = c_max - c_min;
  return table;
}

JacobiChain jacobi_constraint_chain(const ConstantLedger& ledger) {
  JacobiChain chain;
  chain.hbar = ledger.hbar();
  chain.hbar_pb = ledger.Qp * ledger.Qb / ledger.QE;
  chain.hbar_qt = ledger.Qq * ledger.Qt / ledger.Qb;
  chain.lhs = chain.hbar * chain.hbar;
  chain.rhs = chain.hbar_pb * chain.hbar_qt;
  chain.rel_error = std::abs(chain.lhs - chain.rhs) / std::max(chain.lhs, chain.rhs);
  return chain;
}

namespace {

double spectral_radius_antihermitian_pair(const Matrix& m) {
  // Works for Hermitian or anti-Hermitian m.
  if (hermiticity_defect(m) <= 1e-10) {
    const Spectrum s = hermitian_eigensystem(m);
    return std::max(std::abs(s.min()), std::abs(s.max()));
  }
  const Matrix h = m / kI;
  if (hermiticity_defect(h) <= 1e-10) {
    const Spectrum s = hermitian_eigensystem(h);
    return std::max(std::abs(s.min()), std::abs(s.max()));
  }
  Eigen::ComplexEigenSolver<Matrix> es(m, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

} // namespace

DeviationSeries singular_limit_deviation(const std::vector<ConstantLedger>& ledgers,
                                         const std::vector<Matrix>& six,
                                         bool half_normalization) {
  DeviationSeries series;
  for (const ConstantLedger& ledger : ledgers) {
    const PhysicalGenerators g = physical_generators(ledger, six, half_normalization);
    const auto& ops = g.ops;  // b,q,p,t,E,r
    const double nb = frobenius_norm(ops[0]);
    const double nq = frobenius_norm(ops[1]);
    const double np = frobenius_norm(ops[2]);
    const double nt = frobenius_norm(ops[3]);
    const double nE = frobenius_norm(ops[4]);

    DeviationRecord rec;
    rec.dev_qt = frobenius_norm(commutator(ops[1], ops[3])) / nb;
    rec.dev_Ep = frobenius_norm(commutator(ops[4], ops[2])) / nb;
    rec.dev_rq = frobenius_norm(commutator(ops[5], ops[1])) / np;
    rec.dev_rp = frobenius_norm(commutator(ops[5], ops[2])) / nq;
    rec.dev_rt = frobenius_norm(commutator(ops[5], ops[3])) / nE;
    rec.dev_rE = frobenius_norm(commutator(ops[5], ops[4])) / nt;
    rec.zero_Eq = frobenius_norm(commutator(ops[4], ops[1]));
    rec.zero_br = frobenius_norm(commutator(ops[0], ops[5]));
    rec.zero_pt = frobenius_norm(commutator(ops[2], ops[3]));
    const double rho = spectral_radius_antihermitian_pair(ops[5]);
    rec.te_defect =
        frobenius_norm(Matrix(commutator(ops[3], ops[4]) + (ledger.hbar() / rho) * ops[5]));
    series.records.push_back(rec);
  }
  series.b_channel_monotone = true;
  for (std::size_t i = 1; i < series.records.size(); ++i) {
    if (series.records[i].dev_qt >= series.records[i - 1].dev_qt ||
        series.records[i].dev_Ep >= series.records[i - 1].dev_Ep) {
      series.b_channel_monotone = false;
      break;
    }
  }
  return series;
}

DynamicalConstraint dynamical_constraint(double A, double B, double C,
                                         const std::vector<Matrix>& six) {
  if (!(A > 0.0) || B < 0.0 || C < 0.0) {
    throw ValidationError("dynamical_constraint: A must be positive, B and C non-negative");
  }
  if (six.size() != 6) {
    throw ValidationError("dynamical_constraint: expected six pair-ordered generators");
  }
  const Matrix& m14 = six[2];
  const Matrix& m23 = six[3];
  const Matrix& m24 = six[4];
  DynamicalConstraint out;
  const Matrix unperturbed = A * m14 - B * (m23 * m23);
  const Matrix perturbation = C * (m24 * m24);
  out.op = unperturbed - perturbation;
  out.probe = commutator(perturbation, unperturbed);
  out.probe_norm = max_norm(out.probe);
  return out;
}

TimeProfile time_spectrum_profile(const Matrix& t_operator, double degeneracy_tol) {
  if (t_operator.rows() != t_operator.cols()) {
    throw ValidationError("time_spectrum_profile: matrix not square");
  }
  const double scale = std::max(frobenius_norm(t_operator), 1e-300);
  TimeProfile profile;
  Matrix h;
  if (frobenius_norm(Matrix(t_operator - t_operator.adjoint())) <= 1e-10 * scale) {
    profile.character = "real";
    h = (t_operator + t_operator.adjoint().eval()) / 2.0;
  } else if (frobenius_norm(Matrix(t_operator + t_operator.adjoint())) <= 1e-10 * scale) {
    profile.character = "imaginary";
    h = (t_operator - t_operator.adjoint().eval()) / (2.0 * kI);
  } else {
    throw DiagnosticError(
        "time_spectrum_profile: operator is neither Hermitian nor anti-Hermitian; "
        "no reliable diagonalization path");
  }
  const Spectrum s = hermitian_eigensystem(h, degeneracy_tol);
  for (const auto& g : s.groups) {
    profile.values.push_back(g.value);
    profile.multiplicities.push_back(g.multiplicity);
  }
  return profile;
}

} // namespace finq
