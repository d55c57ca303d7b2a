#include "finq/clifford.hpp"

#include <cmath>
#include <cstdio>

#include "finq/lie.hpp"
#include "finq/so31.hpp"

namespace finq {

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

Matrix pauli(int k) {
  Matrix s(2, 2);
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -kI, kI, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

std::vector<Matrix> prototype_generators(int total) {
  const int pairs = total / 2;
  std::vector<Matrix> protos;
  protos.reserve(total);
  for (int k = 1; k <= pairs; ++k) {
    for (int off = 1; off <= 2; ++off) {
      Matrix g = Matrix::Identity(1, 1);
      for (int slot = 1; slot <= pairs; ++slot) {
        if (slot < k) {
          g = kronecker(g, pauli(3));
        } else if (slot == k) {
          g = kronecker(g, pauli(off));
        } else {
          g = kronecker(g, Matrix::Identity(2, 2));
        }
      }
      protos.push_back(std::move(g));
    }
  }
  return protos;
}

} // namespace

CliffordRep build_clifford_signature(const std::vector<int>& signature, bool allow_large) {
  const int total = static_cast<int>(signature.size());
  if (total <= 0 || total % 2 != 0) {
    throw ValidationError("build_clifford: total generator count must be a positive even number");
  }
  const int cap = allow_large ? 16 : 12;
  if (total > cap) {
    throw ResourceError("build_clifford: " + std::to_string(total) + " generators exceeds cap " +
                        std::to_string(cap) + (allow_large ? "" : " (pass allow_large)"));
  }
  CliffordRep rep;
  rep.signature = signature;
  for (int s : signature) {
    if (s == 1) {
      ++rep.p_pos;
    } else if (s == -1) {
      ++rep.q_neg;
    } else {
      throw ValidationError("build_clifford: signature entries must be +1 or -1");
    }
  }
  rep.dim = 1 << (total / 2);
  rep.gamma = prototype_generators(total);
  for (int a = 0; a < total; ++a) {
    if (signature[a] < 0) rep.gamma[a] *= kI;
  }
  return rep;
}

CliffordRep build_clifford(int p_pos, int q_neg, bool allow_large) {
  if (p_pos < 0 || q_neg < 0) throw ValidationError("build_clifford: negative signature count");
  std::vector<int> signature(q_neg, -1);
  signature.insert(signature.end(), p_pos, +1);
  return build_clifford_signature(signature, allow_large);
}

double anticommutation_residual(const CliffordRep& rep) {
  double worst = 0.0;
  const Matrix id = Matrix::Identity(rep.dim, rep.dim);
  const int n = rep.total();
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const double eta = a == b ? static_cast<double>(rep.signature[a]) : 0.0;
      worst = std::max(worst,
                       max_norm(anticommutator(rep.gamma[a], rep.gamma[b]) - 2.0 * eta * id));
    }
  }
  return worst;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::uint64_t golden_hash(const CliffordRep& rep) {
  std::string buf = "cl:" + std::to_string(rep.p_pos) + "," + std::to_string(rep.q_neg) + "," +
                    std::to_string(rep.dim) + ";";
  char num[64];
  for (std::size_t k = 0; k < rep.gamma.size(); ++k) {
    buf += "g" + std::to_string(k) + ":";
    const Matrix& g = rep.gamma[k];
    for (int i = 0; i < g.rows(); ++i) {
      for (int j = 0; j < g.cols(); ++j) {
        std::snprintf(num, sizeof(num), "%.17g,%.17g;", g(i, j).real(), g(i, j).imag());
        buf += num;
      }
    }
  }
  return fnv1a64(buf);
}

namespace {

// Measured c in bracket = c * target; the bracket must be an exact multiple.
double proportionality(const Matrix& bracket, const Matrix& target, double scale,
                       double* residual) {
  auto [coeffs, remainder] = decompose_over_basis({target}, bracket);
  if (residual) *residual = std::max(*residual, remainder / scale);
  return coeffs[0];
}

} // namespace

StationaryRep stationary_rep(int n_replicas, const QuantumConstants& qc, bool allow_large) {
  if (n_replicas < 2 || n_replicas % 2 != 0) {
    throw ValidationError("stationary_rep: replica count must be even and >= 2");
  }
  StationaryRep rep;
  rep.n_replicas = n_replicas;
  rep.cl = build_clifford(3 * n_replicas, 0, allow_large);

  const int d = rep.cl.dim;
  Matrix sum31 = Matrix::Zero(d, d);
  Matrix sum23 = Matrix::Zero(d, d);
  Matrix sum12 = Matrix::Zero(d, d);
  for (int n = 0; n < n_replicas; ++n) {
    const Matrix& g1 = rep.cl.gamma[3 * n + 0];
    const Matrix& g2 = rep.cl.gamma[3 * n + 1];
    const Matrix& g3 = rep.cl.gamma[3 * n + 2];
    sum31 += g3 * g1;
    sum23 += g2 * g3;
    sum12 += g1 * g2;
  }
  rep.q = qc.Q * sum31;
  rep.p = qc.Qp * sum23;
  rep.r = qc.Qr * sum12;

  double res = 0.0;
  const double sq = frobenius_norm(rep.q), sp = frobenius_norm(rep.p),
               sr = frobenius_norm(rep.r);
  rep.hbar_eff = proportionality(commutator(rep.q, rep.p), rep.r, sq * sp / sr, &res);
  rep.hbar1_eff = proportionality(commutator(rep.r, rep.q), rep.p, sr * sq / sp, &res);
  rep.hbar2_eff = proportionality(commutator(rep.p, rep.r), rep.q, sp * sr / sq, &res);
  rep.closure_residual = res;
  return rep;
}

DynamicalRep dynamical_rep(int n_replicas, bool allow_large) {
  if (n_replicas < 1) throw ValidationError("dynamical_rep: replica count must be >= 1");
  if (n_replicas > 2 && !allow_large) {
    throw ResourceError("dynamical_rep: N > 2 is opt-in (2^(4N)-dimensional action)");
  }
  DynamicalRep rep;
  std::vector<int> signature;
  for (int n = 0; n < n_replicas; ++n) {
    signature.insert(signature.end(), {-1, +1, +1, +1});
  }
  rep.cl = build_clifford_signature(signature, allow_large);
  rep.spinor_dim = rep.cl.dim;
  rep.action_dim = rep.spinor_dim * rep.spinor_dim;

  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Matrix gamma_ij = Matrix::Zero(rep.spinor_dim, rep.spinor_dim);
      for (int n = 0; n < n_replicas; ++n) {
        gamma_ij += rep.cl.gamma[4 * n + i] * rep.cl.gamma[4 * n + j];
      }
      rep.gamma_pairs.push_back(std::move(gamma_ij));
    }
  }
  const Matrix id = Matrix::Identity(rep.spinor_dim, rep.spinor_dim);
  for (const Matrix& g : rep.gamma_pairs) {
    rep.action.push_back(kronecker(g, id) - kronecker(id, g.transpose()));
  }

  // The spinor-level Gammas must reproduce the defining so(3,1) structure
  // tensor up to one overall constant.
  LieBasisRep basis;
  basis.generators = rep.gamma_pairs;
  const So31Rep defining = defining_rep_so31();
  basis.labels = defining.pair_labels;
  const ClosureResult closure = closure_check(basis);

  LieBasisRep def_basis;
  def_basis.generators = defining.L;
  def_basis.labels = defining.pair_labels;
  const ClosureResult def_closure = closure_check(def_basis);

  double ratio = 0.0;
  double worst = closure.residual;
  for (int k = 0; k < 6; ++k) {
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        const double ref = def_closure.tensor.c(k, i, j);
        const double got = closure.tensor.c(k, i, j);
        if (std::abs(ref) > 1e-12) {
          if (ratio == 0.0) ratio = got / ref;
          worst = std::max(worst, std::abs(got - ratio * ref));
        } else {
          worst = std::max(worst, std::abs(got));
        }
      }
    }
  }
  rep.structure_constant_ratio = ratio;
  rep.closure_residual = worst;
  return rep;
}

int commutant_dimension(const std::vector<Matrix>& generators) {
  if (generators.empty()) throw ValidationError("commutant_dimension: empty generator list");
  const int d = static_cast<int>(generators[0].rows());
  if (d > 64) throw ResourceError("commutant_dimension: dimension above diagnostic cap 64");
  const int d2 = d * d;
  Matrix stacked(static_cast<int>(generators.size()) * d2, d2);
  const Matrix id = Matrix::Identity(d, d);
  for (std::size_t a = 0; a < generators.size(); ++a) {
    stacked.block(static_cast<int>(a) * d2, 0, d2, d2) =
        kronecker(generators[a], id) - kronecker(id, generators[a].transpose());
  }
  Eigen::JacobiSVD<Matrix> svd(stacked);
  const auto& sv = svd.singularValues();
  const double tol = 1e-10 * (sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol) ++rank;
  }
  return d2 - rank;
}

} // namespace finq
