#include "finq/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace finq {

std::vector<double> Spectrum::distinct_values() const {
  std::vector<double> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(g.value);
  return out;
}

std::vector<int> Spectrum::multiplicities() const {
  std::vector<int> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(g.multiplicity);
  return out;
}

std::vector<LevelGroup> group_levels(const RealVector& v, double tol) {
  std::vector<LevelGroup> groups;
  const int n = static_cast<int>(v.size());
  int start = 0;
  while (start < n) {
    int end = start + 1;
    // Chain grouping: neighbours closer than tol belong to one level.
    while (end < n && v(end) - v(end - 1) <= tol) ++end;
    LevelGroup g;
    g.first = start;
    g.multiplicity = end - start;
    g.value = 0.0;
    for (int i = start; i < end; ++i) g.value += v(i);
    g.value /= g.multiplicity;
    groups.push_back(g);
    start = end;
  }
  return groups;
}

namespace {

void phase_fix(Matrix& vectors) {
  for (int j = 0; j < vectors.cols(); ++j) {
    for (int i = 0; i < vectors.rows(); ++i) {
      const Complex c = vectors(i, j);
      if (std::abs(c) > 1e-12) {
        vectors.col(j) *= std::conj(c) / std::abs(c);
        break;
      }
    }
  }
}

bool lex_less(const Matrix& vecs, int a, int b) {
  for (int i = 0; i < vecs.rows(); ++i) {
    const Complex x = vecs(i, a), y = vecs(i, b);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

} // namespace

Spectrum hermitian_eigensystem(const Matrix& h, double degeneracy_tol) {
  if (h.rows() != h.cols()) throw ValidationError("hermitian_eigensystem: matrix not square");
  if (!all_finite(h)) throw ValidationError("hermitian_eigensystem: non-finite entries");
  if (hermiticity_defect(h) > 1e-10) {
    throw ValidationError("hermitian_eigensystem: input not Hermitian to 1e-10 relative");
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver((h + h.adjoint().eval()) / 2.0);
  if (solver.info() != Eigen::Success) {
    throw DiagnosticError("hermitian_eigensystem: eigensolver failed to converge");
  }

  Spectrum s;
  s.values = solver.eigenvalues();
  s.vectors = solver.eigenvectors();
  phase_fix(s.vectors);

  // Ascending already; break exact eigenvalue ties by eigenvector order so
  // repeated runs and platforms agree bit for bit on identical input.
  const int n = s.dim();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (s.values(a) != s.values(b)) return s.values(a) < s.values(b);
    return lex_less(s.vectors, a, b);
  });
  RealVector sorted_vals(n);
  Matrix sorted_vecs(n, n);
  for (int k = 0; k < n; ++k) {
    sorted_vals(k) = s.values(order[k]);
    sorted_vecs.col(k) = s.vectors.col(order[k]);
  }
  s.values = std::move(sorted_vals);
  s.vectors = std::move(sorted_vecs);

  const double scale = std::max(std::abs(s.values(0)), std::abs(s.values(n - 1)));
  s.degeneracy_tol = degeneracy_tol >= 0.0 ? degeneracy_tol : 1e-8 * scale;
  s.groups = group_levels(s.values, s.degeneracy_tol);
  return s;
}

} // namespace finq
