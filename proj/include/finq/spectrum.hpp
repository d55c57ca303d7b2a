#pragma once

#include <vector>

#include "finq/matrix.hpp"

namespace finq {

struct LevelGroup {
  double value = 0.0;     // representative (mean of the grouped eigenvalues)
  int multiplicity = 0;
  int first = 0;          // index of the first member in `values`
};

struct Spectrum {
  RealVector values;               // all eigenvalues, ascending
  Matrix vectors;                  // orthonormal columns aligned with `values`
  std::vector<LevelGroup> groups;  // degeneracy grouping at `degeneracy_tol`
  double degeneracy_tol = 0.0;

  int dim() const { return static_cast<int>(values.size()); }
  double min() const { return values(0); }
  double max() const { return values(values.size() - 1); }
  std::vector<double> distinct_values() const;
  std::vector<int> multiplicities() const;
};

// Dense Hermitian eigensystem with a reproducible convention:
// eigenvalues ascending; each eigenvector's first component of magnitude
// above 1e-12 is made real positive; bit-equal eigenvalues are ordered by
// lexicographic comparison of the phase-fixed eigenvectors.
//
// degeneracy_tol < 0 selects the default 1e-8 * max|lambda|.
// Throws ValidationError if h is not Hermitian to 1e-10 relative.
Spectrum hermitian_eigensystem(const Matrix& h, double degeneracy_tol = -1.0);

// Regroup existing eigenvalues at a different tolerance.
std::vector<LevelGroup> group_levels(const RealVector& ascending_values, double tol);

} // namespace finq
