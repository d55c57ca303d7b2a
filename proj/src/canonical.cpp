#include "finq/canonical.hpp"

#include <cmath>

namespace finq {

CanonicalOscillator make_canonical(double hbar, double mass, double spring) {
  if (hbar <= 0.0 || mass <= 0.0 || spring <= 0.0) {
    throw ValidationError("make_canonical: all parameters must be positive");
  }
  return {hbar, mass, spring, std::sqrt(spring / mass)};
}

double canonical_level(int n, const CanonicalOscillator& osc) {
  if (n < 0) throw ValidationError("canonical_level: n must be non-negative");
  return osc.hbar * osc.omega * (n + 0.5);
}

CanonicalOps truncated_canonical_ops(int dim, const CanonicalOscillator& osc) {
  if (dim < 2) throw ValidationError("truncated_canonical_ops: dim must be >= 2");
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Matrix ad = a.adjoint();

  CanonicalOps ops;
  const double q_scale = std::sqrt(osc.hbar / (2.0 * osc.mass * osc.omega));
  const double p_scale = std::sqrt(osc.hbar * osc.mass * osc.omega / 2.0);
  ops.q = q_scale * (a + ad);
  ops.p = kI * p_scale * (ad - a);
  ops.H = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) ops.H(n, n) = canonical_level(n, osc);
  return ops;
}

DeviationStats compare_levels(const std::vector<double>& finite_distinct,
                              const CanonicalOscillator& osc, int count) {
  if (count < 1 || count > static_cast<int>(finite_distinct.size())) {
    throw ValidationError("compare_spectra: count exceeds available levels");
  }
  DeviationStats stats;
  for (int n = 0; n < count; ++n) {
    const double ref = canonical_level(n, osc);
    const double rel = std::abs(finite_distinct[n] - ref) / ref;
    stats.rel.push_back(rel);
    stats.max_rel = std::max(stats.max_rel, rel);
    stats.mean_rel += rel;
  }
  stats.mean_rel /= count;
  return stats;
}

DeviationStats compare_spectra(const Spectrum& finite, const CanonicalOscillator& osc, int count) {
  return compare_levels(finite.distinct_values(), osc, count);
}

} // namespace finq
