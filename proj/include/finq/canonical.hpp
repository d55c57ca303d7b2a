#pragma once

#include <vector>

#include "finq/spectrum.hpp"

namespace finq {

struct CanonicalOscillator {
  double hbar = 1.0;
  double mass = 1.0;
  double spring = 1.0;
  double omega = 1.0;
};

CanonicalOscillator make_canonical(double hbar, double mass, double spring);

// hbar*omega*(n + 1/2).
double canonical_level(int n, const CanonicalOscillator& osc);

struct CanonicalOps {
  Matrix q, p, H;
};

// Ladder-operator truncation to `dim` levels; [q,p] = i*hbar on the top-left
// (dim-1) block, the corner entry picks up -i*hbar*(dim-1).
CanonicalOps truncated_canonical_ops(int dim, const CanonicalOscillator& osc);

struct DeviationStats {
  double max_rel = 0.0;
  double mean_rel = 0.0;
  std::vector<double> rel;  // per compared level
};

// Compare the lowest `count` distinct finite levels (deduplicated, since the
// finite spectrum doubles its levels) against hbar*omega*(n+1/2).
DeviationStats compare_spectra(const Spectrum& finite, const CanonicalOscillator& osc, int count);
DeviationStats compare_levels(const std::vector<double>& finite_distinct,
                              const CanonicalOscillator& osc, int count);

} // namespace finq
