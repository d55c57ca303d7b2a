#include "finq/oscillator.hpp"

#include <algorithm>
#include <cmath>

namespace finq {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Soft: return "soft";
    case Regime::Medium: return "medium";
    case Regime::Hard: return "hard";
  }
  return "unknown";
}

Matrix build_hamiltonian(const AngularMomentumRep& rep, const QuantumConstants& qc,
                         const OscillatorParams& op) {
  if (rep.two_l != qc.two_l) {
    throw ValidationError("build_hamiltonian: representation l does not match constants l");
  }
  return (op.K / 2.0) * (rep.L2 * rep.L2 + op.kappa2 * rep.L1 * rep.L1);
}

double medium_spectrum(int n, double l, double K) {
  const int two_l = half_integer_to_2l(l);
  if (n < 0 || n > two_l) {
    throw ValidationError("medium_spectrum: n must lie in 0..2l");
  }
  const double m = n - l;
  return (K / 2.0) * (l * (l + 1.0) - m * m);
}

double soft_spectrum_pt(double m, double l, double K, double kappa2) {
  half_integer_to_2l(l);
  if (std::abs(m) > l + 1e-12) throw ValidationError("soft_spectrum_pt: |m| exceeds l");
  if (kappa2 > 1.0) throw ValidationError("soft_spectrum_pt: kappa2 must be <= 1");
  return (K / 2.0) * m * m + (K / 4.0) * kappa2 * (l * (l + 1.0) - m * m);
}

double hard_spectrum_pt(double m, double l, double K, double kappa2) {
  if (kappa2 < 1.0) throw ValidationError("hard_spectrum_pt: kappa2 must be >= 1");
  return soft_spectrum_pt(m, l, K * kappa2, 1.0 / kappa2);
}

double variational_ground_bound(double l, double K, double kappa2) {
  return (K * l / 4.0) * (1.0 + kappa2);
}

RegimeLabel classify_regime(double kappa2, double l) {
  if (kappa2 <= 0.0 || l <= 0.0) {
    throw ValidationError("classify_regime: kappa2 and l must be positive");
  }
  RegimeLabel label;
  label.soft_threshold = 1.0 / l;
  label.hard_threshold = l;
  if (kappa2 < label.soft_threshold) {
    label.regime = Regime::Soft;
  } else if (kappa2 > label.hard_threshold) {
    label.regime = Regime::Hard;
  } else {
    label.regime = Regime::Medium;
  }
  return label;
}

UncertaintyReport uncertainty_report(const AngularMomentumRep& rep, const QuantumConstants& qc,
                                     const Vector& state) {
  if (rep.two_l != qc.two_l) {
    throw ValidationError("uncertainty_report: representation l does not match constants l");
  }
  UncertaintyReport r;
  const auto v1 = expectation_and_variance(rep.L1, state);
  const auto v2 = expectation_and_variance(rep.L2, state);
  const auto v3 = expectation_and_variance(rep.L3, state);
  r.dq2 = qc.Q * qc.Q * v1.variance;
  r.dp2 = qc.Qp * qc.Qp * v2.variance;
  r.product = r.dq2 * r.dp2;
  r.mean_l3 = v3.mean;
  const double h24 = qc.hbar * qc.hbar / 4.0;
  const double polarization = v3.mean / rep.l();
  r.bound_state = h24 * polarization * polarization;
  r.bound_extremal = h24;
  r.ratio = r.product / h24;
  return r;
}

std::vector<SpacingPoint> spacing_deviation_profile(double l, double K, int n_max) {
  const int two_l = half_integer_to_2l(l);
  if (n_max < 1 || n_max > two_l) {
    throw ValidationError("spacing_deviation_profile: n_max must lie in 1..2l");
  }
  const double hbar_omega = K * l;
  std::vector<SpacingPoint> out;
  out.reserve(n_max);
  for (int n = 0; n < n_max; ++n) {
    SpacingPoint p;
    p.n = n;
    p.spacing = medium_spectrum(n + 1, l, K) - medium_spectrum(n, l, K);
    p.rel_deviation = std::abs(p.spacing - hbar_omega) / hbar_omega;
    out.push_back(p);
  }
  return out;
}

ThermalReport partition_function(const std::vector<double>& levels,
                                 const std::vector<int>& multiplicities, double beta) {
  if (beta <= 0.0) throw ValidationError("partition_function: beta must be positive");
  if (levels.empty() || levels.size() != multiplicities.size()) {
    throw ValidationError("partition_function: levels/multiplicities mismatch");
  }
  const double e0 = *std::min_element(levels.begin(), levels.end());
  double zs = 0.0, first = 0.0, second = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double d = levels[i] - e0;
    const double w = multiplicities[i] * std::exp(-beta * d);
    zs += w;
    first += w * d;
    second += w * d * d;
  }
  ThermalReport r;
  r.Z = std::exp(-beta * e0) * zs;
  const double mean_shifted = first / zs;
  r.mean_energy = e0 + mean_shifted;
  r.heat_capacity = beta * beta * (second / zs - mean_shifted * mean_shifted);
  return r;
}

ThermalReport partition_function(const Spectrum& spectrum, double beta) {
  std::vector<double> levels;
  std::vector<int> mults;
  for (const auto& g : spectrum.groups) {
    levels.push_back(g.value);
    mults.push_back(g.multiplicity);
  }
  return partition_function(levels, mults, beta);
}

namespace {

// Walk the sorted exact eigenvalues against sorted PT levels with the +-m
// multiplicity pattern and compare group means.
PtComparison compare_grouped(const RealVector& exact, const std::vector<double>& pt_sorted,
                             const std::vector<int>& mult_sorted) {
  PtComparison cmp;
  cmp.scale = std::max(std::abs(exact(0)), std::abs(exact(exact.size() - 1)));
  int pos = 0;
  for (std::size_t g = 0; g < pt_sorted.size(); ++g) {
    double mean = 0.0;
    for (int k = 0; k < mult_sorted[g]; ++k) mean += exact(pos++);
    mean /= mult_sorted[g];
    cmp.max_abs_error = std::max(cmp.max_abs_error, std::abs(mean - pt_sorted[g]));
  }
  cmp.rel_error = cmp.max_abs_error / cmp.scale;
  return cmp;
}

PtComparison pt_comparison(const AngularMomentumRep& rep, double K, double kappa2, bool hard) {
  const Matrix h = (K / 2.0) * (rep.L2 * rep.L2 + kappa2 * rep.L1 * rep.L1);
  const Spectrum s = hermitian_eigensystem(h);

  const double l = rep.l();
  std::vector<double> pt;
  std::vector<int> mult;
  // two_m runs over l, l-1, ..., down to 0 or 1/2.
  for (int two_m = rep.two_l % 2; two_m <= rep.two_l; two_m += 2) {
    const double m = two_m / 2.0;
    pt.push_back(hard ? hard_spectrum_pt(m, l, K, kappa2) : soft_spectrum_pt(m, l, K, kappa2));
    mult.push_back(two_m == 0 ? 1 : 2);
  }
  // PT values increase with |m| in both regimes; keep a sort for safety.
  std::vector<std::size_t> order(pt.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pt[a] < pt[b]; });
  std::vector<double> pt_sorted;
  std::vector<int> mult_sorted;
  for (auto i : order) {
    pt_sorted.push_back(pt[i]);
    mult_sorted.push_back(mult[i]);
  }
  return compare_grouped(s.values, pt_sorted, mult_sorted);
}

} // namespace

PtComparison soft_pt_comparison(const AngularMomentumRep& rep, double K, double kappa2) {
  return pt_comparison(rep, K, kappa2, /*hard=*/false);
}

PtComparison hard_pt_comparison(const AngularMomentumRep& rep, double K, double kappa2) {
  return pt_comparison(rep, K, kappa2, /*hard=*/true);
}

} // namespace finq
