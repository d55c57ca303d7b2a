#pragma once

#include <string>
#include <vector>

#include "finq/constants.hpp"
#include "finq/spectrum.hpp"
#include "finq/su2.hpp"

namespace finq {

enum class Regime { Soft, Medium, Hard };

std::string regime_name(Regime r);

struct RegimeLabel {
  Regime regime = Regime::Medium;
  double soft_threshold = 0.0;  // kappa2 below this is Soft  (1/l)
  double hard_threshold = 0.0;  // kappa2 above this is Hard  (l)
};

// H = (Qp^2/2m) L2^2 + (k Q^2/2) L1^2 = (K/2)(L2^2 + kappa^2 L1^2).
Matrix build_hamiltonian(const AngularMomentumRep& rep, const QuantumConstants& qc,
                         const OscillatorParams& op);

// Closed-form level of the kappa=1 oscillator: (K/2)(l(l+1) - (n-l)^2),
// n = l + m in 0..2l.
double medium_spectrum(int n, double l, double K);

// First-order estimate for kappa << 1: (K/2)m^2 + (K/4) kappa^2 (l(l+1)-m^2).
double soft_spectrum_pt(double m, double l, double K, double kappa2);

// Hard mirror: soft formula with K -> K*kappa^2 and kappa^2 -> 1/kappa^2.
double hard_spectrum_pt(double m, double l, double K, double kappa2);

// <l,+-l|H|l,+-l> = (K l/4)(1 + kappa^2).
double variational_ground_bound(double l, double K, double kappa2);

// Soft iff kappa2 < 1/l (max potential below one kinetic quantum),
// Hard iff kappa2 > l, Medium otherwise.
RegimeLabel classify_regime(double kappa2, double l);

struct UncertaintyReport {
  double dq2 = 0.0;             // Q^2 Var(L1)
  double dp2 = 0.0;             // Qp^2 Var(L2)
  double product = 0.0;
  double mean_l3 = 0.0;
  double bound_state = 0.0;     // (hbar^2/4) <L3/l>^2
  double bound_extremal = 0.0;  // hbar^2/4
  double ratio = 0.0;           // product / (hbar^2/4)
};

UncertaintyReport uncertainty_report(const AngularMomentumRep& rep, const QuantumConstants& qc,
                                     const Vector& state);

struct SpacingPoint {
  int n = 0;
  double spacing = 0.0;
  double rel_deviation = 0.0;  // against hbar*omega = K*l
};

// Level spacings of the medium closed form, deviation relative to K*l.
std::vector<SpacingPoint> spacing_deviation_profile(double l, double K, int n_max);

struct ThermalReport {
  double Z = 0.0;
  double mean_energy = 0.0;
  double heat_capacity = 0.0;
};

// Canonical-ensemble sums with shifted exponents; multiplicities honored.
ThermalReport partition_function(const Spectrum& spectrum, double beta);
ThermalReport partition_function(const std::vector<double>& levels,
                                 const std::vector<int>& multiplicities, double beta);

// Perturbation-theory comparison for the soft/hard regimes. Exact levels are
// grouped to the +-m multiplicity pattern (m=0 singlet, pairs otherwise) and
// each group mean is compared with the first-order value, so the artificial
// first-order splitting of the +-1 pair cancels.
struct PtComparison {
  double max_abs_error = 0.0;
  double scale = 0.0;       // max |E_exact|
  double rel_error = 0.0;   // max_abs_error / scale
};

PtComparison soft_pt_comparison(const AngularMomentumRep& rep, double K, double kappa2);
PtComparison hard_pt_comparison(const AngularMomentumRep& rep, double K, double kappa2);

} // namespace finq
