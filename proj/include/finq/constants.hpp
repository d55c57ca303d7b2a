#pragma once

#include "finq/error.hpp"

namespace finq {

// The triple (hbar, hbar', hbar'') and the derived scales
//   Q  = sqrt(hbar * hbar')   quantum of position
//   Qp = sqrt(hbar * hbar'')  quantum of momentum
//   Qr = sqrt(hbar' * hbar'') quantum of the action regulator, Qr = 1/l
// with the identity Q*Qp/Qr = hbar.
struct QuantumConstants {
  double hbar = 1.0;
  double hbar1 = 0.0;  // hbar'
  double hbar2 = 0.0;  // hbar''
  double Q = 0.0;
  double Qp = 0.0;
  double Qr = 0.0;
  int two_l = 0;

  double l() const { return two_l / 2.0; }
};

// Fix (hbar', hbar'') from l and the residual ratio hbar'/hbar'':
// hbar'*hbar'' = 1/l^2 and hbar'/hbar'' = ratio.
QuantumConstants derive_constants(double hbar, double l, double ratio);
QuantumConstants derive_constants_2l(double hbar, int two_l, double ratio);

// Oscillator parameters: K = Qp^2/mass sets the energy scale and
// kappa^2 = hbar'*mass*spring/hbar'' the potential-to-kinetic quantum ratio.
struct OscillatorParams {
  double mass = 1.0;
  double spring = 1.0;
  double K = 0.0;
  double kappa2 = 0.0;
  double omega = 0.0;
};

OscillatorParams make_oscillator(const QuantumConstants& qc, double mass, double spring);

// Choose the spring constant that realizes a requested kappa^2.
OscillatorParams oscillator_from_kappa2(const QuantumConstants& qc, double mass, double kappa2);

} // namespace finq
