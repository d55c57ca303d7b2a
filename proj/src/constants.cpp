#include "finq/constants.hpp"

#include <cmath>
#include <string>

#include "finq/su2.hpp"

namespace finq {

QuantumConstants derive_constants_2l(double hbar, int two_l, double ratio) {
  if (hbar <= 0.0 || ratio <= 0.0) {
    throw ValidationError("derive_constants: hbar and ratio must be positive");
  }
  if (two_l <= 0) {
    throw ValidationError("derive_constants: l must be a positive half-integer");
  }
  QuantumConstants qc;
  qc.hbar = hbar;
  qc.two_l = two_l;
  const double l = two_l / 2.0;
  qc.hbar1 = std::sqrt(ratio) / l;
  qc.hbar2 = 1.0 / (l * std::sqrt(ratio));
  qc.Q = std::sqrt(hbar * qc.hbar1);
  qc.Qp = std::sqrt(hbar * qc.hbar2);
  qc.Qr = 1.0 / l;
  return qc;
}

QuantumConstants derive_constants(double hbar, double l, double ratio) {
  return derive_constants_2l(hbar, half_integer_to_2l(l), ratio);
}

OscillatorParams make_oscillator(const QuantumConstants& qc, double mass, double spring) {
  if (mass <= 0.0 || spring <= 0.0) {
    throw ValidationError("make_oscillator: mass and spring must be positive");
  }
  OscillatorParams p;
  p.mass = mass;
  p.spring = spring;
  p.K = qc.Qp * qc.Qp / mass;
  p.kappa2 = qc.hbar1 * mass * spring / qc.hbar2;
  p.omega = std::sqrt(spring / mass);
  return p;
}

OscillatorParams oscillator_from_kappa2(const QuantumConstants& qc, double mass, double kappa2) {
  if (kappa2 <= 0.0) throw ValidationError("oscillator_from_kappa2: kappa2 must be positive");
  const double spring = kappa2 * qc.hbar2 / (qc.hbar1 * mass);
  return make_oscillator(qc, mass, spring);
}

} // namespace finq
