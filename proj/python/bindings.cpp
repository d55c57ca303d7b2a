#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "finq/canonical.hpp"
#include "finq/clifford.hpp"
#include "finq/lie.hpp"
#include "finq/oscillator.hpp"
#include "finq/so31.hpp"
#include "finq/spectrum.hpp"

namespace py = pybind11;
using namespace finq;

namespace {

py::dict spectrum_dict(const Spectrum& s) {
  py::dict d;
  d["values"] = RealVector(s.values);
  d["vectors"] = Matrix(s.vectors);
  py::list groups;
  for (const auto& g : s.groups) {
    groups.append(py::make_tuple(g.value, g.multiplicity));
  }
  d["groups"] = groups;
  d["degeneracy_tol"] = s.degeneracy_tol;
  return d;
}

py::dict uncertainty_dict(const UncertaintyReport& r) {
  py::dict d;
  d["dq2"] = r.dq2;
  d["dp2"] = r.dp2;
  d["product"] = r.product;
  d["mean_l3"] = r.mean_l3;
  d["bound_state"] = r.bound_state;
  d["bound_extremal"] = r.bound_extremal;
  d["ratio"] = r.ratio;
  return d;
}

ConstantLedger ledger_from_sequence(const std::vector<double>& q) {
  if (q.size() != 6) throw ValidationError("ledger expects six values Qb,Qq,Qp,Qt,QE,Qr");
  return make_ledger(q[0], q[1], q[2], q[3], q[4], q[5]);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite quantum oscillator and Lie-algebra toolkit";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_RuntimeError);
  py::register_exception<DiagnosticError>(m, "DiagnosticError", PyExc_RuntimeError);

  m.def(
      "angular_momentum",
      [](double l) {
        const AngularMomentumRep rep = build_angular_momentum(l);
        py::dict d;
        d["l"] = rep.l();
        d["dim"] = rep.dim;
        d["L1"] = Matrix(rep.L1);
        d["L2"] = Matrix(rep.L2);
        d["L3"] = Matrix(rep.L3);
        return d;
      },
      py::arg("l"), "Spin-l matrices in the L3 eigenbasis (m = l..-l).");

  m.def(
      "rep_report",
      [](double l) {
        const auto r = rep_report(build_angular_momentum(l));
        py::dict d;
        d["commutator_residual"] = r.commutator_residual;
        d["casimir_residual"] = r.casimir_residual;
        return d;
      },
      py::arg("l"));

  m.def(
      "commutator",
      [](const Matrix& a, const Matrix& b) { return commutator(a, b); },
      py::arg("a"), py::arg("b"));

  m.def(
      "hermitian_eigensystem",
      [](const Matrix& h, double degeneracy_tol) {
        return spectrum_dict(hermitian_eigensystem(h, degeneracy_tol));
      },
      py::arg("h"), py::arg("degeneracy_tol") = -1.0);

  m.def(
      "oscillator_hamiltonian",
      [](double l, double kappa2, double K) {
        const auto rep = build_angular_momentum(l);
        return Matrix((K / 2.0) * (rep.L2 * rep.L2 + kappa2 * rep.L1 * rep.L1));
      },
      py::arg("l"), py::arg("kappa2"), py::arg("K") = 1.0,
      "H = (K/2)(L2^2 + kappa^2 L1^2) for the spin-l representation.");

  m.def("medium_spectrum", &medium_spectrum, py::arg("n"), py::arg("l"), py::arg("K"));
  m.def("soft_spectrum_pt", &soft_spectrum_pt, py::arg("m"), py::arg("l"), py::arg("K"),
        py::arg("kappa2"));
  m.def("hard_spectrum_pt", &hard_spectrum_pt, py::arg("m"), py::arg("l"), py::arg("K"),
        py::arg("kappa2"));
  m.def("variational_ground_bound", &variational_ground_bound, py::arg("l"), py::arg("K"),
        py::arg("kappa2"));
  m.def(
      "classify_regime",
      [](double kappa2, double l) { return regime_name(classify_regime(kappa2, l).regime); },
      py::arg("kappa2"), py::arg("l"));

  m.def(
      "derive_constants",
      [](double hbar, double l, double ratio) {
        const auto qc = derive_constants(hbar, l, ratio);
        py::dict d;
        d["hbar"] = qc.hbar;
        d["hbar1"] = qc.hbar1;
        d["hbar2"] = qc.hbar2;
        d["Q"] = qc.Q;
        d["Qp"] = qc.Qp;
        d["Qr"] = qc.Qr;
        return d;
      },
      py::arg("hbar"), py::arg("l"), py::arg("ratio") = 1.0);

  m.def(
      "uncertainty_report",
      [](double l, const Vector& state, double hbar, double ratio) {
        const auto rep = build_angular_momentum(l);
        const auto qc = derive_constants(hbar, l, ratio);
        return uncertainty_dict(uncertainty_report(rep, qc, state));
      },
      py::arg("l"), py::arg("state"), py::arg("hbar") = 1.0, py::arg("ratio") = 1.0);

  m.def(
      "partition_function",
      [](const std::vector<double>& levels, const std::vector<int>& mults, double beta) {
        const auto r = partition_function(levels, mults, beta);
        py::dict d;
        d["Z"] = r.Z;
        d["mean_energy"] = r.mean_energy;
        d["heat_capacity"] = r.heat_capacity;
        return d;
      },
      py::arg("levels"), py::arg("multiplicities"), py::arg("beta"));

  m.def("canonical_level",
        [](int n, double hbar, double omega) {
          return canonical_level(n, make_canonical(hbar, 1.0, omega * omega));
        },
        py::arg("n"), py::arg("hbar") = 1.0, py::arg("omega") = 1.0);

  m.def(
      "flexed_killing",
      [](double hbar, double hbar1, double hbar2, double eps) {
        const auto r = killing_report(flexed_oscillator_algebra(hbar, hbar1, hbar2, eps));
        py::dict d;
        d["rank"] = r.rank;
        d["semisimple"] = r.semisimple;
        d["singular_values"] = r.singular_values;
        d["killing"] = RealMatrix(r.killing);
        return d;
      },
      py::arg("hbar") = 1.0, py::arg("hbar1") = 1.0, py::arg("hbar2") = 1.0,
      py::arg("eps") = 1.0);

  m.def(
      "commutator_table",
      [](const std::vector<double>& ledger_values, int clifford_n) {
        const ConstantLedger ledger = ledger_from_sequence(ledger_values);
        PhysicalGenerators gens =
            clifford_n > 0
                ? physical_generators(ledger, dynamical_rep(clifford_n).action, true)
                : physical_generators(ledger, defining_rep_so31());
        const CommutatorTable table = commutator_table(gens);
        py::list rows;
        for (const auto& row : table.rows) {
          py::dict d;
          d["pair"] = row.v + "," + row.w;
          d["target"] = row.target;
          d["coeff_measured"] = row.coeff_measured;
          d["coeff_expected_pattern"] = row.coeff_pattern;
          d["sign_match"] = row.sign_match;
          d["residual"] = row.residual;
          rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["zero_rows"] = table.zero_rows;
        out["global_constant"] = table.global_constant;
        out["global_constant_spread"] = table.global_constant_spread;
        return out;
      },
      py::arg("ledger"), py::arg("clifford_n") = 0,
      "Decompose the 15 brackets of the six dynamical generators.");

  m.def(
      "jacobi_constraint_chain",
      [](const std::vector<double>& ledger_values) {
        const auto chain = jacobi_constraint_chain(ledger_from_sequence(ledger_values));
        py::dict d;
        d["hbar"] = chain.hbar;
        d["hbar_pb"] = chain.hbar_pb;
        d["hbar_qt"] = chain.hbar_qt;
        d["lhs"] = chain.lhs;
        d["rhs"] = chain.rhs;
        d["rel_error"] = chain.rel_error;
        return d;
      },
      py::arg("ledger"));

  m.def(
      "clifford_generators",
      [](int p_pos, int q_neg) {
        const CliffordRep rep = build_clifford(p_pos, q_neg);
        return std::vector<Matrix>(rep.gamma.begin(), rep.gamma.end());
      },
      py::arg("p_pos"), py::arg("q_neg"),
      "Cl(p,q) generators; the q_neg negative-signature generators come first.");

  m.def(
      "stationary_rep",
      [](int n_replicas, double hbar, double l, double ratio) {
        const StationaryRep rep =
            stationary_rep(n_replicas, derive_constants(hbar, l, ratio));
        py::dict d;
        d["q"] = Matrix(rep.q);
        d["p"] = Matrix(rep.p);
        d["r"] = Matrix(rep.r);
        d["hbar_eff"] = rep.hbar_eff;
        d["hbar1_eff"] = rep.hbar1_eff;
        d["hbar2_eff"] = rep.hbar2_eff;
        d["closure_residual"] = rep.closure_residual;
        return d;
      },
      py::arg("n_replicas"), py::arg("hbar") = 1.0, py::arg("l") = 10.0,
      py::arg("ratio") = 1.0);

  m.def(
      "dynamical_rep_summary",
      [](int n_replicas) {
        const DynamicalRep rep = dynamical_rep(n_replicas);
        py::dict d;
        d["spinor_dim"] = rep.spinor_dim;
        d["action_dim"] = rep.action_dim;
        d["closure_residual"] = rep.closure_residual;
        d["structure_constant_ratio"] = rep.structure_constant_ratio;
        return d;
      },
      py::arg("n_replicas"));

  m.def(
      "time_spectrum_profile",
      [](const Matrix& t, double degeneracy_tol) {
        const TimeProfile p = time_spectrum_profile(t, degeneracy_tol);
        py::dict d;
        d["character"] = p.character;
        d["values"] = p.values;
        d["multiplicities"] = p.multiplicities;
        return d;
      },
      py::arg("t"), py::arg("degeneracy_tol") = -1.0);

  m.attr("__version__") = "0.1.0";
}
