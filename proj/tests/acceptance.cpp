// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "finq/canonical.hpp"
#include "finq/cli.hpp"
#include "finq/clifford.hpp"
#include "finq/lie.hpp"
#include "finq/oscillator.hpp"
#include "finq/so31.hpp"

using namespace finq;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

void criterion_1_su2_closure() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  double worst_comm = 0.0, worst_cas = 0.0;
  std::vector<int> two_ls;
  for (int t = 1; t <= 50; ++t) two_ls.push_back(t);  // l = 1/2 .. 25
  two_ls.push_back(200);
  two_ls.push_back(400);
  for (int two_l : two_ls) {
    const auto rep = build_angular_momentum_2l(two_l);
    const auto r = rep_report(rep);
    const double l = two_l / 2.0;
    worst_comm = std::max(worst_comm, r.commutator_residual / (1e-12 * (1.0 + l)));
    worst_cas = std::max(worst_cas, r.casimir_residual / (1e-12 * l * (l + 1.0)));
    if (r.commutator_residual > 1e-12 * (1.0 + l)) pass = false;
    if (r.casimir_residual > 1e-12 * l * (l + 1.0)) pass = false;
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 5.0) pass = false;
  report(1, pass, "su(2) closure and Casimir for l in {1/2..25, 100, 200}",
         "worst residual at " + fmt(std::max(worst_comm, worst_cas)) +
             " of bound, runtime " + fmt(elapsed) + " s");
}

void criterion_2_medium_spectrum() {
  const auto start = std::chrono::steady_clock::now();
  const double l = 50.0, K = 0.8;
  const auto rep = build_angular_momentum(l);
  const Matrix h = (K / 2.0) * (rep.L2 * rep.L2 + rep.L1 * rep.L1);
  const Spectrum s = hermitian_eigensystem(h);

  std::vector<double> closed;
  for (int n = 0; n <= rep.two_l; ++n) closed.push_back(medium_spectrum(n, l, K));
  std::sort(closed.begin(), closed.end());
  double worst_rel = 0.0;
  for (int i = 0; i < s.dim(); ++i) {
    worst_rel = std::max(worst_rel, std::abs(s.values(i) - closed[i]) / std::abs(closed[i]));
  }
  bool pass = worst_rel <= 1e-10;

  const double ground = s.min();
  if (std::abs(ground - K * l / 2.0) > 1e-12 * (K * l / 2.0)) pass = false;
  const double emax = s.max();
  if (std::abs(emax - (K / 2.0) * l * (l + 1.0)) > 1e-12 * emax) pass = false;

  // m != 0 levels doubled: 50 pairs plus the single top level.
  int pairs = 0, singles = 0;
  for (const auto& g : s.groups) {
    if (g.multiplicity == 2) ++pairs;
    else if (g.multiplicity == 1) ++singles;
  }
  if (pairs != 50 || singles != 1) pass = false;

  const double elapsed = seconds_since(start);
  if (elapsed >= 2.0) pass = false;
  report(2, pass, "medium spectrum at l=50 matches the closed form with doubled levels",
         "max rel dev " + fmt(worst_rel) + ", " + std::to_string(pairs) + " pairs, runtime " +
             fmt(elapsed) + " s");
}

void criterion_3_correspondence() {
  const double l = 1e4, hbar_omega = 1.0;
  const double K = hbar_omega / l;
  const auto profile = spacing_deviation_profile(l, K, 10);
  bool pass = true;
  double worst = 0.0;
  for (const auto& p : profile) {
    worst = std::max(worst, p.rel_deviation);
    if (p.rel_deviation >= 1e-3) pass = false;
  }
  const double ground = medium_spectrum(0, l, K);
  if (std::abs(ground - hbar_omega / 2.0) > 1e-12 * (hbar_omega / 2.0)) pass = false;
  report(3, pass, "correspondence at l=1e4: lowest 10 spacings within 0.1% of hbar*omega",
         "worst spacing deviation " + fmt(worst) + ", ground " + fmt(ground));
}

void criterion_4_soft_pt() {
  const auto start = std::chrono::steady_clock::now();
  const auto rep = build_angular_momentum(20.0);
  const double K = 1.0;
  const PtComparison soft_a = soft_pt_comparison(rep, K, 1e-3);
  const PtComparison soft_b = soft_pt_comparison(rep, K, 5e-4);
  bool pass = soft_a.rel_error < 0.01 && soft_b.rel_error < 0.01;
  const double ratio = soft_a.max_abs_error / soft_b.max_abs_error;
  if (ratio < 3.0 || ratio > 5.0) pass = false;

  // Hard mirror: kappa^2 = 1000 with K = 1 maps onto the soft problem with
  // K~ = 1000, kappa~^2 = 1e-3. The two comparisons must agree exactly.
  const PtComparison hard = hard_pt_comparison(rep, K, 1e3);
  const PtComparison mapped = soft_pt_comparison(rep, K * 1e3, 1e-3);
  if (std::abs(hard.max_abs_error - mapped.max_abs_error) >
      1e-9 * std::max(hard.max_abs_error, mapped.max_abs_error)) {
    pass = false;
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) pass = false;
  report(4, pass, "soft perturbation theory at l=20 with the hard mirror",
         "rel err " + fmt(soft_a.rel_error) + ", error ratio " + fmt(ratio) + ", runtime " +
             fmt(elapsed) + " s");
}

void criterion_5_uncertainty() {
  bool pass = true;
  const auto qc100 = derive_constants(1.0, 100.0, 1.0);
  const auto rep100 = build_angular_momentum(100.0);
  const auto top = uncertainty_report(rep100, qc100, l3_eigenstate(rep100, rep100.two_l));
  if (std::abs(top.ratio - 1.0) > 1e-9) pass = false;

  const auto qc20 = derive_constants(1.0, 20.0, 1.0);
  const auto rep20 = build_angular_momentum(20.0);
  auto ground_ratio = [&](double kappa2) {
    const Matrix h = 0.5 * (rep20.L2 * rep20.L2 + kappa2 * rep20.L1 * rep20.L1);
    const Spectrum s = hermitian_eigensystem(h);
    return uncertainty_report(rep20, qc20, s.vectors.col(0)).ratio;
  };
  const double soft = ground_ratio(1e-3);
  const double hard = ground_ratio(1e3);
  if (!(soft < 0.1) || !(hard < 0.1)) pass = false;
  report(5, pass, "uncertainty product: polarized ratio 1, frozen regimes below 0.1",
         "top " + fmt(top.ratio) + ", soft " + fmt(soft) + ", hard " + fmt(hard));
}

void criterion_6_variational() {
  std::mt19937_64 gen(0xacce97ULL);
  std::uniform_int_distribution<int> two_l_dist(1, 60);
  std::uniform_real_distribution<double> kappa_dist(0.1, 10.0);
  std::uniform_real_distribution<double> k_dist(0.25, 4.0);
  bool pass = true;
  for (int trial = 0; trial < 50; ++trial) {
    const int two_l = two_l_dist(gen);
    const double kappa2 = kappa_dist(gen);
    const double K = k_dist(gen);
    const auto rep = build_angular_momentum_2l(two_l);
    const Matrix h = (K / 2.0) * (rep.L2 * rep.L2 + kappa2 * rep.L1 * rep.L1);
    const double ground = hermitian_eigensystem(h).min();
    const double bound = variational_ground_bound(rep.l(), K, kappa2);
    if (ground > bound * (1.0 + 1e-12)) pass = false;
  }
  // Equality at kappa = 1.
  double worst_eq = 0.0;
  for (int two_l : {8, 21, 60}) {
    const auto rep = build_angular_momentum_2l(two_l);
    const Matrix h = 0.5 * (rep.L2 * rep.L2 + rep.L1 * rep.L1);
    const double ground = hermitian_eigensystem(h).min();
    const double bound = variational_ground_bound(rep.l(), 1.0, 1.0);
    worst_eq = std::max(worst_eq, std::abs(ground - bound) / bound);
  }
  if (worst_eq > 1e-10) pass = false;
  report(6, pass, "variational bound over 50 random instances with equality at kappa=1",
         "equality defect " + fmt(worst_eq));
}

void criterion_7_killing() {
  bool pass = true;
  if (killing_report(flexed_oscillator_algebra(1, 1, 1, 0.0)).rank != 0) pass = false;
  for (double eps : {1.0, 1e-1, 1e-3}) {
    if (killing_report(flexed_oscillator_algebra(1, 1, 1, eps)).rank != 3) pass = false;
  }
  LieBasisRep so31;
  so31.generators = defining_rep_so31().L;
  so31.labels = defining_rep_so31().pair_labels;
  if (killing_report(closure_check(so31).tensor).rank != 6) pass = false;
  const KillingReport so3 = killing_report(so3_epsilon_tensor());
  const double so3_dev =
      (so3.killing + 2.0 * RealMatrix::Identity(3, 3)).cwiseAbs().maxCoeff();
  if (so3_dev > 1e-12) pass = false;
  report(7, pass, "Killing ranks along the flexion and for so(3), so(3,1)",
         "so(3) B deviation from -2I " + fmt(so3_dev));
}

void criterion_8_ad_lines() {
  bool pass = true;
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const double res = closure_check(a_line_rep(n).basis).residual;
    worst = std::max(worst, res);
    if (res > 1e-12) pass = false;
  }
  for (int n : {2, 4}) {
    const DLineRep d = d_line_rep(n, 1.3, 0.7, 0.5);
    const double res = closure_check(d.basis).residual;
    worst = std::max(worst, res);
    if (res > 1e-12) pass = false;
    for (std::size_t i = 0; i < d.q.size() && pass; ++i) {
      for (std::size_t j = 0; j < d.p.size(); ++j) {
        const Matrix br = commutator(d.q[i], d.p[j]);
        if (i == j) {
          auto [c, rem] = decompose_over_basis({d.r}, br);
          if (rem > 1e-12 || std::abs(c[0] - d.qp_coefficient) > 1e-12 * std::abs(c[0])) {
            pass = false;
            break;
          }
        } else if (max_norm(br) > 1e-12) {
          pass = false;
          break;
        }
      }
    }
  }
  report(8, pass, "A-line and D-line bases close; [q,p] proportional to delta * r",
         "worst closure residual " + fmt(worst));
}

void criterion_9_dynamical_table() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 gen(0x1ed9e2ULL);
  std::uniform_real_distribution<double> dist(0.2, 5.0);
  const So31Rep rep = defining_rep_so31();
  bool pass = true;
  double worst_spread = 0.0, worst_res = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double Qb = dist(gen), Qq = dist(gen), Qp = dist(gen), Qr = dist(gen);
    const ConstantLedger ledger = make_ledger(Qb, Qq, Qp, Qq * Qp / Qr, Qr, Qr);
    const CommutatorTable table = commutator_table(physical_generators(ledger, rep));
    if (table.zero_rows != 3) pass = false;
    for (const auto& row : table.rows) {
      if (row.target == "0") {
        const bool expected = (row.v == "E" && row.w == "q") ||
                              (row.v == "b" && row.w == "r") ||
                              (row.v == "p" && row.w == "t");
        if (!expected) pass = false;
      }
      worst_res = std::max(worst_res, row.residual);
    }
    worst_spread = std::max(worst_spread, table.global_constant_spread);
    if (table.global_constant_spread > 1e-10) pass = false;
    if (worst_res > 1e-10) pass = false;
  }
  // The ledger constraint is enforced at construction.
  bool rejected = false;
  try {
    make_ledger(1, 1, 1, 2, 1, 1);
  } catch (const ValidationError&) {
    rejected = true;
  }
  if (!rejected) pass = false;
  const double elapsed = seconds_since(start);
  if (elapsed >= 2.0) pass = false;
  report(9, pass, "15-commutator table over 20 random valid ledgers",
         "coefficient spread " + fmt(worst_spread) + ", worst residual " + fmt(worst_res) +
             ", runtime " + fmt(elapsed) + " s");
}

void criterion_10_clifford() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  if (anticommutation_residual(build_clifford(3, 1)) != 0.0) pass = false;
  if (anticommutation_residual(build_clifford(6, 2)) != 0.0) pass = false;

  for (int n : {1, 2}) {
    const DynamicalRep rep = dynamical_rep(n);
    if (rep.closure_residual > 1e-12) pass = false;
  }

  const QuantumConstants qc = derive_constants(1.0, 10.0, 1.0);
  const StationaryRep st = stationary_rep(2, qc);
  Matrix sum12 = Matrix::Zero(st.cl.dim, st.cl.dim);
  for (int n = 0; n < 2; ++n) sum12 += st.cl.gamma[3 * n + 0] * st.cl.gamma[3 * n + 1];
  const double identity_defect =
      max_norm(commutator(st.q, st.p) - 2.0 * qc.Q * qc.Qp * sum12);
  if (identity_defect != 0.0) pass = false;

  const double elapsed = seconds_since(start);
  if (elapsed >= 10.0) pass = false;
  report(10, pass, "Clifford tables exact; dynamical closure; stationary identity",
         "[q,p] identity defect " + fmt(identity_defect) + ", runtime " + fmt(elapsed) + " s");
}

void criterion_11_singular_limit() {
  std::vector<ConstantLedger> ledgers;
  for (int j = 0; j <= 14; ++j) {
    ledgers.push_back(make_ledger(std::pow(2.0, j), 1.0, 1.0, 1.0, 1.0, 1.0));
  }
  const DeviationSeries series = singular_limit_deviation(ledgers, defining_rep_so31().L);
  bool pass = series.b_channel_monotone;
  double worst = 0.0;
  for (std::size_t j = 1; j < series.records.size(); ++j) {
    const double rqt = series.records[j].dev_qt / series.records[j - 1].dev_qt;
    const double rep_ = series.records[j].dev_Ep / series.records[j - 1].dev_Ep;
    worst = std::max({worst, std::abs(rqt - 0.5), std::abs(rep_ - 0.5)});
    if (std::abs(rqt - 0.5) > 0.025 || std::abs(rep_ - 0.5) > 0.025) pass = false;
  }
  for (const auto& rec : series.records) {
    if (rec.zero_Eq != 0.0 || rec.zero_br != 0.0 || rec.zero_pt != 0.0) pass = false;
  }
  report(11, pass, "regulator deviations halve with delta across four decades",
         "worst halving defect " + fmt(worst));
}

void criterion_12_determinism() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::vector<std::string>> battery = {
      {"spectrum", "--l", "10", "--kappa2", "1", "--K", "1"},
      {"spectrum", "--l", "15", "--kappa2", "0.02", "--format", "json"},
      {"classify", "--l-grid", "0.5,1,10,100", "--kappa2-grid", "0.0001,0.1,1,10,10000"},
      {"converge", "--l", "10000", "--count", "10"},
      {"algebra", "flex", "--eps-grid", "0,0.001,0.1,1"},
      {"algebra", "killing", "--tensor", "so31"},
      {"aline", "--n", "3"},
      {"dline", "--n", "4"},
      {"dyn", "verify", "--ledger", "2,1,1.5,3,0.5,0.5"},
      {"clifford", "verify", "--mode", "dynamical", "--n", "1"},
      {"thermal", "--l", "20", "--kappa2", "1", "--K", "0.05", "--beta-grid", "0.5,1,2"},
  };
  bool pass = true;
  for (const auto& args : battery) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = finq::cli::run(args, out1, err1);
    const int c2 = finq::cli::run(args, out2, err2);
    if (c1 != 0 || c2 != 0 || out1.str() != out2.str() || out1.str().empty()) {
      pass = false;
      std::printf("         non-deterministic or failing: %s (codes %d/%d)\n",
                  args[0].c_str(), c1, c2);
    }
  }
  const double elapsed = seconds_since(start);
  report(12, pass, "golden-file battery is byte-stable across consecutive runs",
         std::to_string(battery.size()) + " invocations twice, runtime " + fmt(elapsed) + " s");
}

} // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion_1_su2_closure();
  criterion_2_medium_spectrum();
  criterion_3_correspondence();
  criterion_4_soft_pt();
  criterion_5_uncertainty();
  criterion_6_variational();
  criterion_7_killing();
  criterion_8_ad_lines();
  criterion_9_dynamical_table();
  criterion_10_clifford();
  criterion_11_singular_limit();
  criterion_12_determinism();
  std::printf("acceptance: %d of 12 criteria passed in %.2f s\n", 12 - failures,
              seconds_since(start));
  return failures == 0 ? 0 : 1;
}
