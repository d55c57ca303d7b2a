#include "finq/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "finq/canonical.hpp"
#include "finq/clifford.hpp"
#include "finq/io.hpp"
#include "finq/lie.hpp"
#include "finq/oscillator.hpp"
#include "finq/so31.hpp"
#include "finq/spectrum.hpp"

namespace finq::cli {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kTolerance = 2;

std::vector<double> parse_grid(const std::string& csv, const char* what) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) {
      throw ValidationError(std::string(what) + ": bad numeric entry '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw ValidationError(std::string(what) + ": empty grid");
  return values;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file: " + path);
  f << text;
}

json uncertainty_json(const UncertaintyReport& r) {
  return json{{"dq2", r.dq2},
              {"dp2", r.dp2},
              {"product", r.product},
              {"mean_l3", r.mean_l3},
              {"bound_state", r.bound_state},
              {"bound_extremal", r.bound_extremal},
              {"ratio", r.ratio}};
}

struct OscillatorSetup {
  AngularMomentumRep rep;
  QuantumConstants qc;
  OscillatorParams params;
};

OscillatorSetup oscillator_setup(double l, double kappa2, double K, double hbar, double mass,
                                 double ratio) {
  OscillatorSetup s;
  s.rep = build_angular_momentum(l);
  s.qc = derive_constants(hbar, l, ratio);
  // An explicit K fixes the mass through K = Qp^2/m.
  if (K > 0.0) mass = s.qc.Qp * s.qc.Qp / K;
  s.params = oscillator_from_kappa2(s.qc, mass, kappa2);
  return s;
}

int cmd_spectrum(double l, double kappa2, double K, double hbar, double mass, double ratio,
                 const std::string& format, const std::string& out_path, double degeneracy_tol,
                 std::ostream& out, std::ostream& err) {
  const OscillatorSetup s = oscillator_setup(l, kappa2, K, hbar, mass, ratio);
  const Matrix h = build_hamiltonian(s.rep, s.qc, s.params);
  const Spectrum spec = hermitian_eigensystem(h, degeneracy_tol);

  // Closed-form cross-check in the rotationally symmetric case.
  double closed_form_dev = 0.0;
  if (kappa2 == 1.0) {
    std::vector<double> closed;
    for (int n = 0; n <= s.rep.two_l; ++n) closed.push_back(medium_spectrum(n, l, s.params.K));
    std::sort(closed.begin(), closed.end());
    for (int i = 0; i < spec.dim(); ++i) {
      closed_form_dev = std::max(closed_form_dev, std::abs(spec.values(i) - closed[i]));
    }
    closed_form_dev /= std::max(std::abs(spec.max()), 1e-300);
  }

  if (format == "csv") {
    std::string text = csv_row({"index", "eigenvalue", "multiplicity"});
    int gi = 0;
    for (int i = 0; i < spec.dim(); ++i) {
      while (gi + 1 < static_cast<int>(spec.groups.size()) && spec.groups[gi + 1].first <= i) ++gi;
      text += csv_row({std::to_string(i), format_double(spec.values(i)),
                       std::to_string(spec.groups[gi].multiplicity)});
    }
    write_output(text, out_path, out);
  } else {
    json report;
    report["l"] = l;
    report["kappa2"] = kappa2;
    report["K"] = s.params.K;
    report["regime"] = regime_name(classify_regime(kappa2, l).regime);
    report["e0"] = spec.min();
    report["emax"] = spec.max();
    json levels = json::array();
    for (const auto& g : spec.groups) {
      levels.push_back(json{{"energy", g.value}, {"multiplicity", g.multiplicity}});
    }
    report["levels"] = levels;
    json unc;
    unc["analytic_plus"] = uncertainty_json(
        uncertainty_report(s.rep, s.qc, l3_eigenstate(s.rep, s.rep.two_l)));
    unc["analytic_minus"] = uncertainty_json(
        uncertainty_report(s.rep, s.qc, l3_eigenstate(s.rep, -s.rep.two_l)));
    json eigen = json::array();
    for (int i = 0; i < spec.dim(); ++i) {
      json e = uncertainty_json(uncertainty_report(s.rep, s.qc, spec.vectors.col(i)));
      e["index"] = i;
      eigen.push_back(e);
    }
    unc["eigenstates"] = eigen;
    report["uncertainty"] = unc;
    if (kappa2 == 1.0) report["medium_closed_form_max_rel_dev"] = closed_form_dev;
    write_output(report.dump(2) + "\n", out_path, out);
  }

  if (kappa2 == 1.0 && closed_form_dev > 1e-8) {
    err << "spectrum: closed-form deviation " << closed_form_dev << " exceeds 1e-8\n";
    return kTolerance;
  }
  return kOk;
}

int cmd_classify(const std::string& l_grid, const std::string& kappa2_grid,
                 const std::string& out_path, std::ostream& out) {
  const auto ls = parse_grid(l_grid, "--l-grid");
  const auto ks = parse_grid(kappa2_grid, "--kappa2-grid");
  std::string text = csv_row({"l", "kappa2", "regime"});
  for (double l : ls) {
    half_integer_to_2l(l);
    for (double k2 : ks) {
      text += csv_row({format_double(l), format_double(k2),
                       regime_name(classify_regime(k2, l).regime)});
    }
  }
  write_output(text, out_path, out);
  return kOk;
}

int cmd_uncertainty(double l, double kappa2, double K, double hbar, double mass, double ratio,
                    const std::string& state, const std::string& out_path, std::ostream& out) {
  const OscillatorSetup s = oscillator_setup(l, kappa2, K, hbar, mass, ratio);
  Vector psi;
  if (state == "l3max") {
    psi = l3_eigenstate(s.rep, s.rep.two_l);
  } else if (state == "l3min") {
    psi = l3_eigenstate(s.rep, -s.rep.two_l);
  } else if (state == "ground") {
    const Matrix h = build_hamiltonian(s.rep, s.qc, s.params);
    psi = hermitian_eigensystem(h).vectors.col(0);
  } else {
    int index = -1;
    try {
      index = std::stoi(state);
    } catch (const std::exception&) {
      throw ValidationError("--state must be l3max, l3min, ground, or an eigenvector index");
    }
    const Matrix h = build_hamiltonian(s.rep, s.qc, s.params);
    const Spectrum spec = hermitian_eigensystem(h);
    if (index < 0 || index >= spec.dim()) {
      throw ValidationError("--state index out of range");
    }
    psi = spec.vectors.col(index);
  }
  json report = uncertainty_json(uncertainty_report(s.rep, s.qc, psi));
  report["l"] = l;
  report["kappa2"] = kappa2;
  report["K"] = s.params.K;
  report["state"] = state;
  write_output(report.dump(2) + "\n", out_path, out);
  return kOk;
}

int cmd_converge(double l, int count, double hbar, double omega, const std::string& out_path,
                 std::ostream& out) {
  const int two_l = half_integer_to_2l(l);
  if (count < 1 || count > two_l + 1) {
    throw ValidationError("converge: --count must lie in 1..2l+1");
  }
  const double K = hbar * omega / l;  // correspondence scaling K*l = hbar*omega
  const CanonicalOscillator osc = make_canonical(hbar, 1.0, omega * omega);
  std::string text = csv_row({"n", "finite_energy", "canonical_energy", "rel_dev"});
  for (int n = 0; n < count; ++n) {
    const double fin = medium_spectrum(n, l, K);
    const double can = canonical_level(n, osc);
    text += csv_row({std::to_string(n), format_double(fin), format_double(can),
                     format_double(std::abs(fin - can) / can)});
  }
  write_output(text, out_path, out);
  return kOk;
}

int cmd_algebra_su2(double l, const std::string& out_path, std::ostream& out) {
  const AngularMomentumRep rep = build_angular_momentum(l);
  const RepReport r = rep_report(rep);
  json report{{"l", l},
              {"dim", rep.dim},
              {"commutator_residual", r.commutator_residual},
              {"casimir_residual", r.casimir_residual},
              {"hermiticity_residual", r.hermiticity_residual},
              {"commutator_bound", 1e-12 * (1.0 + rep.l())},
              {"casimir_bound", 1e-12 * rep.casimir()}};
  write_output(report.dump(2) + "\n", out_path, out);
  return kOk;
}

StructureTensor named_tensor(const std::string& name, double hbar, double hbar1, double hbar2,
                             double eps) {
  if (name == "so3") return so3_epsilon_tensor();
  if (name == "heisenberg") return heisenberg_tensor(hbar);
  if (name == "flexed") return flexed_oscillator_algebra(hbar, hbar1, hbar2, eps);
  if (name == "so31") {
    LieBasisRep basis;
    const So31Rep rep = defining_rep_so31();
    basis.generators = rep.L;
    basis.labels = rep.pair_labels;
    return closure_check(basis).tensor;
  }
  throw ValidationError("unknown tensor '" + name + "' (so3|heisenberg|flexed|so31)");
}

int cmd_algebra_jacobi(const std::string& tensor, double hbar, double hbar1, double hbar2,
                       double eps, const std::string& out_path, std::ostream& out) {
  const StructureTensor t = named_tensor(tensor, hbar, hbar1, hbar2, eps);
  json report{{"tensor", tensor}, {"dim", t.dim()}, {"jacobi_residual", jacobi_residual(t)}};
  write_output(report.dump(2) + "\n", out_path, out);
  return kOk;
}

int cmd_algebra_killing(const std::string& tensor, double hbar, double hbar1, double hbar2,
                        double eps, const std::string& out_path, std::ostream& out) {
  const StructureTensor t = named_tensor(tensor, hbar, hbar1, hbar2, eps);
  const KillingReport kr = killing_report(t);
  json b = json::array();
  for (int i = 0; i < kr.killing.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < kr.killing.cols(); ++j) row.push_back(kr.killing(i, j));
    b.push_back(row);
  }
  json report{{"tensor", tensor},
              {"dim", t.dim()},
              {"killing", b},
              {"rank", kr.rank},
              {"signature", json{{"positive", kr.positive},
                                 {"negative", kr.negative},
                                 {"zero", kr.zero}}},
              {"semisimple", kr.semisimple},
              {"singular_values", kr.singular_values}};
  write_output(report.dump(2) + "\n", out_path, out);
  return kOk;
}

int cmd_algebra_flex(const std::string& eps_grid, double hbar, double hbar1, double hbar2,
                     const std::string& out_path, std::ostream& out) {
  const auto grid = parse_grid(eps_grid, "--eps-grid");
  const StructureTensor flat = flexed_oscillator_algebra(hbar, hbar1, hbar2, 0.0);
  std::string text = csv_row({"eps", "killing_rank", "sv1", "sv2", "sv3", "distance_to_flat"});
  for (double eps : grid) {
    const StructureTensor t = flexed_oscillator_algebra(hbar, hbar1, hbar2, eps);
    const KillingReport kr = killing_report(t);
    text += csv_row({format_double(eps), std::to_string(kr.rank),
                     format_double(kr.singular_values[0]), format_double(kr.singular_values[1]),
                     format_double(kr.singular_values[2]),
                     format_double(contraction_distance(t, flat))});
  }
  write_output(text, out_path, out);
  return kOk;
}

int cmd_aline(int n, const std::string& out_path, std::ostream& out) {
  const ALineRep rep = a_line_rep(n);
  const ClosureResult closure = closure_check(rep.basis);
  // [q^1, p_1] = E_11 - E_00 is the defining regularized bracket.
  const int dim = n + 1;
  Matrix expected = Matrix::Zero(dim, dim);
  expected(1, 1) = 1.0;
  expected(0, 0) = -1.0;
  const double qp_residual = max_norm(commutator(rep.q[0], rep.p[0]) - expected);
  double trace_sum = 0.0;
  for (int mu = 0; mu < dim; ++mu) trace_sum += rep.basis.generators[mu * dim + mu].trace().real();
  json report{{"n", n},
              {"dim", dim},
              {"basis_size", rep.basis.size()},
              {"closure_residual", closure.residual},
              {"qp_bracket_residual", qp_residual},
              {"diagonal_trace_sum", trace_sum}};
  write_output(report.dump(2) + "\n", out_path, out);
  return kOk;
}

int cmd_dline(int n, double Q, double P, double R, const std::string& out_path,
              std::ostream& out) {
  const DLineRep rep = d_line_rep(n, Q, P, R);
  const ClosureResult closure = closure_check(rep.basis);
  double cross = 0.0;
  if (n >= 2) cross = max_norm(commutator(rep.q[0], rep.p[1]));
  json report{{"n", n},
              {"dim", n + 2},
              {"basis_size", rep.basis.size()},
              {"closure_residual", closure.residual},
              {"qp_coefficient", rep.qp_coefficient},
              {"qp_cross_norm", cross}};
  write_output(report.dump(2) + "\n", out_path, out);
  return kOk;
}

int cmd_dyn_verify(const std::string& ledger_csv, int clifford_n, const std::string& out_path,
                   std::ostream& out) {
  const auto q = parse_grid(ledger_csv, "--ledger");
  if (q.size() != 6) {
    throw ValidationError("--ledger expects six values Qb,Qq,Qp,Qt,QE,Qr");
  }
  const ConstantLedger ledger = make_ledger(q[0], q[1], q[2], q[3], q[4], q[5]);

  std::vector<Matrix> six;
  std::string rep_name;
  bool half = false;
  if (clifford_n > 0) {
    const DynamicalRep rep = dynamical_rep(clifford_n);
    six = rep.action;
    rep_name = "clifford-" + std::to_string(clifford_n);
    half = true;
  } else {
    six = defining_rep_so31().L;
    rep_name = "defining";
  }
  const PhysicalGenerators gens = physical_generators(ledger, six, half);
  const CommutatorTable table = commutator_table(gens);
  const JacobiChain chain = jacobi_constraint_chain(ledger);

  json rows = json::array();
  for (const auto& row : table.rows) {
    rows.push_back(json{{"pair", row.v + "," + row.w},
                        {"target", row.target},
                        {"coeff_measured", row.coeff_measured},
                        {"coeff_expected_pattern", row.coeff_pattern},
                        {"sign_match", row.sign_match},
                        {"residual", row.residual}});
  }
  json report{{"ledger", json{{"Qb", ledger.Qb},
                              {"Qq", ledger.Qq},
                              {"Qp", ledger.Qp},
                              {"Qt", ledger.Qt},
                              {"QE", ledger.QE},
                              {"Qr", ledger.Qr},
                              {"hbar", ledger.hbar()}}},
              {"representation", rep_name},
              {"rows", rows},
              {"zero_rows", table.zero_rows},
              {"global_constant", table.global_constant},
              {"global_constant_spread", table.global_constant_spread},
              {"max_residual", table.max_residual},
              {"jacobi_chain", json{{"hbar", chain.hbar},
                                    {"hbar_pb", chain.hbar_pb},
                                    {"hbar_qt", chain.hbar_qt},
                                    {"lhs", chain.lhs},
                                    {"rhs", chain.rhs},
                                    {"rel_error", chain.rel_error}}}};
  write_output(report.dump(2) + "\n", out_path, out);
  return kOk;
}

int cmd_clifford_verify(const std::string& mode, int n, double l, double ratio, double hbar,
                        const std::string& golden, const std::string& out_path, std::ostream& out,
                        std::ostream& err) {
  json report;
  std::uint64_t hash = 0;
  if (mode == "stationary") {
    const QuantumConstants qc = derive_constants(hbar, l, ratio);
    const StationaryRep rep = stationary_rep(n, qc);
    hash = golden_hash(rep.cl);
    report = json{{"mode", mode},
                  {"n", n},
                  {"signature", json{{"positive", rep.cl.p_pos}, {"negative", rep.cl.q_neg}}},
                  {"dim", rep.cl.dim},
                  {"residuals", json{{"anticommutation", anticommutation_residual(rep.cl)},
                                     {"closure", rep.closure_residual}}},
                  {"effective_constants", json{{"hbar_eff", rep.hbar_eff},
                                               {"hbar1_eff", rep.hbar1_eff},
                                               {"hbar2_eff", rep.hbar2_eff}}}};
  } else if (mode == "dynamical") {
    const DynamicalRep rep = dynamical_rep(n);
    hash = golden_hash(rep.cl);
    report = json{{"mode", mode},
                  {"n", n},
                  {"signature", json{{"positive", rep.cl.p_pos}, {"negative", rep.cl.q_neg}}},
                  {"dim", rep.spinor_dim},
                  {"action_dim", rep.action_dim},
                  {"residuals", json{{"anticommutation", anticommutation_residual(rep.cl)},
                                     {"closure", rep.closure_residual}}},
                  {"effective_constants",
                   json{{"structure_constant_ratio", rep.structure_constant_ratio}}}};
  } else {
    throw ValidationError("--mode must be stationary or dynamical");
  }
  char hex[32];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(hash));
  report["golden_hash"] = hex;
  if (!golden.empty()) {
    report["golden_match"] = golden == hex;
  }
  write_output(report.dump(2) + "\n", out_path, out);
  if (!golden.empty() && golden != hex) {
    err << "clifford: golden hash mismatch (got " << hex << ", expected " << golden << ")\n";
    return kTolerance;
  }
  return kOk;
}

int cmd_thermal(double l, double kappa2, double K, double hbar, double mass, double ratio,
                const std::string& beta_grid, const std::string& out_path, std::ostream& out) {
  const auto betas = parse_grid(beta_grid, "--beta-grid");
  const OscillatorSetup s = oscillator_setup(l, kappa2, K, hbar, mass, ratio);
  const Matrix h = build_hamiltonian(s.rep, s.qc, s.params);
  const Spectrum spec = hermitian_eigensystem(h);
  std::string text = csv_row({"beta", "Z", "mean_energy", "heat_capacity"});
  for (double beta : betas) {
    const ThermalReport r = partition_function(spec, beta);
    text += csv_row({format_double(beta), format_double(r.Z), format_double(r.mean_energy),
                     format_double(r.heat_capacity)});
  }
  write_output(text, out_path, out);
  return kOk;
}

// Expand --config file.json into option tokens placed before the explicit
// flags, so command-line values win. Keys must name long options of the
// selected subcommand; unknown keys are rejected.
std::vector<std::string> apply_config(const std::vector<std::string>& args, CLI::App& app) {
  std::vector<std::string> cleaned;
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ValidationError("--config requires a path");
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      cleaned.push_back(args[i]);
    }
  }
  if (config_path.empty()) return cleaned;

  std::ifstream f(config_path);
  if (!f) throw ValidationError("cannot open config file: " + config_path);
  json config;
  try {
    f >> config;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad config JSON: ") + e.what());
  }
  if (!config.is_object()) throw ValidationError("config must be a JSON object");

  // Locate the subcommand the config applies to.
  CLI::App* target = &app;
  std::size_t insert_at = 0;
  while (insert_at < cleaned.size()) {
    CLI::App* next = nullptr;
    for (CLI::App* sub : target->get_subcommands(std::function<bool(CLI::App*)>{})) {
      if (sub->get_name() == cleaned[insert_at]) {
        next = sub;
        break;
      }
    }
    if (!next) break;
    target = next;
    ++insert_at;
  }
  if (target == &app) throw ValidationError("--config requires a subcommand");

  std::vector<std::string> tokens;
  for (const auto& [key, value] : config.items()) {
    const std::string flag = "--" + key;
    if (!target->get_option_no_throw(flag)) {
      throw ValidationError("config key '" + key + "' is not an option of '" +
                            target->get_name() + "'");
    }
    tokens.push_back(flag);
    if (value.is_string()) {
      tokens.push_back(value.get<std::string>());
    } else {
      tokens.push_back(value.dump());
    }
  }
  cleaned.insert(cleaned.begin() + insert_at, tokens.begin(), tokens.end());
  return cleaned;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finq: finite quantum oscillator and Lie-algebra toolkit"};
  app.require_subcommand(0, 1);
  // Later occurrences win so explicit flags override --config values.
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  struct {
    double l = 10.0, kappa2 = 1.0, K = 0.0, hbar = 1.0, mass = 1.0, ratio = 1.0;
    double degeneracy_tol = -1.0;
    std::string format = "csv", out_path;
  } sp;
  CLI::App* spectrum = app.add_subcommand("spectrum", "Finite-oscillator spectrum");
  spectrum->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  spectrum->add_option("--l", sp.l, "Angular momentum quantum number (half-integer)")
      ->capture_default_str();
  spectrum->add_option("--kappa2", sp.kappa2, "Potential-to-kinetic quantum ratio")
      ->capture_default_str();
  spectrum->add_option("--K", sp.K, "Energy scale; 0 derives it from hbar, l, ratio, mass")
      ->capture_default_str();
  spectrum->add_option("--hbar", sp.hbar, "Planck constant")->capture_default_str();
  spectrum->add_option("--mass", sp.mass, "Oscillator mass")->capture_default_str();
  spectrum->add_option("--ratio", sp.ratio, "hbar'/hbar''")->capture_default_str();
  spectrum->add_option("--degeneracy-tol", sp.degeneracy_tol,
                       "Level grouping tolerance; negative selects 1e-8*max|E|")
      ->capture_default_str();
  spectrum->add_option("--format", sp.format, "csv or json")->capture_default_str();
  spectrum->add_option("--out", sp.out_path, "Output file (default stdout)");

  struct {
    std::string l_grid = "1,10,100", kappa2_grid = "0.001,1,1000", out_path;
  } cl;
  CLI::App* classify = app.add_subcommand("classify", "Regime sweep over (l, kappa2)");
  classify->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  classify->add_option("--l-grid", cl.l_grid, "Comma-separated l values")->capture_default_str();
  classify->add_option("--kappa2-grid", cl.kappa2_grid, "Comma-separated kappa2 values")
      ->capture_default_str();
  classify->add_option("--out", cl.out_path, "Output file (default stdout)");

  struct {
    double l = 10.0, kappa2 = 1.0, K = 0.0, hbar = 1.0, mass = 1.0, ratio = 1.0;
    std::string state = "l3max", out_path;
  } un;
  CLI::App* uncertainty = app.add_subcommand("uncertainty", "Uncertainty report on a state");
  uncertainty->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  uncertainty->add_option("--l", un.l, "Angular momentum quantum number")->capture_default_str();
  uncertainty->add_option("--kappa2", un.kappa2, "Potential-to-kinetic quantum ratio")
      ->capture_default_str();
  uncertainty->add_option("--K", un.K, "Energy scale; 0 derives it")->capture_default_str();
  uncertainty->add_option("--hbar", un.hbar, "Planck constant")->capture_default_str();
  uncertainty->add_option("--mass", un.mass, "Oscillator mass")->capture_default_str();
  uncertainty->add_option("--ratio", un.ratio, "hbar'/hbar''")->capture_default_str();
  uncertainty->add_option("--state", un.state, "l3max | l3min | ground | eigenvector index")
      ->capture_default_str();
  uncertainty->add_option("--out", un.out_path, "Output file (default stdout)");

  struct {
    double l = 10000.0, hbar = 1.0, omega = 1.0;
    int count = 10;
    std::string out_path;
  } cv;
  CLI::App* converge = app.add_subcommand("converge", "Closed-form comparison with the canonical oscillator");
  converge->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  converge->add_option("--l", cv.l, "Angular momentum quantum number")->capture_default_str();
  converge->add_option("--count", cv.count, "Number of low levels to compare")
      ->capture_default_str();
  converge->add_option("--hbar", cv.hbar, "Planck constant")->capture_default_str();
  converge->add_option("--omega", cv.omega, "Canonical angular frequency")->capture_default_str();
  converge->add_option("--out", cv.out_path, "Output file (default stdout)");

  CLI::App* algebra = app.add_subcommand("algebra", "Structure-tensor reports");
  struct {
    double l = 1.0;
    std::string out_path;
  } su2a;
  CLI::App* su2 = algebra->add_subcommand("su2", "Angular-momentum representation residuals");
  su2->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  su2->add_option("--l", su2a.l, "Angular momentum quantum number")->capture_default_str();
  su2->add_option("--out", su2a.out_path, "Output file (default stdout)");

  struct {
    std::string tensor = "so3", out_path;
    double hbar = 1.0, hbar1 = 1.0, hbar2 = 1.0, eps = 1.0;
  } ja;
  CLI::App* jacobi = algebra->add_subcommand("jacobi", "Jacobi residual of a structure tensor");
  jacobi->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  jacobi->add_option("--tensor", ja.tensor, "so3 | heisenberg | flexed | so31")
      ->capture_default_str();
  jacobi->add_option("--hbar", ja.hbar, "hbar (flexed/heisenberg)")->capture_default_str();
  jacobi->add_option("--hbar1", ja.hbar1, "hbar' (flexed)")->capture_default_str();
  jacobi->add_option("--hbar2", ja.hbar2, "hbar'' (flexed)")->capture_default_str();
  jacobi->add_option("--eps", ja.eps, "Flexion parameter (flexed)")->capture_default_str();
  jacobi->add_option("--out", ja.out_path, "Output file (default stdout)");

  struct {
    std::string tensor = "so3", out_path;
    double hbar = 1.0, hbar1 = 1.0, hbar2 = 1.0, eps = 1.0;
  } ki;
  CLI::App* killing = algebra->add_subcommand("killing", "Killing form, rank, signature");
  killing->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  killing->add_option("--tensor", ki.tensor, "so3 | heisenberg | flexed | so31")
      ->capture_default_str();
  killing->add_option("--hbar", ki.hbar, "hbar (flexed/heisenberg)")->capture_default_str();
  killing->add_option("--hbar1", ki.hbar1, "hbar' (flexed)")->capture_default_str();
  killing->add_option("--hbar2", ki.hbar2, "hbar'' (flexed)")->capture_default_str();
  killing->add_option("--eps", ki.eps, "Flexion parameter (flexed)")->capture_default_str();
  killing->add_option("--out", ki.out_path, "Output file (default stdout)");

  struct {
    std::string eps_grid = "0,0.001,0.1,1", out_path;
    double hbar = 1.0, hbar1 = 1.0, hbar2 = 1.0;
  } fx;
  CLI::App* flex = algebra->add_subcommand("flex", "Killing data along the flexion homotopy");
  flex->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  flex->add_option("--eps-grid", fx.eps_grid, "Comma-separated eps values")
      ->capture_default_str();
  flex->add_option("--hbar", fx.hbar, "hbar")->capture_default_str();
  flex->add_option("--hbar1", fx.hbar1, "hbar'")->capture_default_str();
  flex->add_option("--hbar2", fx.hbar2, "hbar''")->capture_default_str();
  flex->add_option("--out", fx.out_path, "Output file (default stdout)");

  struct {
    int n = 2;
    std::string out_path;
  } al;
  CLI::App* aline = app.add_subcommand("aline", "Matrix-unit regularization checks");
  aline->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  aline->add_option("--n", al.n, "Number of q/p pairs")->capture_default_str();
  aline->add_option("--out", al.out_path, "Output file (default stdout)");

  struct {
    int n = 2;
    double Q = 1.0, P = 1.0, R = 1.0;
    std::string out_path;
  } dl;
  CLI::App* dline = app.add_subcommand("dline", "Orthogonal-generator regularization checks");
  dline->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  dline->add_option("--n", dl.n, "Number of q/p pairs (even)")->capture_default_str();
  dline->add_option("--Q", dl.Q, "Position regulant")->capture_default_str();
  dline->add_option("--P", dl.P, "Momentum regulant")->capture_default_str();
  dline->add_option("--R", dl.R, "Action regulant")->capture_default_str();
  dline->add_option("--out", dl.out_path, "Output file (default stdout)");

  CLI::App* dyn = app.add_subcommand("dyn", "Dynamical algebra verification");
  struct {
    std::string ledger = "1,1,1,1,1,1", out_path;
    int clifford = 0;
  } dv;
  CLI::App* verify = dyn->add_subcommand("verify", "15-commutator table for a ledger");
  verify->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  verify->add_option("--ledger", dv.ledger, "Qb,Qq,Qp,Qt,QE,Qr")->capture_default_str();
  verify->add_option("--clifford", dv.clifford,
                     "Use the commutation action on Cl(3N,N) with N replicas (0 = defining rep)")
      ->capture_default_str();
  verify->add_option("--out", dv.out_path, "Output file (default stdout)");

  CLI::App* clifford = app.add_subcommand("clifford", "Clifford representation checks");
  struct {
    std::string mode = "stationary", golden, out_path;
    int n = 2;
    double l = 10.0, ratio = 1.0, hbar = 1.0;
  } cf;
  CLI::App* cverify = clifford->add_subcommand("verify", "Build and verify a representation");
  cverify->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  cverify->add_option("--mode", cf.mode, "stationary | dynamical")->capture_default_str();
  cverify->add_option("--n", cf.n, "Replica count")->capture_default_str();
  cverify->add_option("--l", cf.l, "Angular momentum for the quantum scales (stationary)")
      ->capture_default_str();
  cverify->add_option("--ratio", cf.ratio, "hbar'/hbar'' (stationary)")->capture_default_str();
  cverify->add_option("--hbar", cf.hbar, "Planck constant (stationary)")->capture_default_str();
  cverify->add_option("--golden", cf.golden, "Expected 16-digit hex golden hash");
  cverify->add_option("--out", cf.out_path, "Output file (default stdout)");

  struct {
    double l = 10.0, kappa2 = 1.0, K = 0.0, hbar = 1.0, mass = 1.0, ratio = 1.0;
    std::string beta_grid = "0.1,1,10", out_path;
  } th;
  CLI::App* thermal = app.add_subcommand("thermal", "Canonical-ensemble sums over the spectrum");
  thermal->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  thermal->add_option("--l", th.l, "Angular momentum quantum number")->capture_default_str();
  thermal->add_option("--kappa2", th.kappa2, "Potential-to-kinetic quantum ratio")
      ->capture_default_str();
  thermal->add_option("--K", th.K, "Energy scale; 0 derives it")->capture_default_str();
  thermal->add_option("--hbar", th.hbar, "Planck constant")->capture_default_str();
  thermal->add_option("--mass", th.mass, "Oscillator mass")->capture_default_str();
  thermal->add_option("--ratio", th.ratio, "hbar'/hbar''")->capture_default_str();
  thermal->add_option("--beta-grid", th.beta_grid, "Comma-separated inverse temperatures")
      ->capture_default_str();
  thermal->add_option("--out", th.out_path, "Output file (default stdout)");

  try {
    const std::vector<std::string> expanded = apply_config(args, app);
    // CLI11 parses argv-style vectors in reverse.
    std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
    app.parse(reversed);

    if (spectrum->parsed()) {
      return cmd_spectrum(sp.l, sp.kappa2, sp.K, sp.hbar, sp.mass, sp.ratio, sp.format,
                          sp.out_path, sp.degeneracy_tol, out, err);
    }
    if (classify->parsed()) return cmd_classify(cl.l_grid, cl.kappa2_grid, cl.out_path, out);
    if (uncertainty->parsed()) {
      return cmd_uncertainty(un.l, un.kappa2, un.K, un.hbar, un.mass, un.ratio, un.state,
                             un.out_path, out);
    }
    if (converge->parsed()) return cmd_converge(cv.l, cv.count, cv.hbar, cv.omega, cv.out_path, out);
    if (su2->parsed()) return cmd_algebra_su2(su2a.l, su2a.out_path, out);
    if (jacobi->parsed()) {
      return cmd_algebra_jacobi(ja.tensor, ja.hbar, ja.hbar1, ja.hbar2, ja.eps, ja.out_path, out);
    }
    if (killing->parsed()) {
      return cmd_algebra_killing(ki.tensor, ki.hbar, ki.hbar1, ki.hbar2, ki.eps, ki.out_path, out);
    }
    if (flex->parsed()) {
      return cmd_algebra_flex(fx.eps_grid, fx.hbar, fx.hbar1, fx.hbar2, fx.out_path, out);
    }
    if (aline->parsed()) return cmd_aline(al.n, al.out_path, out);
    if (dline->parsed()) return cmd_dline(dl.n, dl.Q, dl.P, dl.R, dl.out_path, out);
    if (verify->parsed()) return cmd_dyn_verify(dv.ledger, dv.clifford, dv.out_path, out);
    if (cverify->parsed()) {
      return cmd_clifford_verify(cf.mode, cf.n, cf.l, cf.ratio, cf.hbar, cf.golden, cf.out_path,
                                 out, err);
    }
    if (thermal->parsed()) {
      return cmd_thermal(th.l, th.kappa2, th.K, th.hbar, th.mass, th.ratio, th.beta_grid,
                         th.out_path, out);
    }
    out << app.help();
    return kOk;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kTolerance;
  } catch (const DiagnosticError& e) {
    err << "error: " << e.what() << "\n";
    return kTolerance;
  }
}

} // namespace finq::cli
