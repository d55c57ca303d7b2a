#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "finq/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = finq::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

} // namespace

TEST_CASE("spectrum csv starts at the ground energy") {
  const auto r = run_cli({"spectrum", "--l", "10", "--kappa2", "1", "--K", "1"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, first;
  std::getline(lines, header);
  CHECK(header == "index,eigenvalue,multiplicity");
  std::getline(lines, first);
  CHECK(first.rfind("0,5", 0) == 0);  // E0 = K*l/2 = 5
  CHECK(first.back() == '2');        // doubly degenerate ground level
}

TEST_CASE("spectrum json report carries the documented keys") {
  const auto r = run_cli({"spectrum", "--l", "4", "--kappa2", "1", "--K", "1",
                          "--format", "json"});
  CHECK(r.code == 0);
  const json report = json::parse(r.out);
  for (const char* key : {"l", "kappa2", "K", "regime", "e0", "emax", "levels", "uncertainty"}) {
    CHECK(report.contains(key));
  }
  CHECK(report["regime"] == "medium");
  CHECK(report["e0"].get<double>() == doctest::Approx(2.0));    // K*l/2
  CHECK(report["emax"].get<double>() == doctest::Approx(10.0)); // (K/2) l(l+1)
  CHECK(report["uncertainty"]["analytic_plus"]["ratio"].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("dyn verify reports exactly three zero rows") {
  const auto r = run_cli({"dyn", "verify", "--ledger", "1,1,1,1,1,1"});
  CHECK(r.code == 0);
  const json report = json::parse(r.out);
  CHECK(report["zero_rows"] == 3);
  CHECK(report["rows"].size() == 15);
  int zeros = 0;
  for (const auto& row : report["rows"]) {
    if (row["target"] == "0") ++zeros;
  }
  CHECK(zeros == 3);
}

TEST_CASE("algebra flex emits the documented csv and rank 0 at eps 0") {
  const auto r = run_cli({"algebra", "flex", "--eps-grid", "0,0.001,1"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, flat;
  std::getline(lines, header);
  CHECK(header == "eps,killing_rank,sv1,sv2,sv3,distance_to_flat");
  std::getline(lines, flat);
  CHECK(flat.rfind("0,0,", 0) == 0);  // eps = 0 -> killing rank 0
}

TEST_CASE("classify and converge run deterministically") {
  const auto a = run_cli({"classify", "--l-grid", "1,100", "--kappa2-grid", "0.001,1,1000"});
  const auto b = run_cli({"classify", "--l-grid", "1,100", "--kappa2-grid", "0.001,1,1000"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("100,0.001,soft") != std::string::npos);
  CHECK(a.out.find("100,1000,hard") != std::string::npos);

  const auto c = run_cli({"converge", "--l", "10000", "--count", "10"});
  CHECK(c.code == 0);
  std::istringstream lines(c.out);
  std::string header, ground;
  std::getline(lines, header);
  CHECK(header == "n,finite_energy,canonical_energy,rel_dev");
  std::getline(lines, ground);
  CHECK(ground.rfind("0,0.5", 0) == 0);
}

TEST_CASE("identical invocations produce byte-identical files") {
  const std::string path_a = "finq_cli_test_a.csv";
  const std::string path_b = "finq_cli_test_b.csv";
  const std::vector<std::string> args = {"spectrum", "--l", "7", "--kappa2", "0.5"};
  auto with_out = [&](const std::string& p) {
    auto a = args;
    a.push_back("--out");
    a.push_back(p);
    return a;
  };
  CHECK(run_cli(with_out(path_a)).code == 0);
  CHECK(run_cli(with_out(path_b)).code == 0);
  std::ifstream fa(path_a, std::ios::binary), fb(path_b, std::ios::binary);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(!sa.str().empty());
  std::remove(path_a.c_str());
  std::remove(path_b.c_str());
}

TEST_CASE("config file supplies defaults and rejects unknown keys") {
  const std::string config_path = "finq_cli_test_config.json";
  {
    std::ofstream f(config_path);
    f << R"({"l": 10, "kappa2": 1, "K": 1})";
  }
  const auto r = run_cli({"spectrum", "--config", config_path, "--format", "json"});
  CHECK(r.code == 0);
  const json report = json::parse(r.out);
  CHECK(report["e0"].get<double>() == doctest::Approx(5.0));

  // A command-line flag overrides the config value.
  const auto overridden =
      run_cli({"spectrum", "--config", config_path, "--l", "4", "--format", "json"});
  CHECK(overridden.code == 0);
  CHECK(json::parse(overridden.out)["e0"].get<double>() == doctest::Approx(2.0));

  {
    std::ofstream f(config_path);
    f << R"({"unknown_key": 1})";
  }
  const auto bad = run_cli({"spectrum", "--config", config_path});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("unknown_key") != std::string::npos);
  std::remove(config_path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"spectrum", "--l", "0.3"}).code == 1);              // bad half-integer
  CHECK(run_cli({"dyn", "verify", "--ledger", "1,1,1,2,1,1"}).code == 1);  // bad ledger
  CHECK(run_cli({"clifford", "verify", "--mode", "dynamical", "--n", "1", "--golden",
                 "0000000000000000"})
            .code == 2);                                             // golden mismatch
  CHECK(run_cli({"nonsense"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("uncertainty subcommand state selection") {
  const auto r = run_cli({"uncertainty", "--l", "100", "--kappa2", "1", "--state", "l3max"});
  CHECK(r.code == 0);
  const json report = json::parse(r.out);
  CHECK(report["ratio"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

  const auto ground =
      run_cli({"uncertainty", "--l", "20", "--kappa2", "0.001", "--state", "ground"});
  CHECK(ground.code == 0);
  CHECK(json::parse(ground.out)["ratio"].get<double>() < 0.1);
}

TEST_CASE("aline and dline reports") {
  const auto a = run_cli({"aline", "--n", "3"});
  CHECK(a.code == 0);
  const json ar = json::parse(a.out);
  CHECK(ar["closure_residual"].get<double>() <= 1e-12);
  CHECK(ar["qp_bracket_residual"].get<double>() == 0.0);
  CHECK(ar["diagonal_trace_sum"].get<double>() == doctest::Approx(4.0));

  const auto d = run_cli({"dline", "--n", "2", "--Q", "2", "--P", "3", "--R", "0.5"});
  CHECK(d.code == 0);
  const json dr = json::parse(d.out);
  CHECK(dr["closure_residual"].get<double>() <= 1e-13);
  CHECK(std::abs(dr["qp_coefficient"].get<double>()) == doctest::Approx(12.0));
  CHECK(run_cli({"dline", "--n", "3"}).code == 1);
}

TEST_CASE("thermal csv") {
  const auto r = run_cli({"thermal", "--l", "5", "--kappa2", "1", "--K", "1",
                          "--beta-grid", "0.5,1"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "beta,Z,mean_energy,heat_capacity");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 2);
}
