#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "fuzzopt/examples.hpp"
#include "fuzzopt/json_io.hpp"

#ifndef FUZZOPT_CLI_PATH
#define FUZZOPT_CLI_PATH "fuzzopt"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FUZZOPT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/fuzzopt_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string problem_json(const fuzzopt::FuzzyProblem& p) {
  fuzzopt::json terms = fuzzopt::json::array();
  auto expr_to_json = [](const fuzzopt::FuzzyExpr& e) {
    fuzzopt::json j{{"dim", e.dimension()}, {"terms", fuzzopt::json::array()}};
    for (const fuzzopt::Term& t : e.terms()) {
      fuzzopt::json jt{{"coef", fuzzopt::to_json(t.coef)}, {"exp", t.mono.exponents}};
      if (!t.mono.shift.empty()) jt["shift"] = t.mono.shift;
      j["terms"].push_back(jt);
    }
    if (e.gh_const()) j["gh_const"] = fuzzopt::to_json(*e.gh_const());
    return j;
  };
  fuzzopt::json j{{"objective", expr_to_json(p.objective)},
                  {"constraints", fuzzopt::json::array()}};
  for (const fuzzopt::FuzzyExpr& c : p.constraints)
    j["constraints"].push_back(expr_to_json(c));
  return j.dump();
}

std::string dataset_json(const fuzzopt::FuzzyDataset& d) {
  fuzzopt::json pts = fuzzopt::json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    fuzzopt::json coords = fuzzopt::json::array();
    for (const fuzzopt::FuzzyNumber& m : d.points[i].components())
      coords.push_back(fuzzopt::to_json(m));
    pts.push_back(fuzzopt::json{{"coords", coords}, {"label", d.labels[i]}});
  }
  return fuzzopt::json{{"points", pts}}.dump();
}

}  // namespace

TEST_CASE("cuts subcommand prints the documented table") {
  const CliResult r = run_cli("cuts --number \"{\\\"tri\\\":[2,3,7]}\" --levels 3 --emit-csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "rho,lo,hi\n0,2,7\n0.5,2.5,5\n1,3,3\n");
}

TEST_CASE("json output is versioned and deterministic") {
  const std::string data = write_temp("paper6.json", dataset_json(fuzzopt::examples::svm_6pt()));
  const CliResult a = run_cli("svm --data " + data);
  const CliResult b = run_cli("svm --data " + data);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto parsed = fuzzopt::json::parse(a.out);
  CHECK(parsed["schema"] == "fuzzopt/1");
  CHECK(parsed["objective"].get<double>() <= 5.0 + 1e-9);
}

TEST_CASE("multiplier search and verification through the cli") {
  const std::string prob = write_temp("fj1d.json", problem_json(fuzzopt::examples::fj_1d()));
  const CliResult found = run_cli("fj --problem " + prob + " --point 2");
  CHECK(found.exit_code == 0);
  const auto cert = fuzzopt::json::parse(found.out);
  CHECK(cert["found"] == true);
  const double k0 = cert["kappa0"].get<double>();
  const double k1 = cert["kappas"][0].get<double>();
  CHECK(k1 / k0 == doctest::Approx(1.6).epsilon(1e-6));

  const CliResult verified =
      run_cli("fj --problem " + prob + " --point 2 --kappa0 5 --kappas 8,0");
  CHECK(verified.exit_code == 0);
  CHECK(fuzzopt::json::parse(verified.out)["pass"] == true);

  const CliResult rejected =
      run_cli("fj --problem " + prob + " --point 2 --kappa0 1 --kappas 0,0.5");
  CHECK(rejected.exit_code == 1);

  const CliResult kkt = run_cli("kkt --problem " + prob + " --point 2 --kappas 1.6,0");
  CHECK(kkt.exit_code == 0);
  CHECK(fuzzopt::json::parse(kkt.out)["pass"] == true);
}

TEST_CASE("svm bias-set mode reproduces the fixture table") {
  const std::string data = write_temp("paper6b.json", dataset_json(fuzzopt::examples::svm_6pt()));
  const CliResult r = run_cli("svm --data " + data + " --lambda 3,1 --support 0,4");
  CHECK(r.exit_code == 0);
  const auto parsed = fuzzopt::json::parse(r.out);
  CHECK(parsed["bias"]["rho_max"].get<double>() == doctest::Approx(0.6));
  CHECK(parsed["ell_star"].get<double>() == doctest::Approx(12.0));
  CHECK(parsed["objective"].get<double>() == doctest::Approx(5.0));
}

TEST_CASE("error paths exit with the documented codes") {
  const std::string bad = write_temp("bad.json", "{not json");
  CHECK(run_cli("gordan --input " + bad).exit_code == 2);

  const std::string wrong = write_temp("wrong.json", R"({"vector":[{"tri":[3,2,1]}]})");
  CHECK(run_cli("gordan --input " + wrong).exit_code == 2);

  CHECK(run_cli("reproduce --example nonsense").exit_code == 2);
  CHECK(run_cli("cuts --number \"{\\\"tri\\\":[1,2,3]}\" --levels 1").exit_code == 2);

  // single-class data is an input error
  const std::string single = write_temp(
      "single.json",
      R"({"points":[{"coords":[{"tri":[0,1,2]}],"label":1},{"coords":[{"tri":[2,3,4]}],"label":1}]})");
  CHECK(run_cli("svm --data " + single).exit_code == 2);

  // fj at an infeasible point is a domain error
  const std::string prob = write_temp("fj1d2.json", problem_json(fuzzopt::examples::fj_1d()));
  CHECK(run_cli("fj --problem " + prob + " --point 3").exit_code == 1);
}

TEST_CASE("bundled fixtures run clean through the cli") {
  for (const std::string id : {"fj_1d", "kkt_2d", "box_cones", "svm_6pt"}) {
    const CliResult r = run_cli("reproduce --example " + id);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
  }
}

TEST_CASE("numeric defaults can come from the environment") {
  const std::string cmd = "FUZZOPT_GRID=5 " + std::string(FUZZOPT_CLI_PATH) +
                          " cuts --number \"{\\\"tri\\\":[0,1,2]}\" --emit-csv 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  CHECK(std::count(out.begin(), out.end(), '\n') == 6);  // header + 5 levels
}

TEST_CASE("results can be written to a file") {
  const std::string out_path = "/tmp/fuzzopt_test_out.json";
  const CliResult r =
      run_cli("compare --lhs \"{\\\"tri\\\":[1,2,3]}\" --rhs \"{\\\"tri\\\":[2,3,4]}\" --out " +
              out_path);
  CHECK(r.exit_code == 0);
  std::ifstream in(out_path);
  REQUIRE(in.good());
  const auto parsed = fuzzopt::json::parse(in);
  CHECK(parsed["schema"] == "fuzzopt/1");
  CHECK(parsed["order"]["strict_all"] == true);
}

TEST_CASE("gordan subcommand decides the documented instances") {
  const std::string vec = write_temp("vec.json", R"({"vector":[{"tri":[1,2,3]}]})");
  const CliResult alt1 = run_cli("gordan --input " + vec);
  CHECK(alt1.exit_code == 0);
  CHECK(fuzzopt::json::parse(alt1.out)["which"] == "alternative_i");

  const std::string neither = write_temp("neither.json", R"({"vector":[{"tri":[-1,1,2]}]})");
  const CliResult nd = run_cli("gordan --input " + neither);
  CHECK(nd.exit_code == 0);
  CHECK(fuzzopt::json::parse(nd.out)["which"] == "neither_detected");

  const std::string mat = write_temp(
      "mat.json", R"({"matrix":[[{"tri":[1,2,3]},{"tri":[-1,0,1]}]]})");
  const CliResult alt2 = run_cli("gordan --input " + mat);
  CHECK(alt2.exit_code == 0);
  CHECK(fuzzopt::json::parse(alt2.out)["which"] == "alternative_ii");
}
