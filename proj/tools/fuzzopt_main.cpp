#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzopt/examples.hpp"
#include "fuzzopt/json_io.hpp"

namespace {

using fuzzopt::json;

struct GlobalOpts {
  std::size_t grid_levels = 11;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  bool emit_csv = false;
  std::string out;
  unsigned threads = 1;

  fuzzopt::LevelGrid grid() const { return fuzzopt::LevelGrid::uniform(grid_levels); }
};

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fuzzopt::SchemaError(path, "cannot open input file");
  return json::parse(in);  // parse_error carries the byte position
}

json parse_inline(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw fuzzopt::SchemaError(what, e.what());
  }
}

void write_text(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(g.out);
    if (!out) throw fuzzopt::SchemaError(g.out, "cannot open output file");
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
  }
}

void emit(const GlobalOpts& g, json j) {
  j["schema"] = "fuzzopt/1";
  write_text(g, j.dump(2));
}

// --- subcommand payloads ---

struct CutsArgs {
  std::string number_inline;
  std::string input;
  std::size_t levels = 0;  // 0: use the global grid
};

struct PairArgs {
  std::string lhs, rhs;
};

struct ConesArgs {
  std::string input;
  std::vector<double> point;
  std::size_t trials = 10000;
};

struct GordanArgs {
  std::string input;
};

struct MultiplierArgs {
  std::string problem;
  std::vector<double> point;
  std::optional<double> kappa0;
  std::vector<double> kappas;
};

struct SvmArgs {
  std::string data;
  std::vector<double> lambda;
  std::vector<std::size_t> support;
};

struct ReproduceArgs {
  std::string example;
};

int run_cuts(const GlobalOpts& g, const CutsArgs& a) {
  json src;
  if (!a.number_inline.empty())
    src = parse_inline(a.number_inline, "--number");
  else if (!a.input.empty())
    src = load_file(a.input);
  else
    throw fuzzopt::SchemaError("cuts", "either --number or --input is required");
  const fuzzopt::FuzzyNumber m = fuzzopt::fuzzy_number_from_json(src, "$");
  if (a.levels == 1)
    throw fuzzopt::SchemaError("--levels", "table needs at least 2 levels");
  const fuzzopt::LevelGrid grid =
      a.levels >= 2 ? fuzzopt::LevelGrid::uniform(a.levels) : g.grid();
  const fuzzopt::CutFamily table = fuzzopt::CutFamily::of(m, grid);
  if (g.emit_csv) {
    write_text(g, fuzzopt::cut_table_csv(table));
    return 0;
  }
  emit(g, json{{"number", fuzzopt::to_json(m)}, {"table", fuzzopt::to_json(table)}});
  return 0;
}

int run_gh(const GlobalOpts& g, const PairArgs& a) {
  const fuzzopt::FuzzyNumber lhs =
      fuzzopt::fuzzy_number_from_json(parse_inline(a.lhs, "--lhs"), "--lhs");
  const fuzzopt::FuzzyNumber rhs =
      fuzzopt::fuzzy_number_from_json(parse_inline(a.rhs, "--rhs"), "--rhs");
  const fuzzopt::CutFamily fam = fuzzopt::gh_difference(lhs, rhs, g.grid());
  if (g.emit_csv) {
    write_text(g, fuzzopt::cut_table_csv(fam));
    return 0;
  }
  json out{{"family", fuzzopt::to_json(fam)}};
  out["is_fuzzy_number"] = fam.nested(g.tol);
  emit(g, out);
  return 0;
}

int run_compare(const GlobalOpts& g, const PairArgs& a) {
  const fuzzopt::FuzzyNumber lhs =
      fuzzopt::fuzzy_number_from_json(parse_inline(a.lhs, "--lhs"), "--lhs");
  const fuzzopt::FuzzyNumber rhs =
      fuzzopt::fuzzy_number_from_json(parse_inline(a.rhs, "--rhs"), "--rhs");
  emit(g, json{{"order", fuzzopt::to_json(fuzzopt::compare(lhs, rhs, g.tol))}});
  return 0;
}

int run_cones(const GlobalOpts& g, const ConesArgs& a) {
  const json src = load_file(a.input);
  if (!src.is_object() || !src.contains("objective") || !src.contains("set"))
    throw fuzzopt::SchemaError("$", "expected {objective, set, point?}");
  const fuzzopt::FuzzyExpr objective =
      fuzzopt::expr_from_json(src["objective"], "$.objective");
  fuzzopt::FeasibleSet set = [&]() -> fuzzopt::FeasibleSet {
    const json& s = src["set"];
    if (s.is_object() && s.contains("box"))
      return fuzzopt::box_from_json(s["box"], "$.set.box");
    if (s.is_object() && s.contains("constraints")) {
      std::vector<fuzzopt::FuzzyExpr> cs;
      for (std::size_t i = 0; i < s["constraints"].size(); ++i)
        cs.push_back(fuzzopt::expr_from_json(
            s["constraints"][i], "$.set.constraints[" + std::to_string(i) + "]"));
      return fuzzopt::FuzzyConstrained{std::move(cs)};
    }
    throw fuzzopt::SchemaError("$.set", "expected {box} or {constraints}");
  }();
  std::vector<double> point = a.point;
  if (point.empty() && src.contains("point"))
    point = fuzzopt::point_from_json(src["point"], "$.point", objective.dimension());
  if (point.size() != objective.dimension())
    throw fuzzopt::SchemaError("--point", "expected " +
                                              std::to_string(objective.dimension()) +
                                              " coordinates");
  const fuzzopt::ConeSampleReport report = fuzzopt::intersection_empty_sampled(
      objective, set, point, a.trials, g.seed, g.grid(), g.tol, g.threads);
  emit(g, fuzzopt::to_json(report));
  return 0;
}

int run_gordan(const GlobalOpts& g, const GordanArgs& a) {
  const json src = load_file(a.input);
  fuzzopt::GordanVerdict verdict;
  if (src.is_object() && src.contains("matrix"))
    verdict = fuzzopt::gordan_matrix_decide(fuzzopt::fuzzy_matrix_from_json(src, "$"),
                                            g.grid(), g.tol);
  else
    verdict = fuzzopt::gordan_vector_decide(fuzzopt::fuzzy_vector_from_json(src, "$"),
                                            g.grid(), g.tol);
  emit(g, fuzzopt::to_json(verdict));
  return 0;
}

int run_multipliers(const GlobalOpts& g, const MultiplierArgs& a, bool kkt_mode) {
  const fuzzopt::FuzzyProblem p = fuzzopt::problem_from_json(load_file(a.problem), "$");
  if (a.point.size() != p.dimension())
    throw fuzzopt::SchemaError("--point", "expected " + std::to_string(p.dimension()) +
                                              " coordinates");
  const fuzzopt::LevelGrid grid = g.grid();
  if (!a.kappas.empty() || a.kappa0) {
    if (a.kappas.size() != p.constraints.size())
      throw fuzzopt::SchemaError("--kappas", "expected one multiplier per constraint");
    const double k0 = kkt_mode ? 1.0 : a.kappa0.value_or(1.0);
    const fuzzopt::MultiplierReport report =
        fuzzopt::fritz_john_verify(p, a.point, k0, a.kappas, 1e-8, grid);
    emit(g, fuzzopt::to_json(report));
    return report.pass() ? 0 : 1;
  }
  const auto cert = kkt_mode ? fuzzopt::kkt_find(p, a.point, grid)
                             : fuzzopt::fritz_john_find(p, a.point, grid);
  if (!cert) {
    emit(g, json{{"found", false}});
    return 1;
  }
  json out = fuzzopt::to_json(*cert);
  out["found"] = true;
  emit(g, out);
  return 0;
}

int run_svm(const GlobalOpts& g, const SvmArgs& a) {
  const fuzzopt::FuzzyDataset d = fuzzopt::dataset_from_json(load_file(a.data), "$");
  const fuzzopt::LevelGrid grid = g.grid();
  if (!a.lambda.empty()) {
    if (a.lambda.size() != d.dimension())
      throw fuzzopt::SchemaError("--lambda", "expected " +
                                                 std::to_string(d.dimension()) +
                                                 " coordinates");
    std::vector<std::size_t> support = a.support;
    if (support.empty())
      throw fuzzopt::SchemaError("--support", "required together with --lambda");
    const fuzzopt::BiasSet bias = fuzzopt::svm_bias_set(d, a.lambda, support, grid);
    if (g.emit_csv) {
      write_text(g, fuzzopt::bias_table_csv(bias));
      return 0;
    }
    const double ell = bias.top().midpoint();
    double objective = 0.0;
    for (double c : a.lambda) objective += 0.5 * c * c;
    emit(g, json{{"bias", fuzzopt::to_json(bias)},
                 {"ell_star", ell},
                 {"objective", objective},
                 {"margins", fuzzopt::to_json(fuzzopt::svm_margin_report(
                                 d, a.lambda, ell, grid, g.tol))}});
    return 0;
  }
  const fuzzopt::SvmSolution sol = fuzzopt::svm_solve(d, {4, g.tol}, grid);
  if (g.emit_csv) {
    write_text(g, fuzzopt::bias_table_csv(sol.bias));
    return 0;
  }
  emit(g, fuzzopt::to_json(sol));
  return 0;
}

int run_reproduce(const GlobalOpts& g, const ReproduceArgs& a) {
  const fuzzopt::examples::ReproduceReport report =
      fuzzopt::examples::reproduce(a.example, g.seed);
  for (const auto& as : report.assertions) {
    std::cout << (as.pass ? "PASS " : "FAIL ") << report.id << ": " << as.name;
    if (!as.pass) std::cout << " (error " << as.error << ")";
    std::cout << '\n';
  }
  if (!g.out.empty()) {
    json out{{"id", report.id}, {"all_pass", report.all_pass()}};
    json as = json::array();
    for (const auto& item : report.assertions)
      as.push_back(json{{"name", item.name}, {"pass", item.pass}, {"error", item.error}});
    out["assertions"] = as;
    emit(g, out);
  }
  return report.all_pass() ? 0 : 1;
}

json error_object(const std::string& kind, const std::string& message,
                  const std::string& path = "") {
  json err{{"kind", kind}, {"message", message}};
  if (!path.empty()) err["path"] = path;
  return json{{"schema", "fuzzopt/1"}, {"error", err}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy optimization toolkit: cuts, gH arithmetic, alternative "
               "theorems, Fritz-John/KKT certificates and fuzzy-data SVM"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--grid", g.grid_levels, "number of uniform membership levels")
      ->envname("FUZZOPT_GRID")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100001}));
  app.add_option("--tol", g.tol, "comparison tolerance")
      ->envname("FUZZOPT_TOL")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "sampling seed")->envname("FUZZOPT_SEED");
  app.add_flag("--emit-csv", g.emit_csv, "emit rho,lo,hi tables as CSV");
  app.add_option("--out", g.out, "write the result to a file instead of stdout");
  app.add_option("--threads", g.threads, "worker threads for direction sampling")
      ->envname("FUZZOPT_THREADS")
      ->check(CLI::Range(1u, 64u));

  CutsArgs cuts_args;
  auto* cuts = app.add_subcommand("cuts", "tabulate the level cuts of a fuzzy number");
  cuts->add_option("--number", cuts_args.number_inline, "fuzzy number as inline JSON");
  cuts->add_option("--input", cuts_args.input, "file with a fuzzy number");
  cuts->add_option("--levels", cuts_args.levels, "table resolution (>= 2)");

  PairArgs gh_args;
  auto* gh = app.add_subcommand("gh", "level-wise generalized Hukuhara difference");
  gh->add_option("--lhs", gh_args.lhs, "left operand, inline JSON")->required();
  gh->add_option("--rhs", gh_args.rhs, "right operand, inline JSON")->required();

  PairArgs cmp_args;
  auto* cmp = app.add_subcommand("compare", "LU order of two fuzzy numbers");
  cmp->add_option("--lhs", cmp_args.lhs, "left operand, inline JSON")->required();
  cmp->add_option("--rhs", cmp_args.rhs, "right operand, inline JSON")->required();

  ConesArgs cones_args;
  auto* cones = app.add_subcommand("cones", "sampled descent/feasible cone intersection");
  cones->add_option("--input", cones_args.input, "problem file")->required();
  cones->add_option("--point", cones_args.point, "evaluation point")->delimiter(',');
  cones->add_option("--trials", cones_args.trials, "sampled directions");

  GordanArgs gordan_args;
  auto* gordan = app.add_subcommand("gordan", "fuzzy alternative theorem decision");
  gordan->add_option("--input", gordan_args.input, "fuzzy vector or matrix file")
      ->required();

  MultiplierArgs fj_args;
  auto* fj = app.add_subcommand("fj", "Fritz-John multiplier search or verification");
  fj->add_option("--problem", fj_args.problem, "problem file")->required();
  fj->add_option("--point", fj_args.point, "candidate point")
      ->required()
      ->delimiter(',');
  fj->add_option("--kappa0", fj_args.kappa0, "objective multiplier to verify");
  fj->add_option("--kappas", fj_args.kappas, "constraint multipliers to verify")
      ->delimiter(',');

  MultiplierArgs kkt_args;
  auto* kkt = app.add_subcommand("kkt", "KKT multiplier search or verification");
  kkt->add_option("--problem", kkt_args.problem, "problem file")->required();
  kkt->add_option("--point", kkt_args.point, "candidate point")
      ->required()
      ->delimiter(',');
  kkt->add_option("--kappas", kkt_args.kappas, "constraint multipliers to verify")
      ->delimiter(',');

  SvmArgs svm_args;
  auto* svm = app.add_subcommand("svm", "hard-margin separation of fuzzy data");
  svm->add_option("--data", svm_args.data, "dataset file")->required();
  svm->add_option("--lambda", svm_args.lambda,
                  "fix the normal vector and report its bias set")
      ->delimiter(',');
  svm->add_option("--support", svm_args.support, "support indices (0-based)")
      ->delimiter(',');

  ReproduceArgs rep_args;
  auto* rep = app.add_subcommand("reproduce", "run a bundled example fixture");
  rep->add_option("--example", rep_args.example,
                  "one of box_cones, fj_1d, kkt_2d, svm_6pt")
      ->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cuts) return run_cuts(g, cuts_args);
    if (*gh) return run_gh(g, gh_args);
    if (*cmp) return run_compare(g, cmp_args);
    if (*cones) return run_cones(g, cones_args);
    if (*gordan) return run_gordan(g, gordan_args);
    if (*fj) return run_multipliers(g, fj_args, false);
    if (*kkt) return run_multipliers(g, kkt_args, true);
    if (*svm) return run_svm(g, svm_args);
    if (*rep) return run_reproduce(g, rep_args);
  } catch (const fuzzopt::SchemaError& e) {
    std::cout << error_object("schema", e.what(), e.path).dump(2) << '\n';
    return 2;
  } catch (const nlohmann::json::parse_error& e) {
    std::cout << error_object("parse", e.what()).dump(2) << '\n';
    return 2;
  } catch (const fuzzopt::DomainError& e) {
    std::cout << error_object("domain", e.what()).dump(2) << '\n';
    return 2;
  } catch (const fuzzopt::DimensionMismatch& e) {
    std::cout << error_object("dimension", e.what()).dump(2) << '\n';
    return 2;
  } catch (const fuzzopt::Error& e) {
    std::cout << error_object("infeasible", e.what()).dump(2) << '\n';
    return 1;
  }
  return 2;
}
