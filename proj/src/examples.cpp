#include "fuzzopt/examples.hpp"

#include <cmath>

namespace fuzzopt::examples {

namespace {

FuzzyNumber tri(double a, double b, double c) { return FuzzyNumber::triangular(a, b, c); }

Term term(FuzzyNumber coef, std::vector<unsigned> exps, std::vector<double> shift = {}) {
  return Term{std::move(coef), Monomial{std::move(exps), std::move(shift)}};
}

}  // namespace

FuzzyProblem fj_1d() {
  FuzzyExpr objective(1,
                      {term(tri(-2, -1, 1), {2}), term(tri(-8, -4, 3), {1}),
                       term(tri(1, 2, 4), {0})});
  FuzzyExpr y1(1, {term(tri(-4, 5, 7), {1})}, tri(-8, 10, 14));
  FuzzyExpr y2(1, {term(tri(-3, -2, 0), {1})}, tri(2, 3, 6));
  return FuzzyProblem(std::move(objective), {std::move(y1), std::move(y2)});
}

FuzzyProblem kkt_2d() {
  FuzzyExpr objective(2, {term(tri(-4, -2, 0), {2, 0}), term(tri(1, 2, 3), {0, 1}),
                          term(tri(-2, 0, 5), {0, 2}), term(tri(3, 5, 6), {2, 1})});
  FuzzyExpr y1(2, {term(tri(-2, 0, 3), {1, 0}), term(tri(-6, -5, -3), {0, 1})},
               tri(-12, -10, -6));
  FuzzyExpr y2(2, {term(tri(3, 5, 6), {1, 0}), term(tri(-8, -7, -5), {0, 1})},
               tri(-2, -1, 0));
  return FuzzyProblem(std::move(objective), {std::move(y1), std::move(y2)});
}

FuzzyExpr box_objective() {
  return FuzzyExpr(2, {term(tri(2, 3, 7), {2, 0}, {1.5, 0.0}),
                       term(tri(1, 2, 5), {0, 2}), term(tri(1, 1, 1), {0, 0})});
}

Box box_region() { return Box{{1.0, 1.0}, {2.0, 2.0}}; }

FuzzyDataset svm_6pt() {
  std::vector<FuzzyVector> pts;
  pts.emplace_back(std::vector<FuzzyNumber>{tri(2, 5, 6), tri(1, 2, 3)});
  pts.emplace_back(std::vector<FuzzyNumber>{tri(3, 6, 7), tri(1, 3, 5)});
  pts.emplace_back(std::vector<FuzzyNumber>{tri(4, 7, 8), tri(1, 2, 3)});
  pts.emplace_back(std::vector<FuzzyNumber>{tri(0, 1, 2), tri(1, 3, 5)});
  pts.emplace_back(std::vector<FuzzyNumber>{tri(1, 2, 3), tri(1, 3, 5)});
  pts.emplace_back(std::vector<FuzzyNumber>{tri(0, 2, 3), tri(2, 5, 6)});
  return FuzzyDataset(std::move(pts), {1, 1, 1, -1, -1, -1});
}

namespace {

void push(ReproduceReport& r, const std::string& name, bool pass, double error = 0.0) {
  r.assertions.push_back({name, pass, error});
}

// max deviation of a cut family from affine reference endpoints lo(rho), hi(rho)
double family_error(const CutFamily& f, double lo0, double lo1, double hi0, double hi1) {
  double worst = 0.0;
  for (std::size_t l = 0; l < f.size(); ++l) {
    const double rho = f.level(l);
    worst = std::max(worst, std::abs(f.at(l).lo - (lo0 + lo1 * rho)));
    worst = std::max(worst, std::abs(f.at(l).hi - (hi0 + hi1 * rho)));
  }
  return worst;
}

ReproduceReport reproduce_fj_1d() {
  ReproduceReport r{"fj_1d", {}};
  const FuzzyProblem p = fj_1d();
  const std::vector<double> x{2.0};

  const CutFamily y1 = p.constraints[0].eval_family(x);
  push(r, "Y1(2) equals 0-tilde", is_zero(y1, 1e-12));
  const CutFamily y2 = p.constraints[1].eval_family(x);
  const double e_y2 = family_error(y2, -8, 1, -6, -1);
  push(r, "Y2(2) cuts equal [-8+rho, -6-rho]", e_y2 <= 1e-12, e_y2);

  const auto active = active_set(p, x);
  push(r, "active set is {0}", active == std::vector<std::size_t>{0});

  const FuzzyGradient gh = grad(p.objective, x);
  const double e_gh = family_error(gh[0], -16, 8, 7, -15);
  push(r, "grad H at 2 equals [-16+8rho, 7-15rho]", e_gh <= 1e-12, e_gh);
  const FuzzyGradient gy1 = grad(p.constraints[0], x);
  const double e_gy1 = family_error(gy1[0], -4, 9, 7, -2);
  push(r, "grad Y1 at 2 equals [-4+9rho, 7-2rho]", e_gy1 <= 1e-12, e_gy1);

  const MultiplierReport verify = fritz_john_verify(p, x, 5.0, {8.0, 0.0});
  push(r, "multipliers (5,8,0) verify", verify.pass());
  const double e_res = family_error(verify.residuals[0], -112, 112, 91, -91);
  push(r, "residual equals [-112+112rho, 91-91rho]", e_res <= 1e-9, e_res);

  const auto found = fritz_john_find(p, x);
  const bool roundtrip =
      found && fritz_john_verify(p, x, found->kappa0, found->kappas).pass();
  push(r, "found multipliers verify", roundtrip);

  const auto kkt = kkt_find(p, x);
  push(r, "kkt multiplier equals 1.6",
       kkt && std::abs(kkt->kappas[0] - 1.6) <= 1e-8,
       kkt ? std::abs(kkt->kappas[0] - 1.6) : 1.0);
  return r;
}

ReproduceReport reproduce_kkt_2d() {
  ReproduceReport r{"kkt_2d", {}};
  const FuzzyProblem p = kkt_2d();
  const std::vector<double> x{0.0, 2.0};

  const CutFamily y2 = p.constraints[1].eval_family(x);
  const double e_y2 = family_error(y2, -14, 1, -10, -3);
  push(r, "Y2(0,2) cuts equal [-14+rho, -10-3rho]", e_y2 <= 1e-12, e_y2);
  push(r, "active set is {0}", active_set(p, x) == std::vector<std::size_t>{0});

  const FuzzyGradient gh = grad(p.objective, x);
  push(r, "D1 H vanishes", is_zero(gh[0], 1e-12));
  const double e_d2 = family_error(gh[1], -7, 9, 23, -21);
  push(r, "D2 H equals [-7+9rho, 23-21rho]", e_d2 <= 1e-12, e_d2);

  const MultiplierReport fj = fritz_john_verify(p, x, 2.5, {1.0, 0.0});
  push(r, "multipliers (2.5,1,0) verify", fj.pass());

  const MultiplierReport kkt = fritz_john_verify(p, x, 1.0, {0.4, 0.0});
  push(r, "kkt multipliers (0.4,0) verify", kkt.pass());
  const double e_r1 = family_error(kkt.residuals[0], -0.8, 0.8, 1.2, -1.2);
  push(r, "first residual equals [-0.8+0.8rho, 1.2-1.2rho]", e_r1 <= 1e-9, e_r1);
  const double e_r2 = family_error(kkt.residuals[1], -9.4, 9.4, 21.8, -21.8);
  push(r, "second residual equals [-9.4+9.4rho, 21.8-21.8rho]", e_r2 <= 1e-9, e_r2);

  const auto found = kkt_find(p, x);
  push(r, "found kkt multipliers verify",
       found && fritz_john_verify(p, x, 1.0, found->kappas).pass());
  return r;
}

ReproduceReport reproduce_box_cones(std::uint64_t seed) {
  ReproduceReport r{"box_cones", {}};
  const FuzzyExpr h = box_objective();
  const FeasibleSet set = box_region();

  const std::vector<double> opt{1.5, 1.0};
  push(r, "descent cone holds tau2 < 0", in_descent_cone(h, opt, {0.7, -1.0}));
  push(r, "tau = (1,0) is not a descent direction", !in_descent_cone(h, opt, {1.0, 0.0}));
  push(r, "feasible cone holds tau2 >= 0",
       in_feasible_cone_box(box_region(), opt, {-1.0, 0.2}));

  const auto at_opt = intersection_empty_sampled(h, set, opt, 10000, seed);
  push(r, "no counterexample at (1.5,1) in 10^4 trials", at_opt.empty_suspected);

  const std::vector<double> bad{1.5, 2.0};
  push(r, "upward direction leaves the box at (1.5,2)",
       !in_feasible_cone_box(box_region(), bad, {0.0, 1.0}));
  const auto at_bad = intersection_empty_sampled(h, set, bad, 100, seed);
  const bool found = !at_bad.empty_suspected && at_bad.counterexample &&
                     (*at_bad.counterexample)[1] < 0.0;
  push(r, "counterexample with tau2 < 0 found at (1.5,2) within 100 trials", found);
  return r;
}

ReproduceReport reproduce_svm_6pt() {
  ReproduceReport r{"svm_6pt", {}};
  const FuzzyDataset d = svm_6pt();

  const std::vector<double> lambda_faithful =
      svm_stationary_lambda(d, {1, 0, 0, 0, 1, 0});
  const double e_l = std::max(std::abs(lambda_faithful[0] - 3.0),
                              std::abs(lambda_faithful[1] + 1.0));
  push(r, "stationary lambda for kappa=(1,0,0,0,1,0) is (3,-1)", e_l <= 1e-12, e_l);

  const std::vector<double> lambda{3.0, 1.0};
  const BiasSet bias = svm_bias_set(d, lambda, {0, 4});
  double e_bias = 0.0;
  for (std::size_t l = 0; l < bias.intervals.size(); ++l) {
    const double rho = bias.grid[l];
    if (rho > 0.6 + 1e-12) {
      if (bias.intervals[l]) e_bias = std::max(e_bias, 1.0);
      continue;
    }
    if (!bias.intervals[l]) {
      e_bias = std::max(e_bias, 1.0);
      continue;
    }
    e_bias = std::max(e_bias, std::abs(bias.intervals[l]->lo - (6 + 10 * rho)));
    e_bias = std::max(e_bias, std::abs(bias.intervals[l]->hi - (15 - 5 * rho)));
  }
  push(r, "bias windows equal [6+10rho, 15-5rho]", e_bias <= 1e-12, e_bias);
  push(r, "rho_max equals 0.6", std::abs(bias.rho_max - 0.6) <= 1e-12,
       std::abs(bias.rho_max - 0.6));
  push(r, "objective for lambda=(3,1) equals 5",
       std::abs(0.5 * (9.0 + 1.0) - 5.0) <= 1e-12);

  const double ell = bias.top().midpoint();
  push(r, "representative bias equals 12", std::abs(ell - 12.0) <= 1e-9,
       std::abs(ell - 12.0));
  const MarginReport margins = svm_margin_report(d, lambda, ell);
  const std::vector<double> expected{5, 9, 11, 6, 3, 1};
  double e_m = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i)
    e_m = std::max(e_m, std::abs(margins.core_margins[i] - expected[i]));
  push(r, "core margins equal (5,9,11,6,3,1)", e_m <= 1e-9, e_m);

  const SvmSolution sol = svm_solve(d);
  double balance = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) balance += sol.kappas[i] * d.labels[i];
  push(r, "solver multipliers balance labels", std::abs(balance) <= 1e-9,
       std::abs(balance));
  bool margins_ok = true;
  for (double m : sol.margins.core_margins) margins_ok = margins_ok && m >= 1.0 - 1e-9;
  push(r, "solver core margins clear 1", margins_ok);
  push(r, "solver objective at most 5", sol.objective <= 5.0 + 1e-9, sol.objective);
  return r;
}

}  // namespace

ReproduceReport reproduce(const std::string& id, std::uint64_t seed) {
  if (id == "fj_1d") return reproduce_fj_1d();
  if (id == "kkt_2d") return reproduce_kkt_2d();
  if (id == "box_cones") return reproduce_box_cones(seed);
  if (id == "svm_6pt") return reproduce_svm_6pt();
  throw DomainError("unknown example id: " + id);
}

}  // namespace fuzzopt::examples
