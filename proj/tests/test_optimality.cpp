#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fuzzopt/examples.hpp"
#include "fuzzopt/gordan.hpp"
#include "fuzzopt/optimality.hpp"
#include "oracles.hpp"

using namespace fuzzopt;

namespace {

FuzzyNumber tri(double a, double b, double c) { return FuzzyNumber::triangular(a, b, c); }

Term term(FuzzyNumber coef, std::vector<unsigned> exps) {
  return Term{std::move(coef), Monomial{std::move(exps), {}}};
}

double family_error(const CutFamily& f, double lo0, double lo1, double hi0, double hi1) {
  double worst = 0.0;
  for (std::size_t l = 0; l < f.size(); ++l) {
    const double rho = f.level(l);
    worst = std::max(worst, std::abs(f.at(l).lo - (lo0 + lo1 * rho)));
    worst = std::max(worst, std::abs(f.at(l).hi - (hi0 + hi1 * rho)));
  }
  return worst;
}

// crisp problem: min x^2 subject to x - 1 <= 0
FuzzyProblem crisp_problem() {
  FuzzyExpr obj(1, {term(tri(1, 1, 1), {2})});
  FuzzyExpr con(1, {term(tri(1, 1, 1), {1}), term(tri(-1, -1, -1), {0})});
  return FuzzyProblem(std::move(obj), {std::move(con)});
}

}  // namespace

TEST_CASE("active sets of the worked examples") {
  const FuzzyProblem fj = examples::fj_1d();
  CHECK(active_set(fj, {2.0}) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(active_set(fj, {3.0}), InfeasiblePoint);

  const FuzzyProblem kkt = examples::kkt_2d();
  CHECK(active_set(kkt, {0.0, 2.0}) == std::vector<std::size_t>{0});
  CHECK(family_error(kkt.constraints[1].eval_family({0.0, 2.0}), -14, 1, -10, -3) <=
        1e-12);

  const FuzzyProblem unconstrained(examples::fj_1d().objective, {});
  CHECK(active_set(unconstrained, {2.0}).empty());
}

TEST_CASE("multiplier search on the 1-D example pins the documented ray") {
  const FuzzyProblem p = examples::fj_1d();
  const auto cert = fritz_john_find(p, {2.0});
  REQUIRE(cert.has_value());
  CHECK(cert->active == std::vector<std::size_t>{0});
  // the core level forces kappa1 = 1.6 kappa0; normalization picks (5,8)/13
  CHECK(cert->kappa0 == doctest::Approx(5.0 / 13.0).epsilon(1e-7));
  CHECK(cert->kappas[0] == doctest::Approx(8.0 / 13.0).epsilon(1e-7));
  CHECK(cert->kappas[1] == 0.0);
  CHECK(fritz_john_verify(p, {2.0}, cert->kappa0, cert->kappas).pass());
  CHECK(family_error(cert->residuals[0], -112.0 / 13, 112.0 / 13, 91.0 / 13, -91.0 / 13) <=
        1e-9);
}

TEST_CASE("multiplier search on the 2-D example") {
  const FuzzyProblem p = examples::kkt_2d();
  const auto cert = fritz_john_find(p, {0.0, 2.0});
  REQUIRE(cert.has_value());
  CHECK(cert->kappas[0] / cert->kappa0 == doctest::Approx(0.4).epsilon(1e-7));
  CHECK(fritz_john_verify(p, {0.0, 2.0}, cert->kappa0, cert->kappas).pass());
}

TEST_CASE("verification of the documented multiplier tuples") {
  const FuzzyProblem fj = examples::fj_1d();
  CHECK(fritz_john_verify(fj, {2.0}, 5.0, {8.0, 0.0}).pass());

  const MultiplierReport zero = fritz_john_verify(fj, {2.0}, 0.0, {0.0, 0.0});
  CHECK_FALSE(zero.pass());
  CHECK_FALSE(zero.not_all_zero);

  const FuzzyProblem kkt = examples::kkt_2d();
  const MultiplierReport folded = fritz_john_verify(kkt, {0.0, 2.0}, 1.0, {0.4, 0.0});
  CHECK(folded.pass());
  CHECK(family_error(folded.residuals[0], -0.8, 0.8, 1.2, -1.2) <= 1e-9);
  CHECK(family_error(folded.residuals[1], -9.4, 9.4, 21.8, -21.8) <= 1e-9);

  const MultiplierReport wrong = fritz_john_verify(kkt, {0.0, 2.0}, 1.0, {10.0, 0.0});
  CHECK_FALSE(wrong.pass());
  CHECK_FALSE(wrong.stationarity.ok);

  CHECK_FALSE(fritz_john_verify(fj, {2.0}, 5.0, {-8.0, 0.0}).nonneg);
}

TEST_CASE("kkt search fixes the objective multiplier at one") {
  const FuzzyProblem fj = examples::fj_1d();
  const auto cert = kkt_find(fj, {2.0});
  REQUIRE(cert.has_value());
  CHECK(cert->kappa0 == 1.0);
  CHECK(cert->kappas[0] == doctest::Approx(1.6).epsilon(1e-8));
  CHECK(family_error(cert->residuals[0], -22.4, 22.4, 18.2, -18.2) <= 1e-8);

  const FuzzyProblem kkt = examples::kkt_2d();
  const auto cert2 = kkt_find(kkt, {0.0, 2.0});
  REQUIRE(cert2.has_value());
  CHECK(cert2->kappas[0] == doctest::Approx(0.4).epsilon(1e-8));
  CHECK(fritz_john_verify(kkt, {0.0, 2.0}, 1.0, cert2->kappas).pass());

  const FuzzyProblem unconstrained(crisp_problem().objective, {});
  const auto cert3 = kkt_find(unconstrained, {0.0});
  REQUIRE(cert3.has_value());
  CHECK(cert3->kappas.empty());
  CHECK(fritz_john_verify(unconstrained, {0.0}, 1.0, {}).pass());
}

TEST_CASE("crisp interior stationary point needs no constraint multiplier") {
  const FuzzyProblem p = crisp_problem();
  const auto cert = fritz_john_find(p, {0.0});
  REQUIRE(cert.has_value());
  CHECK(cert->kappa0 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cert->kappas[0] == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("certificates round-trip through verification") {
  const auto roundtrip = [](const FuzzyProblem& p, const std::vector<double>& x) {
    const auto found = fritz_john_find(p, x);
    REQUIRE(found.has_value());
    CHECK(fritz_john_verify(p, x, found->kappa0, found->kappas, 1e-8).pass());
    const auto kcert = kkt_find(p, x);
    REQUIRE(kcert.has_value());
    CHECK(fritz_john_verify(p, x, 1.0, kcert->kappas, 1e-8).pass());
  };
  roundtrip(examples::fj_1d(), {2.0});
  roundtrip(examples::kkt_2d(), {0.0, 2.0});
}

TEST_CASE("breakpoint grids agree with dense grids for triangular data") {
  const FuzzyProblem p = examples::fj_1d();
  const LevelGrid coarse = LevelGrid::uniform(2);
  const LevelGrid dense = LevelGrid::uniform(101);
  const MultiplierReport a = fritz_john_verify(p, {2.0}, 5.0, {8.0, 0.0}, 1e-8, coarse);
  const MultiplierReport b = fritz_john_verify(p, {2.0}, 5.0, {8.0, 0.0}, 1e-8, dense);
  CHECK(a.pass() == b.pass());
  CHECK(a.residuals[0].cut(0.0).lo == doctest::Approx(b.residuals[0].cut(0.0).lo));
  CHECK(a.residuals[0].cut(1.0).hi == doctest::Approx(b.residuals[0].cut(1.0).hi));
}

TEST_CASE("positive multipliers only appear on active constraints") {
  const FuzzyProblem fj = examples::fj_1d();
  const auto cert = fritz_john_find(fj, {2.0});
  REQUIRE(cert.has_value());
  for (std::size_t j = 0; j < cert->kappas.size(); ++j) {
    if (cert->kappas[j] > 1e-9) {
      CHECK(std::find(cert->active.begin(), cert->active.end(), j) != cert->active.end());
    }
  }
}

TEST_CASE("the stationarity system is invariant under positive scaling") {
  const FuzzyProblem p = examples::fj_1d();
  for (double c : {2.0, 10.0}) {
    CHECK(fritz_john_verify(p, {2.0}, 5.0 * c, {8.0 * c, 0.0}).pass());
  }
}

TEST_CASE("multiplier existence matches the matrix alternative") {
  const FuzzyProblem p = examples::fj_1d();
  const FuzzyVector gh = to_fuzzy_vector(grad(p.objective, {2.0}));
  const FuzzyVector gy = to_fuzzy_vector(grad(p.constraints[0], {2.0}));
  const GordanVerdict v = gordan_matrix_decide(FuzzyMatrix::from_rows({{gh[0], gy[0]}}));
  CHECK(v.which != GordanVerdict::Which::AlternativeI);
  CHECK(fritz_john_find(p, {2.0}).has_value());

  const FuzzyProblem q = examples::kkt_2d();
  const FuzzyVector qh = to_fuzzy_vector(grad(q.objective, {0.0, 2.0}));
  const FuzzyVector qy = to_fuzzy_vector(grad(q.constraints[0], {0.0, 2.0}));
  const GordanVerdict w = gordan_matrix_decide(
      FuzzyMatrix::from_rows({{qh[0], qy[0]}, {qh[1], qy[1]}}));
  CHECK(w.which != GordanVerdict::Which::AlternativeI);
  CHECK(fritz_john_find(q, {0.0, 2.0}).has_value());
}

TEST_CASE("linear independence of fuzzy vectors") {
  CHECK(linear_independence_check({FuzzyVector({tri(1, 2, 3)})}).independent);

  const IndependenceReport dep = linear_independence_check({FuzzyVector({FuzzyNumber::zero()})});
  CHECK_FALSE(dep.independent);
  REQUIRE(dep.dependence.has_value());
  CHECK(std::abs((*dep.dependence)[0]) == doctest::Approx(1.0));

  // constraint gradient of the 2-D example: second core component is -5
  CHECK(linear_independence_check({FuzzyVector({tri(-2, 0, 3), tri(-6, -5, -3)})})
            .independent);

  const FuzzyVector v({tri(1, 2, 3), tri(0, 1, 2)});
  const IndependenceReport twice = linear_independence_check({v, v});
  CHECK_FALSE(twice.independent);

  CHECK_THROWS_AS(linear_independence_check(
                      std::vector<FuzzyVector>(9, FuzzyVector({tri(0, 1, 2)}))),
                  DomainError);
}

TEST_CASE("unconstrained first-order check on the box objective") {
  const FuzzyExpr h = examples::box_objective();
  CHECK(first_order_unconstrained_check(h, {1.5, 0.0}).pass);
  const FirstOrderReport fail = first_order_unconstrained_check(h, {1.5, 1.0});
  CHECK_FALSE(fail.pass);
  CHECK(fail.worst >= 2.0 - 1e-9);  // the second partial starts at [2+2rho, ...]

  const FuzzyExpr sq = crisp_problem().objective;
  CHECK(first_order_unconstrained_check(sq, {0.0}).pass);
}

TEST_CASE("sampling-backed sufficiency screen") {
  const std::vector<Interval> box{Interval(-2, 2)};
  const FuzzyProblem crisp = crisp_problem();
  const SufficiencyReport good = kkt_sufficiency_report(crisp, {0.0}, {0.0}, box, 500, 3);
  CHECK(good.supported);

  // non-convex objective: the screen must refuse support even though the
  // stationarity system verifies
  const FuzzyProblem fj = examples::fj_1d();
  const auto kcert = kkt_find(fj, {2.0});
  REQUIRE(kcert.has_value());
  const SufficiencyReport bad =
      kkt_sufficiency_report(fj, {2.0}, kcert->kappas, {Interval(0.5, 3.0)}, 500, 3);
  CHECK(bad.kkt.pass());
  CHECK_FALSE(bad.objective_convexity.passed());
  CHECK_FALSE(bad.supported);

  // failing stationarity dooms the report regardless of convexity
  const SufficiencyReport off = kkt_sufficiency_report(crisp, {0.5}, {0.0}, box, 500, 3);
  CHECK_FALSE(off.kkt.pass());
  CHECK_FALSE(off.supported);
}
