#include <doctest.h>

#include <algorithm>
#include <functional>

#include "fuzzopt/examples.hpp"
#include "fuzzopt/json_io.hpp"
#include "oracles.hpp"

using namespace fuzzopt;

TEST_CASE("fuzzy numbers survive an encode/decode round trip") {
  Rng rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    FuzzyNumber m = oracles::lift(oracles::random_tri(rng));
    if (trial % 3 == 1) {
      double v[4] = {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5),
                     rng.uniform(-5, 5)};
      std::sort(v, v + 4);
      m = FuzzyNumber::trapezoidal(v[0], v[1], v[2], v[3]);
    } else if (trial % 3 == 2) {
      m = FuzzyNumber::sampled(LevelGrid::uniform(5),
                               CutFamily::of(m, LevelGrid::uniform(5)).cuts());
    }
    const FuzzyNumber back = fuzzy_number_from_json(to_json(m), "$");
    CHECK(distance(m, back) <= 1e-12);
  }
}

TEST_CASE("expressions survive an encode/decode round trip via evaluation") {
  const FuzzyProblem p = examples::kkt_2d();
  json j{{"dim", 2}, {"terms", json::array()}};
  for (const Term& t : p.objective.terms()) {
    json jt{{"coef", to_json(t.coef)}, {"exp", t.mono.exponents}};
    j["terms"].push_back(jt);
  }
  const FuzzyExpr back = expr_from_json(j, "$");
  Rng rng(89);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<double> x{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double rho = rng.uniform01();
    const Interval a = p.objective.eval(x, rho);
    const Interval b = back.eval(x, rho);
    CHECK(a.lo == doctest::Approx(b.lo).epsilon(1e-13));
    CHECK(a.hi == doctest::Approx(b.hi).epsilon(1e-13));
  }
}

TEST_CASE("shifted monomials decode from the optional field") {
  const json j{{"dim", 2},
               {"terms", json::array({json{{"coef", json{{"tri", {2, 3, 7}}}},
                                           {"exp", {2, 0}},
                                           {"shift", {1.5, 0.0}}}})}};
  const FuzzyExpr e = expr_from_json(j, "$");
  const Interval v = e.eval({2.0, 9.0}, 1.0);
  CHECK(v.lo == doctest::Approx(0.25 * 3));
  CHECK(v.hi == doctest::Approx(0.25 * 3));
}

TEST_CASE("schema violations name the offending field") {
  try {
    fuzzy_number_from_json(json{{"tri", {1, 2}}}, "$");
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.path == "$.tri");
  }
  try {
    dataset_from_json(json{{"points", json::array({json{{"coords", json::array({json{
                                                            {"tri", {0, 1, 2}}}})}}})}},
                      "$");
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.path == "$.points[0]");
  }
  CHECK_THROWS_AS(fuzzy_number_from_json(json{{"tri", {3, 2, 1}}}, "$"), SchemaError);
  CHECK_THROWS_AS(expr_from_json(json{{"dim", 0}, {"terms", json::array()}}, "$"),
                  SchemaError);
}

TEST_CASE("datasets round trip") {
  const FuzzyDataset d = examples::svm_6pt();
  json pts = json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    json coords = json::array();
    for (const FuzzyNumber& m : d.points[i].components()) coords.push_back(to_json(m));
    pts.push_back(json{{"coords", coords}, {"label", d.labels[i]}});
  }
  const FuzzyDataset back = dataset_from_json(json{{"points", pts}}, "$");
  REQUIRE(back.size() == d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(back.labels[i] == d.labels[i]);
    for (std::size_t c = 0; c < d.dimension(); ++c)
      CHECK(distance(back.points[i][c], d.points[i][c]) == 0.0);
  }
}

TEST_CASE("decoders reject arbitrary mutations without crashing") {
  // structural fuzz: delete keys, retype values, inject junk; every decode
  // must either succeed or throw SchemaError with a nonempty path
  const json valid = json::parse(R"({
    "objective": {"dim": 2, "terms": [
      {"coef": {"tri": [-4, -2, 0]}, "exp": [2, 0]},
      {"coef": {"tri": [1, 2, 3]}, "exp": [0, 1], "shift": [0.5, 0]}]},
    "constraints": [
      {"dim": 2, "terms": [{"coef": {"trap": [-2, 0, 1, 3]}, "exp": [1, 0]}],
       "gh_const": {"tri": [-12, -10, -6]}}]})");
  const std::vector<json> junk{json(), json(3), json("x"), json::array(),
                               json{{"tri", {3, 2, 1}}}, json{{"tri", "abc"}},
                               json{{"sampled", {{"levels", {0, 1}}, {"cuts", 5}}}}};

  Rng rng(97);
  const std::function<void(json&, int)> mutate = [&](json& node, int depth) {
    if (depth > 4) return;
    if (node.is_object() && !node.empty()) {
      auto it = node.begin();
      std::advance(it, static_cast<long>(rng.index(node.size())));
      if (rng.uniform01() < 0.3) {
        node.erase(it);
      } else if (rng.uniform01() < 0.4) {
        it.value() = junk[rng.index(junk.size())];
      } else {
        mutate(it.value(), depth + 1);
      }
    } else if (node.is_array() && !node.empty()) {
      mutate(node[rng.index(node.size())], depth + 1);
    } else {
      node = junk[rng.index(junk.size())];
    }
  };

  int failures = 0, successes = 0;
  for (int trial = 0; trial < 500; ++trial) {
    json doc = valid;
    const int edits = 1 + static_cast<int>(rng.index(3));
    for (int e = 0; e < edits; ++e) mutate(doc, 0);
    try {
      problem_from_json(doc, "$");
      ++successes;
    } catch (const SchemaError& e) {
      ++failures;
      CHECK_FALSE(e.path.empty());
    }
  }
  CHECK(failures + successes == 500);
  CHECK(failures > 300);  // most mutations must be caught
}

TEST_CASE("csv tables carry the documented header") {
  const CutFamily f = CutFamily::of(FuzzyNumber::triangular(2, 3, 7), LevelGrid::uniform(3));
  const std::string csv = cut_table_csv(f);
  CHECK(csv.substr(0, 10) == "rho,lo,hi\n");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

  const BiasSet bias = svm_bias_set(examples::svm_6pt(), {3.0, 1.0}, {0, 4});
  const std::string btable = bias_table_csv(bias);
  CHECK(btable.substr(0, 10) == "rho,lo,hi\n");
}
