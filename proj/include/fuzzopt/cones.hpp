#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "fuzzopt/expr.hpp"

namespace fuzzopt {

/// Axis-aligned box, lo <= hi componentwise.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;
};

/// Feasible set carved out by fuzzy constraints Y_j(x) <= 0-tilde.
struct FuzzyConstrained {
  std::vector<FuzzyExpr> constraints;
};

using FeasibleSet = std::variant<Box, FuzzyConstrained>;

/// tau lies in the descent cone of e at x: tau^T grad(e, x) strictly below
/// 0-tilde at every level. tau = 0 never qualifies.
bool in_descent_cone(const FuzzyExpr& e, const std::vector<double>& x,
                     const std::vector<double>& tau,
                     const LevelGrid& grid = LevelGrid::standard(),
                     double eps = kDefaultEps);

/// Closed-form feasible-direction cone of a box: at each active bound the
/// direction must point inward or along the face; tau = 0 is excluded.
/// Throws InfeasiblePoint when x is outside the box.
bool in_feasible_cone_box(const Box& box, const std::vector<double>& x,
                          const std::vector<double>& tau, double eps = kDefaultEps);

/// Linearized feasible cone: tau^T grad(Y_j, x) strictly negative for every
/// active constraint (an inner approximation of the true cone). Throws
/// InfeasiblePoint when x is infeasible.
bool in_linearized_feasible_cone(const std::vector<FuzzyExpr>& constraints,
                                 const std::vector<double>& x,
                                 const std::vector<double>& tau,
                                 double tol_active = 1e-8,
                                 const LevelGrid& grid = LevelGrid::standard(),
                                 double eps = kDefaultEps);

struct ConeSampleReport {
  bool empty_suspected = true;
  std::optional<std::vector<double>> counterexample;
  std::size_t trials = 0;  // directions actually drawn
};

/// Samples unit directions looking for one that is simultaneously a descent
/// direction and a feasible direction; finding one certifies that x is not
/// optimal. `threads` > 1 splits the trial range with per-range seeds.
ConeSampleReport intersection_empty_sampled(const FuzzyExpr& e, const FeasibleSet& set,
                                            const std::vector<double>& x,
                                            std::size_t trials, std::uint64_t rng_seed,
                                            const LevelGrid& grid = LevelGrid::standard(),
                                            double eps = kDefaultEps,
                                            unsigned threads = 1);

}  // namespace fuzzopt
