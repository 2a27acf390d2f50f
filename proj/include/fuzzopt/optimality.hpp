#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fuzzopt/expr.hpp"
#include "fuzzopt/lp.hpp"

namespace fuzzopt {

/// Minimize `objective` subject to every constraint Y_j(x) ordered at or
/// below 0-tilde; all expressions share one dimension.
struct FuzzyProblem {
  FuzzyExpr objective;
  std::vector<FuzzyExpr> constraints;

  FuzzyProblem(FuzzyExpr obj, std::vector<FuzzyExpr> cons);
  std::size_t dimension() const { return objective.dimension(); }
};

/// Multipliers plus the per-coordinate stationarity residual families they
/// induce. kappas has one entry per constraint, zero off the active set.
struct MultiplierCertificate {
  double kappa0 = 0.0;
  std::vector<double> kappas;
  std::vector<std::size_t> active;
  std::vector<CutFamily> residuals;
};

/// Indices of constraints equal to 0-tilde at every level within `tol`.
/// Throws InfeasiblePoint when x violates a constraint.
std::vector<std::size_t> active_set(const FuzzyProblem& p, const std::vector<double>& x,
                                    double tol = 1e-8,
                                    const LevelGrid& grid = LevelGrid::standard());

/// Search multipliers (kappa0, kappa_Lambda) >= 0 summing to 1 whose
/// gradient combination straddles zero at every level and coordinate.
/// Empty result means the system is infeasible on this grid.
std::optional<MultiplierCertificate> fritz_john_find(
    const FuzzyProblem& p, const std::vector<double>& x,
    const LevelGrid& grid = LevelGrid::standard(), double tol = 1e-8);

struct ConditionCheck {
  bool ok = false;
  double worst = 0.0;
};

struct MultiplierReport {
  ConditionCheck stationarity;   // worst: how far zero falls outside a residual
  ConditionCheck complementary;  // worst: largest |kappa_j| * |Y_j endpoint|
  bool nonneg = false;
  bool not_all_zero = false;
  std::vector<CutFamily> residuals;

  bool pass() const {
    return stationarity.ok && complementary.ok && nonneg && not_all_zero;
  }
};

/// Check a user-supplied multiplier tuple: stationarity zero membership at
/// every level/coordinate, complementary slackness, nonnegativity.
MultiplierReport fritz_john_verify(const FuzzyProblem& p, const std::vector<double>& x,
                                   double kappa0, const std::vector<double>& kappas,
                                   double tol = 1e-8,
                                   const LevelGrid& grid = LevelGrid::standard());

/// Fritz-John with the objective multiplier pinned to 1 and no
/// normalization row.
std::optional<MultiplierCertificate> kkt_find(
    const FuzzyProblem& p, const std::vector<double>& x,
    const LevelGrid& grid = LevelGrid::standard(), double tol = 1e-8);

struct IndependenceReport {
  bool independent = false;
  /// When dependent: a nonzero combination whose value straddles zero at
  /// every level and coordinate, normalized to sum |theta_k| = 1.
  std::optional<std::vector<double>> dependence;
};

/// Fuzzy linear independence via sign-orthant enumeration (at most 8
/// vectors).
IndependenceReport linear_independence_check(const std::vector<FuzzyVector>& vs,
                                             const LevelGrid& grid = LevelGrid::standard(),
                                             double tol = kDefaultEps);

struct FirstOrderReport {
  bool pass = false;
  double worst = 0.0;
  std::vector<CutFamily> gradient;
};

/// Unconstrained first-order test: zero membership of every gradient
/// coordinate at every level.
FirstOrderReport first_order_unconstrained_check(const FuzzyExpr& e,
                                                 const std::vector<double>& x,
                                                 const LevelGrid& grid = LevelGrid::standard(),
                                                 double tol = kDefaultEps);

/// Sampling-backed sufficiency screen: the KKT system must verify and the
/// objective and every constraint must survive convexity sampling on `box`.
/// Advisory only; never a proof.
struct SufficiencyReport {
  MultiplierReport kkt;
  ConvexityReport objective_convexity;
  std::vector<ConvexityReport> constraint_convexity;
  bool supported = false;
};

SufficiencyReport kkt_sufficiency_report(const FuzzyProblem& p,
                                         const std::vector<double>& x,
                                         const std::vector<double>& kappas,
                                         const std::vector<Interval>& box,
                                         std::size_t convexity_trials,
                                         std::uint64_t rng_seed,
                                         const LevelGrid& grid = LevelGrid::standard(),
                                         double tol = 1e-8);

}  // namespace fuzzopt
