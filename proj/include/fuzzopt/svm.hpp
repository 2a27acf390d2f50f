#pragma once

#include <optional>
#include <vector>

#include "fuzzopt/fuzzy.hpp"

namespace fuzzopt {

/// Labeled fuzzy points of one dimension; both classes must be present.
struct FuzzyDataset {
  std::vector<FuzzyVector> points;
  std::vector<int> labels;  // -1 or +1

  FuzzyDataset(std::vector<FuzzyVector> pts, std::vector<int> lbls);
  std::size_t size() const { return points.size(); }
  std::size_t dimension() const { return points.front().size(); }
};

/// Level family of admissible bias values: nonempty exactly up to rho_max
/// (the largest grid level with nonempty intersection), nested below it.
struct BiasSet {
  LevelGrid grid;
  std::vector<std::optional<Interval>> intervals;
  double rho_max = 0.0;

  BiasSet(LevelGrid g, std::vector<std::optional<Interval>> ivs, double rmax)
      : grid(std::move(g)), intervals(std::move(ivs)), rho_max(rmax) {}

  /// The interval at the rho_max level.
  const Interval& top() const;
};

struct MarginReport {
  /// y_i * (lambda . core(U_i) - ell) per point.
  std::vector<double> core_margins;
  /// Smallest level from which the fuzzy margin clears 1 at all higher
  /// levels; unset when even the core fails.
  std::vector<std::optional<double>> satisfaction_level;
};

struct SvmSolution {
  std::vector<double> lambda;
  std::vector<double> kappas;
  std::vector<std::size_t> support;
  BiasSet bias;
  double ell_star = 0.0;
  double objective = 0.0;  // (1/2) |lambda|^2
  MarginReport margins;
};

/// Solve the stationarity condition for the normal vector: each coordinate
/// must lie in the negated multiplier combination of point cuts at every
/// level; point cores pin it at level 1. Throws EmptyIntersection when
/// membership fails at some level.
std::vector<double> svm_stationary_lambda(const FuzzyDataset& d,
                                          const std::vector<double>& kappas,
                                          const LevelGrid& grid = LevelGrid::standard(),
                                          double tol = kDefaultEps);

/// Intersect the support vectors' admissible-bias windows level by level.
/// Throws EmptyBias when the intersection is already empty at level 0.
BiasSet svm_bias_set(const FuzzyDataset& d, const std::vector<double>& lambda,
                     const std::vector<std::size_t>& support,
                     const LevelGrid& grid = LevelGrid::standard());

MarginReport svm_margin_report(const FuzzyDataset& d, const std::vector<double>& lambda,
                               double ell, const LevelGrid& grid = LevelGrid::standard(),
                               double tol = kDefaultEps);

struct SvmCaps {
  std::size_t max_support = 4;
  double tol = 1e-9;
};

/// Enumerate candidate support sets, derive multipliers, normal vector and
/// bias per candidate, and return the accepted candidate of least
/// (1/2)|lambda|^2; ties go to the lexicographically smallest support set.
/// Throws NoSeparator when no candidate is accepted.
SvmSolution svm_solve(const FuzzyDataset& d, const SvmCaps& caps = {},
                      const LevelGrid& grid = LevelGrid::standard());

}  // namespace fuzzopt
