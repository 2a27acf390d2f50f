#pragma once

#include <optional>
#include <vector>

#include "fuzzopt/errors.hpp"

namespace fuzzopt {

enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
  std::vector<double> coeffs;
  Relation rel = Relation::LessEq;
  double rhs = 0.0;
};

/// Per-variable bounds; an unset side is unbounded.
struct VarBounds {
  std::optional<double> lo;
  std::optional<double> hi;

  static VarBounds free() { return {}; }
  static VarBounds nonneg() { return {0.0, std::nullopt}; }
  static VarBounds boxed(double lo, double hi) { return {lo, hi}; }
};

/// Small dense LP: minimize objective subject to the constraint rows and
/// variable bounds. `bounds` may be empty, meaning all variables free.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VarBounds> bounds;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> point;  // populated iff Optimal
  double value = 0.0;         // objective at `point`, iff Optimal
};

/// Two-phase dense simplex, Bland's rule, feasibility tolerance 1e-8.
/// Deterministic: identical inputs give identical outcomes. Throws
/// LpFailure if the iteration guard trips.
LpOutcome lp_solve(const LinearProgram& p);

/// Phase-1 only: find any point satisfying the constraints and bounds.
LpOutcome lp_feasible(const std::vector<LinearConstraint>& constraints,
                      const std::vector<VarBounds>& bounds);

/// Largest violation of constraints and bounds at `x`.
double lp_violation(const LinearProgram& p, const std::vector<double>& x);

}  // namespace fuzzopt
