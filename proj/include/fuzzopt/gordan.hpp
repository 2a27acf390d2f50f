#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "fuzzopt/fuzzy.hpp"
#include "fuzzopt/lp.hpp"

namespace fuzzopt {

/**
 * Verdict of a fuzzy alternative decision. AlternativeI carries a verified
 * strict witness y; AlternativeII carries per-level nonnegative mixtures
 * with verified zero membership. NeitherDetected is reported, with
 * diagnostics, for inputs where neither side can be certified.
 */
struct GordanVerdict {
  enum class Which { AlternativeI, AlternativeII, NeitherDetected };

  struct LevelEvidence {
    double level = 0.0;
    std::vector<double> mixture;  // nonnegative, sums to 1
  };

  Which which = Which::NeitherDetected;
  std::vector<double> witness_y;         // AlternativeI
  std::vector<LevelEvidence> evidence;   // AlternativeII

  // NeitherDetected diagnostics: best achievable strict-witness value (>= 0
  // means no witness) and where the zero-membership check broke.
  double witness_epigraph = std::numeric_limits<double>::quiet_NaN();
  double failing_level = std::numeric_limits<double>::quiet_NaN();
  int failing_component = -1;
};

/// Result of the epigraph LP that searches for a strict witness: the least
/// achievable worst upper endpoint over |y_j| <= 1, and its argmin. The
/// level-wise upper endpoint is convex piecewise-affine in the level, so
/// the program is built on the input knot levels, which is exact.
struct WitnessSearch {
  double epigraph = 0.0;
  std::vector<double> y;
};

WitnessSearch gordan_vector_witness_search(const FuzzyVector& u);
WitnessSearch gordan_matrix_witness_search(const FuzzyMatrix& m);

/// Decide the vector alternative: either some y makes y^T U strictly
/// negative at every level, or zero belongs to every component's cut at
/// every level.
GordanVerdict gordan_vector_decide(const FuzzyVector& u,
                                   const LevelGrid& grid = LevelGrid::standard(),
                                   double eps = kDefaultEps);

/// Decide the matrix alternative for an s x n fuzzy matrix M: either some
/// y in R^s makes every component of M^T y strictly negative at every
/// level, or at every level some nonnegative nonzero x in R^n puts zero in
/// every row of M_rho x.
GordanVerdict gordan_matrix_decide(const FuzzyMatrix& m,
                                   const LevelGrid& grid = LevelGrid::standard(),
                                   double eps = kDefaultEps);

/// Brute-force scan over a finite y lattice and the grid levels; fully
/// independent of the LP search path.
struct ExclusivityReport {
  bool alt1_holds = false;      // some lattice y verifies strict negativity
  bool alt2_holds = false;      // zero membership at every level
  std::optional<std::vector<double>> scan_witness;

  bool simultaneous() const { return alt1_holds && alt2_holds; }
  bool both_fail() const { return !alt1_holds && !alt2_holds; }
};

ExclusivityReport gordan_exclusivity_oracle(const FuzzyVector& u, std::size_t y_steps,
                                            const LevelGrid& grid = LevelGrid::standard(),
                                            double eps = kDefaultEps);
ExclusivityReport gordan_exclusivity_oracle(const FuzzyMatrix& m, std::size_t y_steps,
                                            const LevelGrid& grid = LevelGrid::standard(),
                                            double eps = kDefaultEps);

}  // namespace fuzzopt
