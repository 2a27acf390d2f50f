#pragma once

#include <string>
#include <vector>

#include "fuzzopt/cones.hpp"
#include "fuzzopt/optimality.hpp"
#include "fuzzopt/svm.hpp"

namespace fuzzopt::examples {

/// 1-D constrained problem with one exactly-active constraint at x = 2.
FuzzyProblem fj_1d();

/// 2-D constrained problem with one active linear constraint at (0, 2).
FuzzyProblem kkt_2d();

/// Separable 2-D objective minimized over the unit box [1,2]^2 at (1.5, 1).
FuzzyExpr box_objective();
Box box_region();

/// Six 2-D fuzzy points, three per class, with crisp cores.
FuzzyDataset svm_6pt();

struct Assertion {
  std::string name;
  bool pass = false;
  double error = 0.0;
};

struct ReproduceReport {
  std::string id;
  std::vector<Assertion> assertions;

  bool all_pass() const {
    for (const Assertion& a : assertions)
      if (!a.pass) return false;
    return true;
  }
};

/// Run the bundled fixture `id` (one of box_cones, fj_1d, kkt_2d, svm_6pt)
/// against its stored expected values. Throws DomainError on unknown ids.
ReproduceReport reproduce(const std::string& id, std::uint64_t seed = 42);

}  // namespace fuzzopt::examples
