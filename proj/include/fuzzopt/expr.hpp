#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fuzzopt/fuzzy.hpp"

namespace fuzzopt {

/// Product of (x_i - shift_i)^exp_i factors. `shift` is empty (no offset)
/// or the same length as `exponents`.
struct Monomial {
  std::vector<unsigned> exponents;
  std::vector<double> shift;

  double value(const std::vector<double>& x) const;
  double partial(std::size_t i, const std::vector<double>& x) const;
};

struct Term {
  FuzzyNumber coef;
  Monomial mono;
};

/**
 * Polynomial with fuzzy coefficients plus an optional gH-subtracted fuzzy
 * constant: sum_k coef_k * mono_k(x) (gH-) minus gh_const. This is the
 * representation of objectives and constraints.
 */
class FuzzyExpr {
 public:
  FuzzyExpr(std::size_t dimension, std::vector<Term> terms,
            std::optional<FuzzyNumber> gh_const = std::nullopt);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<FuzzyNumber>& gh_const() const { return gh_const_; }

  Interval eval(const std::vector<double>& x, double rho) const;
  CutFamily eval_family(const std::vector<double>& x,
                        const LevelGrid& grid = LevelGrid::standard()) const;

  /// `base` refined with every coefficient's knot levels.
  LevelGrid refined_grid(const LevelGrid& base) const;

 private:
  std::size_t dimension_;
  std::vector<Term> terms_;
  std::optional<FuzzyNumber> gh_const_;
};

/// Level-wise partial gH-derivatives, one family per coordinate, on a
/// shared grid.
struct FuzzyGradient {
  std::vector<CutFamily> partials;

  std::size_t dimension() const { return partials.size(); }
  const CutFamily& operator[](std::size_t i) const { return partials[i]; }
};

/// Term-wise symbolic gradient; the gH constant contributes nothing.
FuzzyGradient grad(const FuzzyExpr& e, const std::vector<double>& x,
                   const LevelGrid& grid = LevelGrid::standard());

/// Gradients of fuzzy-coefficient polynomials are nested level families;
/// read them back as a fuzzy vector (throws NotAFuzzyNumber otherwise).
FuzzyVector to_fuzzy_vector(const FuzzyGradient& g, double tol = kDefaultEps);

/// tau^T grad(e, x), level-wise.
CutFamily directional(const FuzzyExpr& e, const std::vector<double>& x,
                      const std::vector<double>& tau,
                      const LevelGrid& grid = LevelGrid::standard());

/// Forward-difference quotient (1/step) * (e(x + step*tau) gH- e(x)),
/// level-wise; converges to `directional` as step -> 0+.
CutFamily directional_fd_oracle(const FuzzyExpr& e, const std::vector<double>& x,
                                const std::vector<double>& tau, double step,
                                const LevelGrid& grid = LevelGrid::standard());

struct ConvexityCounterexample {
  std::vector<double> x1, x2;
  double theta = 0.0;
  double level = 0.0;
  Interval lhs, rhs;
};

struct ConvexityReport {
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::optional<ConvexityCounterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

/// Samples (x1, x2, theta) triples in `box` and tests the weak level-wise
/// convexity inequality. Sampling-based evidence, not a certificate.
ConvexityReport convexity_sample(const FuzzyExpr& e, const std::vector<Interval>& box,
                                 std::size_t trials, std::uint64_t rng_seed,
                                 const LevelGrid& grid = LevelGrid::standard(),
                                 double eps = kDefaultEps);

struct GradientInequalityReport {
  OrderResult order;
  CutFamily lhs;  // (x2 - x1)^T grad(e, x1)
  CutFamily rhs;  // e(x2) gH- e(x1)
};

GradientInequalityReport gradient_inequality_check(
    const FuzzyExpr& e, const std::vector<double>& x1, const std::vector<double>& x2,
    const LevelGrid& grid = LevelGrid::standard(), double eps = kDefaultEps);

}  // namespace fuzzopt
