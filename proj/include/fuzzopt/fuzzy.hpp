#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "fuzzopt/interval.hpp"

namespace fuzzopt {

/// Triangular membership <a,b,c>: support [a,c], core {b}.
struct Triangular {
  double a, b, c;
};

/// Trapezoidal membership <a,b,c,d>: support [a,d], core [b,c].
struct Trapezoidal {
  double a, b, c, d;
};

/// Piecewise-linear membership stored as nested cuts over a level grid.
struct Sampled {
  LevelGrid grid;
  std::vector<Interval> cuts;
};

/**
 * A fuzzy number, represented exactly by its level cuts. Parametric shapes
 * evaluate cuts in closed form; sampled shapes interpolate cut endpoints
 * linearly between grid levels. Values are immutable after construction.
 */
class FuzzyNumber {
 public:
  static FuzzyNumber triangular(double a, double b, double c);
  static FuzzyNumber trapezoidal(double a, double b, double c, double d);
  /// Cuts must be nested (outermost at level 0); tiny float violations up to
  /// 1e-12 are snapped, anything larger throws NotAFuzzyNumber.
  static FuzzyNumber sampled(LevelGrid grid, std::vector<Interval> cuts);
  static FuzzyNumber crisp(double v) { return triangular(v, v, v); }
  static FuzzyNumber zero() { return crisp(0.0); }

  /// The cut {x : membership(x) >= rho}; rho must lie in [0, 1].
  Interval cut(double rho) const;

  Interval core() const { return cut(1.0); }
  Interval support() const { return cut(0.0); }

  /// Levels at which the cut-endpoint functions may change slope.
  std::vector<double> knots() const;

  const std::variant<Triangular, Trapezoidal, Sampled>& shape() const { return shape_; }

 private:
  explicit FuzzyNumber(std::variant<Triangular, Trapezoidal, Sampled> s)
      : shape_(std::move(s)) {}

  std::variant<Triangular, Trapezoidal, Sampled> shape_;
};

/**
 * One interval per grid level with no nestedness requirement. gH-differences
 * and fuzzy dot products live here even when they are not fuzzy numbers;
 * conversion back is the separate, failable as_fuzzy_number step.
 */
class CutFamily {
 public:
  CutFamily(LevelGrid grid, std::vector<Interval> cuts);

  static CutFamily of(const FuzzyNumber& m, const LevelGrid& grid);
  static CutFamily zeros(const LevelGrid& grid);

  const LevelGrid& grid() const { return grid_; }
  const std::vector<Interval>& cuts() const { return cuts_; }
  std::size_t size() const { return cuts_.size(); }
  const Interval& at(std::size_t i) const { return cuts_[i]; }
  double level(std::size_t i) const { return grid_[i]; }

  /// Endpoint-interpolated cut at an arbitrary level in [0, 1].
  Interval cut(double rho) const;

  CutFamily resampled(const LevelGrid& g) const;

  /// True when cut(rho2) is contained in cut(rho1) within `tol` whenever
  /// rho1 < rho2.
  bool nested(double tol = 0.0) const;

 private:
  LevelGrid grid_;
  std::vector<Interval> cuts_;
};

/// Nonempty column of fuzzy numbers.
class FuzzyVector {
 public:
  explicit FuzzyVector(std::vector<FuzzyNumber> components);

  std::size_t size() const { return components_.size(); }
  const FuzzyNumber& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<FuzzyNumber>& components() const { return components_; }

 private:
  std::vector<FuzzyNumber> components_;
};

/// Rectangular grid of fuzzy numbers, row-major.
class FuzzyMatrix {
 public:
  FuzzyMatrix(std::size_t rows, std::size_t cols, std::vector<FuzzyNumber> entries);
  static FuzzyMatrix from_rows(const std::vector<std::vector<FuzzyNumber>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FuzzyNumber& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  FuzzyVector row(std::size_t i) const;
  FuzzyVector column(std::size_t j) const;

 private:
  std::size_t rows_, cols_;
  std::vector<FuzzyNumber> entries_;
};

/// Outcome of the LU-order comparison of two level families.
struct OrderResult {
  bool weak_all = false;    // both endpoints <= at every level
  bool strict_some = false; // some endpoint strictly < at some level
  bool strict_all = false;  // both endpoints strictly < at every level

  /// The intermediate order: weak everywhere plus strict somewhere.
  bool weak_strict() const { return weak_all && strict_some; }
};

// --- arithmetic ---

FuzzyNumber add(const FuzzyNumber& m, const FuzzyNumber& l);
CutFamily add(const CutFamily& a, const CutFamily& b);

FuzzyNumber scalar_mul(double t, const FuzzyNumber& m);
CutFamily scalar_mul(double t, const CutFamily& a);

/// Level-wise gH-difference on the union of `grid` and both operands' knots.
CutFamily gh_difference(const FuzzyNumber& m, const FuzzyNumber& l,
                        const LevelGrid& grid = LevelGrid::standard());

/// Succeeds iff the cuts are nested within `tol`; returns a Sampled number.
FuzzyNumber as_fuzzy_number(const CutFamily& f, double tol = kDefaultEps);

/// sup over levels of max(|lower gap|, |upper gap|); exact for parametric
/// shapes because their endpoint functions are affine between knots.
double distance(const FuzzyNumber& m, const FuzzyNumber& l);

// --- order and membership predicates ---

OrderResult compare(const CutFamily& a, const CutFamily& b, double eps = kDefaultEps);
OrderResult compare(const FuzzyNumber& m, const FuzzyNumber& l, double eps = kDefaultEps);
OrderResult compare(const CutFamily& a, const FuzzyNumber& l, double eps = kDefaultEps);
OrderResult compare(const FuzzyNumber& m, const CutFamily& b, double eps = kDefaultEps);

inline bool contains_zero(const Interval& iv, double eps = kDefaultEps) {
  return iv.lo <= eps && iv.hi >= -eps;
}
/// Zero membership at every grid level.
bool contains_zero(const CutFamily& f, double eps = kDefaultEps);
/// Zero membership of every cut; by nestedness this reduces to the core.
bool contains_zero(const FuzzyNumber& m, double eps = kDefaultEps);
std::vector<bool> contains_zero_per_level(const CutFamily& f, double eps = kDefaultEps);

/// Every cut within eps of [0,0]; the activity test for constraints.
bool is_zero(const CutFamily& f, double eps = kDefaultEps);

// --- fuzzy linear algebra ---

/// tau^T U = sum_j tau_j * U_j, level-wise on the union grid.
CutFamily dot(const std::vector<double>& tau, const FuzzyVector& u,
              const LevelGrid& grid = LevelGrid::standard());

inline FuzzyNumber operator+(const FuzzyNumber& m, const FuzzyNumber& l) { return add(m, l); }
inline FuzzyNumber operator*(double t, const FuzzyNumber& m) { return scalar_mul(t, m); }
inline CutFamily operator+(const CutFamily& a, const CutFamily& b) { return add(a, b); }
inline CutFamily operator*(double t, const CutFamily& a) { return scalar_mul(t, a); }

}  // namespace fuzzopt
