#include "fuzzopt/expr.hpp"

#include <cmath>

#include "fuzzopt/rng.hpp"

namespace fuzzopt {

namespace {

double ipow(double base, unsigned e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

std::vector<double> combine(double a, const std::vector<double>& x, double b,
                            const std::vector<double>& y) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

}  // namespace

double Monomial::value(const std::vector<double>& x) const {
  double v = 1.0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const double base = x[i] - (shift.empty() ? 0.0 : shift[i]);
    v *= ipow(base, exponents[i]);
  }
  return v;
}

double Monomial::partial(std::size_t i, const std::vector<double>& x) const {
  if (exponents[i] == 0) return 0.0;
  double v = static_cast<double>(exponents[i]);
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    const double base = x[j] - (shift.empty() ? 0.0 : shift[j]);
    v *= ipow(base, j == i ? exponents[j] - 1 : exponents[j]);
  }
  return v;
}

FuzzyExpr::FuzzyExpr(std::size_t dimension, std::vector<Term> terms,
                     std::optional<FuzzyNumber> gh_const)
    : dimension_(dimension), terms_(std::move(terms)), gh_const_(std::move(gh_const)) {
  if (dimension_ == 0) throw DimensionMismatch("expression dimension must be positive");
  for (const Term& t : terms_) {
    if (t.mono.exponents.size() != dimension_)
      throw DimensionMismatch("monomial arity does not match expression dimension");
    if (!t.mono.shift.empty() && t.mono.shift.size() != dimension_)
      throw DimensionMismatch("monomial shift arity does not match expression dimension");
  }
}

Interval FuzzyExpr::eval(const std::vector<double>& x, double rho) const {
  if (x.size() != dimension_)
    throw DimensionMismatch("evaluation point arity does not match expression");
  Interval acc(0.0, 0.0);
  for (const Term& t : terms_) acc = acc + scale(t.mono.value(x), t.coef.cut(rho));
  if (gh_const_) acc = gh_diff(acc, gh_const_->cut(rho));
  return acc;
}

LevelGrid FuzzyExpr::refined_grid(const LevelGrid& base) const {
  LevelGrid g = base;
  for (const Term& t : terms_) g = g.merged_with(t.coef.knots());
  if (gh_const_) g = g.merged_with(gh_const_->knots());
  return g;
}

CutFamily FuzzyExpr::eval_family(const std::vector<double>& x,
                                 const LevelGrid& grid) const {
  const LevelGrid g = refined_grid(grid);
  std::vector<Interval> cs;
  cs.reserve(g.size());
  for (double rho : g.levels()) cs.push_back(eval(x, rho));
  return CutFamily(g, std::move(cs));
}

FuzzyGradient grad(const FuzzyExpr& e, const std::vector<double>& x,
                   const LevelGrid& grid) {
  if (x.size() != e.dimension())
    throw DimensionMismatch("gradient point arity does not match expression");
  const LevelGrid g = e.refined_grid(grid);
  std::vector<CutFamily> partials;
  partials.reserve(e.dimension());
  for (std::size_t i = 0; i < e.dimension(); ++i) {
    std::vector<Interval> cs(g.size(), Interval(0.0, 0.0));
    for (const Term& t : e.terms()) {
      const double w = t.mono.partial(i, x);
      for (std::size_t k = 0; k < g.size(); ++k)
        cs[k] = cs[k] + scale(w, t.coef.cut(g[k]));
    }
    partials.emplace_back(g, std::move(cs));
  }
  return FuzzyGradient{std::move(partials)};
}

FuzzyVector to_fuzzy_vector(const FuzzyGradient& g, double tol) {
  std::vector<FuzzyNumber> comps;
  comps.reserve(g.partials.size());
  for (const CutFamily& f : g.partials) comps.push_back(as_fuzzy_number(f, tol));
  return FuzzyVector(std::move(comps));
}

CutFamily directional(const FuzzyExpr& e, const std::vector<double>& x,
                      const std::vector<double>& tau, const LevelGrid& grid) {
  if (tau.size() != e.dimension())
    throw DimensionMismatch("direction arity does not match expression");
  const FuzzyGradient gr = grad(e, x, grid);
  const LevelGrid& g = gr.partials.front().grid();
  std::vector<Interval> cs(g.size(), Interval(0.0, 0.0));
  for (std::size_t i = 0; i < tau.size(); ++i)
    for (std::size_t k = 0; k < g.size(); ++k)
      cs[k] = cs[k] + scale(tau[i], gr[i].at(k));
  return CutFamily(g, std::move(cs));
}

CutFamily directional_fd_oracle(const FuzzyExpr& e, const std::vector<double>& x,
                                const std::vector<double>& tau, double step,
                                const LevelGrid& grid) {
  if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
  if (tau.size() != e.dimension())
    throw DimensionMismatch("direction arity does not match expression");
  const LevelGrid g = e.refined_grid(grid);
  const std::vector<double> xs = combine(1.0, x, step, tau);
  std::vector<Interval> cs;
  cs.reserve(g.size());
  for (double rho : g.levels())
    cs.push_back(scale(1.0 / step, gh_diff(e.eval(xs, rho), e.eval(x, rho))));
  return CutFamily(g, std::move(cs));
}

ConvexityReport convexity_sample(const FuzzyExpr& e, const std::vector<Interval>& box,
                                 std::size_t trials, std::uint64_t rng_seed,
                                 const LevelGrid& grid, double eps) {
  if (trials < 1) throw DomainError("convexity sampling needs at least one trial");
  if (box.size() != e.dimension())
    throw DimensionMismatch("box arity does not match expression");
  const LevelGrid g = e.refined_grid(grid);
  Rng rng(rng_seed);
  ConvexityReport report;
  report.trials = trials;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<double> x1(box.size()), x2(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) {
      x1[i] = rng.uniform(box[i].lo, box[i].hi);
      x2[i] = rng.uniform(box[i].lo, box[i].hi);
    }
    const double theta = rng.uniform(0.0, 1.0);
    const std::vector<double> xm = combine(theta, x1, 1.0 - theta, x2);
    bool ok = true;
    for (double rho : g.levels()) {
      const Interval lhs = e.eval(xm, rho);
      const Interval rhs = scale(theta, e.eval(x1, rho)) +
                           scale(1.0 - theta, e.eval(x2, rho));
      if (lhs.lo > rhs.lo + eps || lhs.hi > rhs.hi + eps) {
        report.counterexample = ConvexityCounterexample{x1, x2, theta, rho, lhs, rhs};
        ok = false;
        break;
      }
    }
    if (!ok) break;
    ++report.passes;
  }
  return report;
}

GradientInequalityReport gradient_inequality_check(const FuzzyExpr& e,
                                                   const std::vector<double>& x1,
                                                   const std::vector<double>& x2,
                                                   const LevelGrid& grid, double eps) {
  if (x1.size() != e.dimension() || x2.size() != e.dimension())
    throw DimensionMismatch("point arity does not match expression");
  const std::vector<double> tau = combine(1.0, x2, -1.0, x1);
  CutFamily lhs = directional(e, x1, tau, grid);
  const LevelGrid& g = lhs.grid();
  std::vector<Interval> cs;
  cs.reserve(g.size());
  for (double rho : g.levels())
    cs.push_back(gh_diff(e.eval(x2, rho), e.eval(x1, rho)));
  CutFamily rhs(g, std::move(cs));
  OrderResult order = compare(lhs, rhs, eps);
  return GradientInequalityReport{order, std::move(lhs), std::move(rhs)};
}

}  // namespace fuzzopt
