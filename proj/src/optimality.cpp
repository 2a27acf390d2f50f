#include "fuzzopt/optimality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fuzzopt {

FuzzyProblem::FuzzyProblem(FuzzyExpr obj, std::vector<FuzzyExpr> cons)
    : objective(std::move(obj)), constraints(std::move(cons)) {
  for (const FuzzyExpr& c : constraints)
    if (c.dimension() != objective.dimension())
      throw DimensionMismatch("constraint dimension does not match objective");
}

namespace {

LevelGrid problem_grid(const FuzzyProblem& p, const LevelGrid& base) {
  LevelGrid g = p.objective.refined_grid(base);
  for (const FuzzyExpr& c : p.constraints) g = c.refined_grid(g);
  return g;
}

void check_point(const FuzzyProblem& p, const std::vector<double>& x) {
  if (x.size() != p.dimension())
    throw DimensionMismatch("point arity does not match problem dimension");
}

// Feasibility uses the weak order: both endpoints at or below zero (within
// tol) at every level, which keeps exactly-active constraints feasible.
void check_feasible(const FuzzyProblem& p, const std::vector<double>& x, double tol,
                    const LevelGrid& g) {
  for (std::size_t j = 0; j < p.constraints.size(); ++j) {
    const CutFamily y = p.constraints[j].eval_family(x, g);
    for (std::size_t l = 0; l < y.size(); ++l) {
      if (y.at(l).hi > tol)
        throw InfeasiblePoint("constraint " + std::to_string(j) +
                              " violated at level " + std::to_string(y.level(l)));
    }
  }
}

// Stationarity residual families for given multipliers: kappa0 * grad(H)
// plus the active-constraint combination, per coordinate. Nonnegative
// multipliers keep endpoint roles fixed, so endpoints combine linearly.
std::vector<CutFamily> residual_families(const FuzzyProblem& p,
                                         const std::vector<double>& x, double kappa0,
                                         const std::vector<double>& kappas,
                                         const LevelGrid& g) {
  const FuzzyGradient gh = grad(p.objective, x, g);
  std::vector<CutFamily> out;
  out.reserve(p.dimension());
  for (std::size_t i = 0; i < p.dimension(); ++i)
    out.push_back(scalar_mul(kappa0, gh[i]));
  for (std::size_t j = 0; j < p.constraints.size(); ++j) {
    if (kappas[j] == 0.0) continue;
    const FuzzyGradient gy = grad(p.constraints[j], x, g);
    for (std::size_t i = 0; i < p.dimension(); ++i)
      out[i] = add(out[i], scalar_mul(kappas[j], gy[i]));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> active_set(const FuzzyProblem& p, const std::vector<double>& x,
                                    double tol, const LevelGrid& grid) {
  check_point(p, x);
  const LevelGrid g = problem_grid(p, grid);
  check_feasible(p, x, tol, g);
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < p.constraints.size(); ++j)
    if (is_zero(p.constraints[j].eval_family(x, g), tol)) active.push_back(j);
  return active;
}

std::optional<MultiplierCertificate> fritz_john_find(const FuzzyProblem& p,
                                                     const std::vector<double>& x,
                                                     const LevelGrid& grid, double tol) {
  check_point(p, x);
  const LevelGrid g = problem_grid(p, grid);
  const std::vector<std::size_t> active = active_set(p, x, tol, g);

  // Variables: kappa0 followed by one multiplier per active constraint.
  const std::size_t k = active.size() + 1;
  std::vector<FuzzyGradient> grads;
  grads.reserve(k);
  grads.push_back(grad(p.objective, x, g));
  for (std::size_t j : active) grads.push_back(grad(p.constraints[j], x, g));

  LinearProgram lp;
  lp.objective.assign(k, 0.0);
  lp.bounds.assign(k, VarBounds::nonneg());
  LinearConstraint norm;
  norm.coeffs.assign(k, 1.0);
  norm.rel = Relation::Equal;
  norm.rhs = 1.0;
  lp.constraints.push_back(std::move(norm));
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    for (std::size_t l = 0; l < g.size(); ++l) {
      LinearConstraint lo_row, hi_row;
      lo_row.coeffs.assign(k, 0.0);
      hi_row.coeffs.assign(k, 0.0);
      for (std::size_t m = 0; m < k; ++m) {
        const Interval iv = grads[m][i].at(l);
        lo_row.coeffs[m] = iv.lo;
        hi_row.coeffs[m] = iv.hi;
      }
      lo_row.rel = Relation::LessEq;
      lo_row.rhs = 0.0;
      hi_row.rel = Relation::GreaterEq;
      hi_row.rhs = 0.0;
      lp.constraints.push_back(std::move(lo_row));
      lp.constraints.push_back(std::move(hi_row));
    }
  }

  const LpOutcome out = lp_solve(lp);
  if (out.status != LpStatus::Optimal) return std::nullopt;

  MultiplierCertificate cert;
  cert.kappa0 = out.point[0];
  cert.kappas.assign(p.constraints.size(), 0.0);
  for (std::size_t m = 0; m < active.size(); ++m)
    cert.kappas[active[m]] = out.point[m + 1];
  cert.active = active;
  cert.residuals = residual_families(p, x, cert.kappa0, cert.kappas, g);
  return cert;
}

MultiplierReport fritz_john_verify(const FuzzyProblem& p, const std::vector<double>& x,
                                   double kappa0, const std::vector<double>& kappas,
                                   double tol, const LevelGrid& grid) {
  check_point(p, x);
  if (kappas.size() != p.constraints.size())
    throw DimensionMismatch("one multiplier per constraint required");
  const LevelGrid g = problem_grid(p, grid);

  MultiplierReport report;
  report.nonneg = kappa0 >= -tol;
  double total = std::abs(kappa0);
  for (double kj : kappas) {
    if (kj < -tol) report.nonneg = false;
    total += std::abs(kj);
  }
  report.not_all_zero = total > tol;

  report.residuals = residual_families(p, x, kappa0, kappas, g);
  report.stationarity.ok = true;
  for (const CutFamily& f : report.residuals) {
    for (const Interval& iv : f.cuts()) {
      const double gap = excess(iv, 0.0);
      report.stationarity.worst = std::max(report.stationarity.worst, gap);
      if (gap > tol) report.stationarity.ok = false;
    }
  }

  report.complementary.ok = true;
  for (std::size_t j = 0; j < p.constraints.size(); ++j) {
    if (kappas[j] == 0.0) continue;
    const CutFamily y = p.constraints[j].eval_family(x, g);
    for (const Interval& iv : y.cuts()) {
      const double dev =
          std::max(std::abs(kappas[j] * iv.lo), std::abs(kappas[j] * iv.hi));
      report.complementary.worst = std::max(report.complementary.worst, dev);
      if (dev > tol) report.complementary.ok = false;
    }
  }
  return report;
}

std::optional<MultiplierCertificate> kkt_find(const FuzzyProblem& p,
                                              const std::vector<double>& x,
                                              const LevelGrid& grid, double tol) {
  check_point(p, x);
  const LevelGrid g = problem_grid(p, grid);
  const std::vector<std::size_t> active = active_set(p, x, tol, g);

  const FuzzyGradient gh = grad(p.objective, x, g);
  std::vector<FuzzyGradient> grads;
  grads.reserve(active.size());
  for (std::size_t j : active) grads.push_back(grad(p.constraints[j], x, g));

  const std::size_t k = active.size();
  LinearProgram lp;
  lp.objective.assign(std::max<std::size_t>(k, 1), 0.0);
  lp.bounds.assign(std::max<std::size_t>(k, 1), VarBounds::nonneg());
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    for (std::size_t l = 0; l < g.size(); ++l) {
      LinearConstraint lo_row, hi_row;
      lo_row.coeffs.assign(std::max<std::size_t>(k, 1), 0.0);
      hi_row.coeffs.assign(std::max<std::size_t>(k, 1), 0.0);
      for (std::size_t m = 0; m < k; ++m) {
        const Interval iv = grads[m][i].at(l);
        lo_row.coeffs[m] = iv.lo;
        hi_row.coeffs[m] = iv.hi;
      }
      const Interval h = gh[i].at(l);
      lo_row.rel = Relation::LessEq;
      lo_row.rhs = -h.lo;
      hi_row.rel = Relation::GreaterEq;
      hi_row.rhs = -h.hi;
      lp.constraints.push_back(std::move(lo_row));
      lp.constraints.push_back(std::move(hi_row));
    }
  }

  const LpOutcome out = lp_solve(lp);
  if (out.status != LpStatus::Optimal) return std::nullopt;

  MultiplierCertificate cert;
  cert.kappa0 = 1.0;
  cert.kappas.assign(p.constraints.size(), 0.0);
  for (std::size_t m = 0; m < k; ++m) cert.kappas[active[m]] = out.point[m];
  cert.active = active;
  cert.residuals = residual_families(p, x, 1.0, cert.kappas, g);
  return cert;
}

IndependenceReport linear_independence_check(const std::vector<FuzzyVector>& vs,
                                             const LevelGrid& grid, double tol) {
  if (vs.empty()) throw DomainError("independence check needs at least one vector");
  if (vs.size() > 8)
    throw DomainError("orthant enumeration limited to 8 vectors");
  const std::size_t k = vs.size();
  const std::size_t n = vs.front().size();
  for (const FuzzyVector& v : vs)
    if (v.size() != n) throw DimensionMismatch("vectors must share a dimension");

  LevelGrid g = grid;
  for (const FuzzyVector& v : vs)
    for (const FuzzyNumber& m : v.components()) g = g.merged_with(m.knots());

  // Inside one sign orthant the endpoint roles are fixed, so the
  // zero-membership constraints become linear in w = |theta|.
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<double> sign(k);
    for (std::size_t m = 0; m < k; ++m) sign[m] = (mask >> m) & 1u ? -1.0 : 1.0;

    std::vector<LinearConstraint> rows;
    LinearConstraint norm;
    norm.coeffs.assign(k, 1.0);
    norm.rel = Relation::Equal;
    norm.rhs = 1.0;
    rows.push_back(std::move(norm));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < g.size(); ++l) {
        LinearConstraint lo_row, hi_row;
        lo_row.coeffs.assign(k, 0.0);
        hi_row.coeffs.assign(k, 0.0);
        for (std::size_t m = 0; m < k; ++m) {
          const Interval iv = vs[m][i].cut(g[l]);
          lo_row.coeffs[m] = sign[m] > 0 ? iv.lo : -iv.hi;
          hi_row.coeffs[m] = sign[m] > 0 ? iv.hi : -iv.lo;
        }
        lo_row.rel = Relation::LessEq;
        lo_row.rhs = 0.0;
        hi_row.rel = Relation::GreaterEq;
        hi_row.rhs = 0.0;
        rows.push_back(std::move(lo_row));
        rows.push_back(std::move(hi_row));
      }
    }
    const LpOutcome out =
        lp_feasible(rows, std::vector<VarBounds>(k, VarBounds::nonneg()));
    if (out.status == LpStatus::Optimal) {
      std::vector<double> theta(k);
      for (std::size_t m = 0; m < k; ++m) theta[m] = sign[m] * out.point[m];
      // re-verify by direct interval arithmetic before reporting dependence
      bool verified = true;
      for (std::size_t i = 0; i < n && verified; ++i) {
        for (std::size_t l = 0; l < g.size(); ++l) {
          Interval acc(0.0, 0.0);
          for (std::size_t m = 0; m < k; ++m)
            acc = acc + scale(theta[m], vs[m][i].cut(g[l]));
          if (!contains_zero(acc, std::max(tol, 1e-7))) {
            verified = false;
            break;
          }
        }
      }
      if (verified) return IndependenceReport{false, std::move(theta)};
    }
  }
  return IndependenceReport{true, std::nullopt};
}

FirstOrderReport first_order_unconstrained_check(const FuzzyExpr& e,
                                                 const std::vector<double>& x,
                                                 const LevelGrid& grid, double tol) {
  const FuzzyGradient gr = grad(e, x, grid);
  FirstOrderReport report;
  report.pass = true;
  for (const CutFamily& f : gr.partials) {
    for (const Interval& iv : f.cuts()) {
      const double gap = excess(iv, 0.0);
      report.worst = std::max(report.worst, gap);
      if (gap > tol) report.pass = false;
    }
  }
  report.gradient = gr.partials;
  return report;
}

SufficiencyReport kkt_sufficiency_report(const FuzzyProblem& p,
                                         const std::vector<double>& x,
                                         const std::vector<double>& kappas,
                                         const std::vector<Interval>& box,
                                         std::size_t convexity_trials,
                                         std::uint64_t rng_seed, const LevelGrid& grid,
                                         double tol) {
  SufficiencyReport report;
  report.kkt = fritz_john_verify(p, x, 1.0, kappas, tol, grid);
  report.objective_convexity =
      convexity_sample(p.objective, box, convexity_trials, rng_seed, grid);
  bool convex_ok = report.objective_convexity.passed();
  for (std::size_t j = 0; j < p.constraints.size(); ++j) {
    report.constraint_convexity.push_back(
        convexity_sample(p.constraints[j], box, convexity_trials, rng_seed + 1 + j, grid));
    convex_ok = convex_ok && report.constraint_convexity.back().passed();
  }
  report.supported = report.kkt.pass() && convex_ok;
  return report;
}

}  // namespace fuzzopt
