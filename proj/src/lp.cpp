#include "fuzzopt/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace fuzzopt {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kFeasTol = 1e-8;

// How each original variable maps onto the nonnegative expanded ones:
//   Shifted:  x = off + u          (finite lower bound)
//   Mirrored: x = off - u          (finite upper bound only)
//   Split:    x = u - v            (free)
struct VarMap {
  enum Kind { Shifted, Mirrored, Split } kind;
  std::size_t u = 0, v = 0;
  double off = 0.0;
};

struct Tableau {
  std::vector<std::vector<double>> a;  // m x ncols
  std::vector<double> rhs;             // m, kept >= 0
  std::vector<std::size_t> basis;      // m
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t c) {
    const double inv = 1.0 / a[r][c];
    for (std::size_t j = 0; j < ncols; ++j) a[r][j] *= inv;
    rhs[r] *= inv;
    a[r][c] = 1.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r) continue;
      const double f = a[i][c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < ncols; ++j) a[i][j] -= f * a[r][j];
      a[i][c] = 0.0;
      rhs[i] -= f * rhs[r];
      if (rhs[i] < 0.0 && rhs[i] > -1e-11) rhs[i] = 0.0;  // degenerate drift
    }
    basis[r] = c;
  }
};

enum class PhaseResult { Optimal, Unbounded };

struct PhaseOutcome {
  PhaseResult result = PhaseResult::Optimal;
  std::size_t entering = 0;  // the offending column when Unbounded
};

bool trace_enabled() {
  static const bool on = std::getenv("FUZZOPT_LP_TRACE") != nullptr;
  return on;
}

// Lexicographic ratio comparison: does row i beat row k as the leaving row
// for the entering column? Compares rhs/pivot first, then the scaled rows
// column by column. The lexicographic rule keeps the method cycle-free for
// any entering rule, which plain minimum-ratio with Bland ties is not once
// heavily degenerate tableaus meet floating point.
bool lex_less(const Tableau& t, std::size_t i, std::size_t k, std::size_t entering) {
  const double pi = t.a[i][entering];
  const double pk = t.a[k][entering];
  const double ri = t.rhs[i] / pi;
  const double rk = t.rhs[k] / pk;
  if (ri != rk) return ri < rk;
  for (std::size_t j = 0; j < t.ncols; ++j) {
    const double vi = t.a[i][j] / pi;
    const double vk = t.a[k][j] / pk;
    if (vi != vk) return vi < vk;
  }
  return t.basis[i] < t.basis[k];
}

// Entering by Bland (lowest eligible index with negative reduced cost),
// leaving by the lexicographic ratio test.
PhaseOutcome run_simplex(Tableau& t, const std::vector<double>& cost,
                         const std::vector<bool>& eligible, std::size_t max_iter) {
  const std::size_t m = t.a.size();
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    std::size_t entering = t.ncols;
    for (std::size_t j = 0; j < t.ncols; ++j) {
      if (!eligible[j]) continue;
      double red = cost[j];
      for (std::size_t i = 0; i < m; ++i) {
        const double cb = cost[t.basis[i]];
        if (cb != 0.0) red -= cb * t.a[i][j];
      }
      if (red < -kPivotEps) {
        entering = j;
        break;
      }
    }
    if (entering == t.ncols) return {PhaseResult::Optimal, 0};

    std::size_t leaving = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.a[i][entering] > kPivotEps) {
        if (leaving == m || lex_less(t, i, leaving, entering)) leaving = i;
      }
    }
    if (leaving == m) return {PhaseResult::Unbounded, entering};
    if (trace_enabled())
      std::fprintf(stderr, "lp pivot: iter=%zu enter=%zu leave_row=%zu ratio=%g\n",
                   iter, entering, leaving, t.rhs[leaving] / t.a[leaving][entering]);
    t.pivot(leaving, entering);
  }
  throw LpFailure("simplex iteration guard exceeded");
}

// An unbounded verdict names a ray; make sure it is real before reporting
// it. The ray lies in the null space of the original rows, so a corrupted
// tableau shows up as a large residual against the pristine data.
bool ray_is_genuine(const std::vector<std::vector<double>>& a0, const Tableau& t,
                    std::size_t entering) {
  std::vector<double> d(t.ncols, 0.0);
  d[entering] = 1.0;
  for (std::size_t i = 0; i < t.a.size(); ++i) d[t.basis[i]] = -t.a[i][entering];
  for (const auto& row : a0) {
    double dot = 0.0, scale = 1.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      dot += row[j] * d[j];
      scale = std::max(scale, std::abs(row[j] * d[j]));
    }
    if (std::abs(dot) > 1e-6 * scale) return false;
  }
  return true;
}

}  // namespace

LpOutcome lp_solve(const LinearProgram& p) {
  const std::size_t n = p.objective.size();
  if (n < 1) throw DimensionMismatch("linear program needs at least one variable");
  for (const auto& c : p.constraints)
    if (c.coeffs.size() != n)
      throw DimensionMismatch("constraint arity does not match objective");
  if (!p.bounds.empty() && p.bounds.size() != n)
    throw DimensionMismatch("bounds arity does not match objective");

  // Expand to nonnegative variables.
  std::vector<VarMap> map(n);
  std::size_t nexp = 0;
  std::vector<LinearConstraint> extra;  // u <= hi - lo rows for boxed vars
  for (std::size_t j = 0; j < n; ++j) {
    const VarBounds b = p.bounds.empty() ? VarBounds::free() : p.bounds[j];
    if (b.lo && b.hi && *b.hi < *b.lo) return {LpStatus::Infeasible, {}, 0.0};
    if (b.lo) {
      map[j] = {VarMap::Shifted, nexp++, 0, *b.lo};
      if (b.hi) {
        LinearConstraint row;
        row.coeffs.assign(n, 0.0);
        row.coeffs[j] = 1.0;
        row.rel = Relation::LessEq;
        row.rhs = *b.hi;
        extra.push_back(std::move(row));
      }
    } else if (b.hi) {
      map[j] = {VarMap::Mirrored, nexp++, 0, *b.hi};
    } else {
      map[j] = {VarMap::Split, nexp, nexp + 1, 0.0};
      nexp += 2;
    }
  }

  std::vector<LinearConstraint> rows = p.constraints;
  rows.insert(rows.end(), extra.begin(), extra.end());
  const std::size_t m = rows.size();

  // Rewrite each row over the expanded variables; then normalize rhs >= 0.
  std::vector<std::vector<double>> A(m, std::vector<double>(nexp, 0.0));
  std::vector<double> b(m, 0.0);
  std::vector<Relation> rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    double rhs = rows[i].rhs;
    for (std::size_t j = 0; j < n; ++j) {
      const double cj = rows[i].coeffs[j];
      if (cj == 0.0) continue;
      switch (map[j].kind) {
        case VarMap::Shifted:
          A[i][map[j].u] += cj;
          rhs -= cj * map[j].off;
          break;
        case VarMap::Mirrored:
          A[i][map[j].u] -= cj;
          rhs -= cj * map[j].off;
          break;
        case VarMap::Split:
          A[i][map[j].u] += cj;
          A[i][map[j].v] -= cj;
          break;
      }
    }
    rel[i] = rows[i].rel;
    b[i] = rhs;
    if (b[i] < 0.0) {
      for (auto& v : A[i]) v = -v;
      b[i] = -b[i];
      if (rel[i] == Relation::LessEq)
        rel[i] = Relation::GreaterEq;
      else if (rel[i] == Relation::GreaterEq)
        rel[i] = Relation::LessEq;
    }
  }

  // Columns: [expanded | slack/surplus | artificial]; count them first.
  std::size_t nslack = 0, nart = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (rel[i] != Relation::Equal) ++nslack;
    if (rel[i] != Relation::LessEq) ++nart;
  }
  Tableau t;
  t.ncols = nexp + nslack + nart;
  t.a.assign(m, std::vector<double>(t.ncols, 0.0));
  t.rhs = b;
  t.basis.assign(m, 0);

  std::vector<bool> artificial(t.ncols, false);
  std::size_t scol = nexp, acol = nexp + nslack;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nexp; ++j) t.a[i][j] = A[i][j];
    switch (rel[i]) {
      case Relation::LessEq:
        t.a[i][scol] = 1.0;
        t.basis[i] = scol++;
        break;
      case Relation::GreaterEq:
        t.a[i][scol++] = -1.0;
        t.a[i][acol] = 1.0;
        artificial[acol] = true;
        t.basis[i] = acol++;
        break;
      case Relation::Equal:
        t.a[i][acol] = 1.0;
        artificial[acol] = true;
        t.basis[i] = acol++;
        break;
    }
  }

  const std::size_t guard = 200 * (m + t.ncols) + 2000;
  const std::vector<std::vector<double>> a0 = t.a;  // pristine rows

  // Phase 1: drive the artificials to zero.
  if (nart > 0) {
    std::vector<double> c1(t.ncols, 0.0);
    for (std::size_t j = 0; j < t.ncols; ++j)
      if (artificial[j]) c1[j] = 1.0;
    std::vector<bool> all(t.ncols, true);
    run_simplex(t, c1, all, guard);  // phase 1 cannot be unbounded
    double art_sum = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      if (artificial[t.basis[i]]) art_sum += t.rhs[i];
    if (art_sum > kFeasTol) return {LpStatus::Infeasible, {}, 0.0};
    // Pivot basic artificials out where a real column is available; their
    // values are zero within tolerance, so clamp the pivoted row.
    for (std::size_t i = 0; i < m; ++i) {
      if (!artificial[t.basis[i]]) continue;
      for (std::size_t j = 0; j < nexp + nslack; ++j) {
        if (std::abs(t.a[i][j]) > 1e-7) {
          t.pivot(i, j);
          if (t.rhs[i] < 0.0) t.rhs[i] = 0.0;
          break;
        }
      }
    }
  }

  // Phase 2 with the real objective on the expanded variables.
  std::vector<double> c2(t.ncols, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    switch (map[j].kind) {
      case VarMap::Shifted:
        c2[map[j].u] += p.objective[j];
        break;
      case VarMap::Mirrored:
        c2[map[j].u] -= p.objective[j];
        break;
      case VarMap::Split:
        c2[map[j].u] += p.objective[j];
        c2[map[j].v] -= p.objective[j];
        break;
    }
  }
  std::vector<bool> eligible(t.ncols, true);
  for (std::size_t j = 0; j < t.ncols; ++j)
    if (artificial[j]) eligible[j] = false;
  const PhaseOutcome phase2 = run_simplex(t, c2, eligible, guard);
  if (phase2.result == PhaseResult::Unbounded) {
    if (!ray_is_genuine(a0, t, phase2.entering))
      throw LpFailure("unbounded verdict failed ray validation");
    return {LpStatus::Unbounded, {}, 0.0};
  }

  // Read the expanded solution back.
  std::vector<double> u(t.ncols, 0.0);
  for (std::size_t i = 0; i < m; ++i) u[t.basis[i]] = t.rhs[i];
  std::vector<double> x(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    switch (map[j].kind) {
      case VarMap::Shifted:
        x[j] = map[j].off + u[map[j].u];
        break;
      case VarMap::Mirrored:
        x[j] = map[j].off - u[map[j].u];
        break;
      case VarMap::Split:
        x[j] = u[map[j].u] - u[map[j].v];
        break;
    }
  }
  double value = 0.0;
  for (std::size_t j = 0; j < n; ++j) value += p.objective[j] * x[j];
  return {LpStatus::Optimal, std::move(x), value};
}

LpOutcome lp_feasible(const std::vector<LinearConstraint>& constraints,
                      const std::vector<VarBounds>& bounds) {
  std::size_t n = bounds.size();
  if (n == 0) {
    for (const auto& c : constraints) n = std::max(n, c.coeffs.size());
  }
  if (n == 0) throw DimensionMismatch("feasibility problem needs at least one variable");
  LinearProgram p;
  p.objective.assign(n, 0.0);
  p.constraints = constraints;
  p.bounds = bounds;
  return lp_solve(p);
}

double lp_violation(const LinearProgram& p, const std::vector<double>& x) {
  double worst = 0.0;
  for (const auto& c : p.constraints) {
    double v = 0.0;
    for (std::size_t j = 0; j < c.coeffs.size(); ++j) v += c.coeffs[j] * x[j];
    switch (c.rel) {
      case Relation::LessEq:
        worst = std::max(worst, v - c.rhs);
        break;
      case Relation::GreaterEq:
        worst = std::max(worst, c.rhs - v);
        break;
      case Relation::Equal:
        worst = std::max(worst, std::abs(v - c.rhs));
        break;
    }
  }
  for (std::size_t j = 0; j < p.bounds.size(); ++j) {
    if (p.bounds[j].lo) worst = std::max(worst, *p.bounds[j].lo - x[j]);
    if (p.bounds[j].hi) worst = std::max(worst, x[j] - *p.bounds[j].hi);
  }
  return worst;
}

}  // namespace fuzzopt
