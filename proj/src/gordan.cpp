#include "fuzzopt/gordan.hpp"

#include <cmath>

namespace fuzzopt {

namespace {

constexpr double kStrictThreshold = -1e-9;

LevelGrid refine_with(const LevelGrid& grid, const FuzzyVector& u) {
  LevelGrid g = grid;
  for (const FuzzyNumber& m : u.components()) g = g.merged_with(m.knots());
  return g;
}

LevelGrid refine_with(const LevelGrid& grid, const FuzzyMatrix& m) {
  LevelGrid g = grid;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g = g.merged_with(m.at(i, j).knots());
  return g;
}

}  // namespace

namespace {

// The level-wise upper endpoint of y^T U is convex piecewise-affine in the
// level, so its maximum over [0,1] is attained at an input knot. Building
// the epigraph LP on knots only is exact and keeps the tableau small.
LevelGrid knot_grid(const FuzzyVector& u) {
  LevelGrid g = LevelGrid::uniform(2);
  for (const FuzzyNumber& m : u.components()) g = g.merged_with(m.knots());
  return g;
}

LevelGrid knot_grid(const FuzzyMatrix& m) {
  LevelGrid g = LevelGrid::uniform(2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g = g.merged_with(m.at(i, j).knots());
  return g;
}

}  // namespace

// Epigraph LP for min over |y| <= 1 of the largest upper endpoint of y^T U
// across levels: one t-variable per (level, component) bounding both
// endpoint products, one row per level tying their sum under s.
WitnessSearch gordan_vector_witness_search(const FuzzyVector& u) {
  const LevelGrid g = knot_grid(u);
  const std::size_t n = u.size();
  const std::size_t L = g.size();
  const std::size_t s_var = n;
  const auto t_var = [&](std::size_t l, std::size_t j) { return n + 1 + l * n + j; };
  const std::size_t nvars = n + 1 + L * n;

  LinearProgram p;
  p.objective.assign(nvars, 0.0);
  p.objective[s_var] = 1.0;
  p.bounds.assign(nvars, VarBounds::free());
  for (std::size_t j = 0; j < n; ++j) p.bounds[j] = VarBounds::boxed(-1.0, 1.0);

  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t j = 0; j < n; ++j) {
      const Interval iv = u[j].cut(g[l]);
      for (double endpoint : {iv.lo, iv.hi}) {
        LinearConstraint row;
        row.coeffs.assign(nvars, 0.0);
        row.coeffs[j] = endpoint;
        row.coeffs[t_var(l, j)] = -1.0;
        row.rel = Relation::LessEq;
        row.rhs = 0.0;
        p.constraints.push_back(std::move(row));
      }
    }
    LinearConstraint tie;
    tie.coeffs.assign(nvars, 0.0);
    for (std::size_t j = 0; j < n; ++j) tie.coeffs[t_var(l, j)] = 1.0;
    tie.coeffs[s_var] = -1.0;
    tie.rel = Relation::LessEq;
    tie.rhs = 0.0;
    p.constraints.push_back(std::move(tie));
  }

  const LpOutcome out = lp_solve(p);
  if (out.status != LpStatus::Optimal)
    throw LpFailure("witness epigraph program must have an optimum");
  return WitnessSearch{out.value,
                       std::vector<double>(out.point.begin(), out.point.begin() + n)};
}

WitnessSearch gordan_matrix_witness_search(const FuzzyMatrix& m) {
  const LevelGrid g = knot_grid(m);
  const std::size_t s = m.rows();
  const std::size_t n = m.cols();
  const std::size_t L = g.size();
  const std::size_t s_var = s;
  const auto t_var = [&](std::size_t l, std::size_t c, std::size_t i) {
    return s + 1 + (l * n + c) * s + i;
  };
  const std::size_t nvars = s + 1 + L * n * s;

  LinearProgram p;
  p.objective.assign(nvars, 0.0);
  p.objective[s_var] = 1.0;
  p.bounds.assign(nvars, VarBounds::free());
  for (std::size_t i = 0; i < s; ++i) p.bounds[i] = VarBounds::boxed(-1.0, 1.0);

  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < s; ++i) {
        const Interval iv = m.at(i, c).cut(g[l]);
        for (double endpoint : {iv.lo, iv.hi}) {
          LinearConstraint row;
          row.coeffs.assign(nvars, 0.0);
          row.coeffs[i] = endpoint;
          row.coeffs[t_var(l, c, i)] = -1.0;
          row.rel = Relation::LessEq;
          row.rhs = 0.0;
          p.constraints.push_back(std::move(row));
        }
      }
      LinearConstraint tie;
      tie.coeffs.assign(nvars, 0.0);
      for (std::size_t i = 0; i < s; ++i) tie.coeffs[t_var(l, c, i)] = 1.0;
      tie.coeffs[s_var] = -1.0;
      tie.rel = Relation::LessEq;
      tie.rhs = 0.0;
      p.constraints.push_back(std::move(tie));
    }
  }

  const LpOutcome out = lp_solve(p);
  if (out.status != LpStatus::Optimal)
    throw LpFailure("witness epigraph program must have an optimum");
  return WitnessSearch{out.value,
                       std::vector<double>(out.point.begin(), out.point.begin() + s)};
}

GordanVerdict gordan_vector_decide(const FuzzyVector& u, const LevelGrid& grid,
                                   double eps) {
  const LevelGrid g = refine_with(grid, u);
  GordanVerdict v;

  // Zero membership of every component at every level. Nestedness makes the
  // core the binding level; scanning all of them doubles as the assertion.
  bool alt2 = true;
  for (std::size_t j = 0; j < u.size() && alt2; ++j) {
    for (std::size_t l = 0; l < g.size(); ++l) {
      if (!contains_zero(u[j].cut(g[l]), eps)) {
        alt2 = false;
        v.failing_level = g[l];
        v.failing_component = static_cast<int>(j);
        break;
      }
    }
  }
  if (alt2) {
    v.which = GordanVerdict::Which::AlternativeII;
    for (std::size_t l = 0; l < g.size(); ++l)
      v.evidence.push_back({g[l], std::vector<double>{1.0}});
    return v;
  }

  const WitnessSearch ws = gordan_vector_witness_search(u);
  v.witness_epigraph = ws.epigraph;
  if (ws.epigraph < kStrictThreshold &&
      compare(dot(ws.y, u, g), FuzzyNumber::zero(), eps).strict_all) {
    v.which = GordanVerdict::Which::AlternativeI;
    v.witness_y = ws.y;
    return v;
  }
  v.which = GordanVerdict::Which::NeitherDetected;
  return v;
}

GordanVerdict gordan_matrix_decide(const FuzzyMatrix& m, const LevelGrid& grid,
                                   double eps) {
  const LevelGrid g = refine_with(grid, m);
  const std::size_t s = m.rows();
  const std::size_t n = m.cols();
  GordanVerdict v;

  // Per-level mixture search: x >= 0, sum x = 1, every row's combined cut
  // straddles zero.
  bool alt2 = true;
  std::vector<GordanVerdict::LevelEvidence> evidence;
  for (std::size_t l = 0; l < g.size(); ++l) {
    std::vector<LinearConstraint> rows;
    LinearConstraint norm;
    norm.coeffs.assign(n, 1.0);
    norm.rel = Relation::Equal;
    norm.rhs = 1.0;
    rows.push_back(std::move(norm));
    for (std::size_t i = 0; i < s; ++i) {
      LinearConstraint lo_row, hi_row;
      lo_row.coeffs.assign(n, 0.0);
      hi_row.coeffs.assign(n, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        const Interval iv = m.at(i, j).cut(g[l]);
        lo_row.coeffs[j] = iv.lo;
        hi_row.coeffs[j] = iv.hi;
      }
      lo_row.rel = Relation::LessEq;
      lo_row.rhs = 0.0;
      hi_row.rel = Relation::GreaterEq;
      hi_row.rhs = 0.0;
      rows.push_back(std::move(lo_row));
      rows.push_back(std::move(hi_row));
    }
    const LpOutcome out =
        lp_feasible(rows, std::vector<VarBounds>(n, VarBounds::nonneg()));
    if (out.status != LpStatus::Optimal) {
      alt2 = false;
      v.failing_level = g[l];
      break;
    }
    // re-verify the mixture by direct interval arithmetic before trusting it
    bool verified = true;
    for (std::size_t i = 0; i < s && verified; ++i) {
      Interval acc(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j)
        acc = acc + scale(out.point[j], m.at(i, j).cut(g[l]));
      verified = contains_zero(acc, 1e-7);
    }
    if (!verified) {
      alt2 = false;
      v.failing_level = g[l];
      break;
    }
    evidence.push_back({g[l], out.point});
  }
  if (alt2) {
    v.which = GordanVerdict::Which::AlternativeII;
    v.evidence = std::move(evidence);
    return v;
  }

  const WitnessSearch ws = gordan_matrix_witness_search(m);
  v.witness_epigraph = ws.epigraph;
  if (ws.epigraph < kStrictThreshold) {
    bool verified = true;
    for (std::size_t c = 0; c < n && verified; ++c)
      verified = compare(dot(ws.y, m.column(c), g), FuzzyNumber::zero(), eps).strict_all;
    if (verified) {
      v.which = GordanVerdict::Which::AlternativeI;
      v.witness_y = ws.y;
      return v;
    }
  }
  v.which = GordanVerdict::Which::NeitherDetected;
  return v;
}

namespace {

// Walk an n-dimensional lattice over [-1,1]^n, skipping the origin.
bool next_lattice_point(std::vector<std::size_t>& idx, std::size_t steps) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (++idx[i] < steps) return true;
    idx[i] = 0;
  }
  return false;
}

std::vector<double> lattice_value(const std::vector<std::size_t>& idx,
                                  std::size_t steps) {
  std::vector<double> y(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    y[i] = -1.0 + 2.0 * static_cast<double>(idx[i]) / static_cast<double>(steps - 1);
  return y;
}

}  // namespace

ExclusivityReport gordan_exclusivity_oracle(const FuzzyVector& u, std::size_t y_steps,
                                            const LevelGrid& grid, double eps) {
  if (u.size() > 6) throw DomainError("exhaustive oracle limited to small instances");
  if (y_steps < 3) throw DomainError("y lattice needs at least 3 steps");
  const LevelGrid g = refine_with(grid, u);

  ExclusivityReport r;
  r.alt2_holds = true;
  for (std::size_t j = 0; j < u.size() && r.alt2_holds; ++j)
    for (std::size_t l = 0; l < g.size(); ++l)
      if (!contains_zero(u[j].cut(g[l]), eps)) {
        r.alt2_holds = false;
        break;
      }

  std::vector<std::size_t> idx(u.size(), 0);
  do {
    const std::vector<double> y = lattice_value(idx, y_steps);
    bool zero = true;
    for (double c : y)
      if (c != 0.0) zero = false;
    if (zero) continue;
    if (compare(dot(y, u, g), FuzzyNumber::zero(), eps).strict_all) {
      r.alt1_holds = true;
      r.scan_witness = y;
      break;
    }
  } while (next_lattice_point(idx, y_steps));
  return r;
}

ExclusivityReport gordan_exclusivity_oracle(const FuzzyMatrix& m, std::size_t y_steps,
                                            const LevelGrid& grid, double eps) {
  if (m.rows() * m.cols() > 6)
    throw DomainError("exhaustive oracle limited to small instances");
  if (y_steps < 3) throw DomainError("y lattice needs at least 3 steps");
  const LevelGrid g = refine_with(grid, m);
  const std::size_t s = m.rows();
  const std::size_t n = m.cols();

  ExclusivityReport r;

  // Alternative II scan: mixtures on a simplex lattice, re-verified by
  // direct interval arithmetic per row and level.
  r.alt2_holds = true;
  for (std::size_t l = 0; l < g.size() && r.alt2_holds; ++l) {
    bool level_ok = false;
    std::vector<std::size_t> idx(n, 0);
    do {
      double total = 0.0;
      for (std::size_t j = 0; j < n; ++j) total += static_cast<double>(idx[j]);
      if (total == 0.0) continue;
      std::vector<double> x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = static_cast<double>(idx[j]) / total;
      bool rows_ok = true;
      for (std::size_t i = 0; i < s && rows_ok; ++i) {
        Interval acc(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) acc = acc + scale(x[j], m.at(i, j).cut(g[l]));
        rows_ok = contains_zero(acc, eps);
      }
      if (rows_ok) {
        level_ok = true;
        break;
      }
    } while (next_lattice_point(idx, y_steps));
    r.alt2_holds = level_ok;
  }

  std::vector<std::size_t> idx(s, 0);
  do {
    const std::vector<double> y = lattice_value(idx, y_steps);
    bool zero = true;
    for (double c : y)
      if (c != 0.0) zero = false;
    if (zero) continue;
    bool all_cols = true;
    for (std::size_t c = 0; c < n && all_cols; ++c)
      all_cols = compare(dot(y, m.column(c), g), FuzzyNumber::zero(), eps).strict_all;
    if (all_cols) {
      r.alt1_holds = true;
      r.scan_witness = y;
      break;
    }
  } while (next_lattice_point(idx, y_steps));
  return r;
}

}  // namespace fuzzopt
