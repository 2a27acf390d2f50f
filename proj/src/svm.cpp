#include "fuzzopt/svm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace fuzzopt {

FuzzyDataset::FuzzyDataset(std::vector<FuzzyVector> pts, std::vector<int> lbls)
    : points(std::move(pts)), labels(std::move(lbls)) {
  if (points.empty()) throw DomainError("dataset must be nonempty");
  if (points.size() != labels.size())
    throw DimensionMismatch("one label per point required");
  const std::size_t n = points.front().size();
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != n)
      throw DimensionMismatch("points must share a dimension");
    if (labels[i] == 1)
      pos = true;
    else if (labels[i] == -1)
      neg = true;
    else
      throw DomainError("labels must be -1 or +1");
  }
  if (!pos || !neg) throw DomainError("dataset must contain both labels");
}

const Interval& BiasSet::top() const {
  for (std::size_t l = intervals.size(); l-- > 0;)
    if (intervals[l]) return *intervals[l];
  throw EmptyBias("bias set has no nonempty level");
}

namespace {

LevelGrid dataset_grid(const FuzzyDataset& d, const LevelGrid& base) {
  LevelGrid g = base;
  for (const FuzzyVector& p : d.points)
    for (const FuzzyNumber& m : p.components()) g = g.merged_with(m.knots());
  return g;
}

Interval weighted_cut(const FuzzyDataset& d, const std::vector<double>& lambda,
                      std::size_t i, double rho) {
  Interval acc(0.0, 0.0);
  for (std::size_t c = 0; c < lambda.size(); ++c)
    acc = acc + scale(lambda[c], d.points[i][c].cut(rho));
  return acc;
}

// Admissible-bias window of point i at one level: the set of ell for which
// the margin interval y_i (lambda.U_i - ell) reaches 1.
Interval bias_window(const FuzzyDataset& d, const std::vector<double>& lambda,
                     std::size_t i, double rho) {
  const Interval w = weighted_cut(d, lambda, i, rho);
  return d.labels[i] > 0 ? Interval(w.lo - 1.0, w.hi - 1.0)
                         : Interval(w.lo + 1.0, w.hi + 1.0);
}

}  // namespace

std::vector<double> svm_stationary_lambda(const FuzzyDataset& d,
                                          const std::vector<double>& kappas,
                                          const LevelGrid& grid, double tol) {
  if (kappas.size() != d.size())
    throw DimensionMismatch("one multiplier per point required");
  double balance = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (kappas[i] < -tol) throw DomainError("multipliers must be nonnegative");
    balance += kappas[i] * d.labels[i];
  }
  if (std::abs(balance) > std::max(tol, 1e-9))
    throw DomainError("multipliers must balance the labels");

  const LevelGrid g = dataset_grid(d, grid);
  const std::size_t n = d.dimension();
  std::vector<double> lambda(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    // Admissible interval per level: negate the multiplier combination of
    // the point cuts. Decreasing widths make level 1 the binding one.
    std::vector<Interval> allowed;
    allowed.reserve(g.size());
    for (double rho : g.levels()) {
      Interval s(0.0, 0.0);
      for (std::size_t i = 0; i < d.size(); ++i) {
        const double w = -kappas[i] * d.labels[i];
        if (w != 0.0) s = s + scale(w, d.points[i][c].cut(rho));
      }
      allowed.push_back(scale(-1.0, s));
    }
    lambda[c] = allowed.back().midpoint();  // level-1 core pin
    for (std::size_t l = 0; l < allowed.size(); ++l) {
      if (!allowed[l].contains(lambda[c], std::max(tol, 1e-9)))
        throw EmptyIntersection("stationarity interval excludes the core value at level " +
                                std::to_string(g[l]));
    }
  }
  return lambda;
}

BiasSet svm_bias_set(const FuzzyDataset& d, const std::vector<double>& lambda,
                     const std::vector<std::size_t>& support, const LevelGrid& grid) {
  if (support.empty()) throw DomainError("support set must be nonempty");
  if (lambda.size() != d.dimension())
    throw DimensionMismatch("normal vector arity does not match dataset");
  for (std::size_t i : support)
    if (i >= d.size()) throw DomainError("support index out of range");

  const LevelGrid g = dataset_grid(d, grid);
  std::vector<std::optional<Interval>> out(g.size());
  double rho_max = 0.0;
  bool any = false;
  for (std::size_t l = 0; l < g.size(); ++l) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i : support) {
      const Interval b = bias_window(d, lambda, i, g[l]);
      lo = std::max(lo, b.lo);
      hi = std::min(hi, b.hi);
    }
    if (lo > hi + 1e-12) continue;
    if (lo > hi) lo = hi = 0.5 * (lo + hi);  // touching within float noise
    out[l] = Interval(lo, hi);
    rho_max = g[l];
    any = true;
  }
  if (!any || !out.front())
    throw EmptyBias("support bias windows have empty intersection at level 0");
  return BiasSet(g, std::move(out), rho_max);
}

MarginReport svm_margin_report(const FuzzyDataset& d, const std::vector<double>& lambda,
                               double ell, const LevelGrid& grid, double tol) {
  if (lambda.size() != d.dimension())
    throw DimensionMismatch("normal vector arity does not match dataset");
  const LevelGrid g = dataset_grid(d, grid);
  MarginReport report;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double core = 0.0;
    for (std::size_t c = 0; c < lambda.size(); ++c)
      core += lambda[c] * d.points[i][c].core().midpoint();
    report.core_margins.push_back(d.labels[i] * (core - ell));

    // Worst (lowest) margin endpoint per level; nested cuts make it
    // nondecreasing, so scan down from level 1 while it clears 1.
    std::optional<double> sigma;
    for (std::size_t l = g.size(); l-- > 0;) {
      const Interval w = weighted_cut(d, lambda, i, g[l]);
      const double worst =
          d.labels[i] > 0 ? w.lo - ell : ell - w.hi;
      if (worst >= 1.0 - tol)
        sigma = g[l];
      else
        break;
    }
    report.satisfaction_level.push_back(sigma);
  }
  return report;
}

namespace {

struct Candidate {
  std::vector<std::size_t> support;
  std::vector<double> kappas;  // full length
};

// Vertices of {kappa >= 0, sum kappa = 1, sum kappa*y = 0} restricted to a
// support set are the matched one-against-one pairs; larger supports use
// their uniform interior point so every member stays strictly positive.
void collect_candidates(const FuzzyDataset& d, std::size_t max_support,
                        std::vector<Candidate>& out) {
  const std::size_t s = d.size();
  const std::size_t cap = std::min(max_support, s);

  auto emit = [&](const std::vector<std::size_t>& idx) {
    std::size_t pos = 0, neg = 0;
    for (std::size_t i : idx) (d.labels[i] > 0 ? pos : neg) += 1;
    if (pos == 0 || neg == 0) return;
    Candidate c;
    c.support = idx;
    c.kappas.assign(s, 0.0);
    for (std::size_t i : idx)
      c.kappas[i] = d.labels[i] > 0 ? 0.5 / static_cast<double>(pos)
                                    : 0.5 / static_cast<double>(neg);
    out.push_back(std::move(c));
  };

  std::vector<std::size_t> subset;
  const std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t start,
                                                                 std::size_t want) {
    if (want == 0) {
      emit(subset);
      return;
    }
    for (std::size_t i = start; i + want <= s; ++i) {
      subset.push_back(i);
      walk(i + 1, want - 1);
      subset.pop_back();
    }
  };
  for (std::size_t k = 2; k <= cap; ++k) walk(0, k);
}

}  // namespace

SvmSolution svm_solve(const FuzzyDataset& d, const SvmCaps& caps, const LevelGrid& grid) {
  const LevelGrid g = dataset_grid(d, grid);
  std::vector<Candidate> candidates;
  collect_candidates(d, caps.max_support, candidates);

  std::optional<SvmSolution> best;
  for (const Candidate& cand : candidates) {
    std::vector<double> lambda;
    try {
      lambda = svm_stationary_lambda(d, cand.kappas, g, caps.tol);
    } catch (const EmptyIntersection&) {
      continue;
    }
    std::optional<BiasSet> bias;
    try {
      bias = svm_bias_set(d, lambda, cand.support, g);
    } catch (const EmptyBias&) {
      continue;
    }
    const double ell = bias->top().midpoint();

    MarginReport margins = svm_margin_report(d, lambda, ell, g, caps.tol);
    bool ok = true;
    for (double m : margins.core_margins)
      if (m < 1.0 - caps.tol) {
        ok = false;
        break;
      }
    // complementary slackness: the chosen bias stays inside every support
    // window at every level up to rho_max
    for (std::size_t l = 0; ok && l < bias->intervals.size(); ++l) {
      if (!bias->intervals[l]) break;
      for (std::size_t i : cand.support) {
        const Interval w = bias_window(d, lambda, i, bias->grid[l]);
        if (!w.contains(ell, std::max(caps.tol, 1e-9))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;

    double objective = 0.0;
    for (double c : lambda) objective += c * c;
    objective *= 0.5;

    const bool better =
        !best || objective < best->objective - 1e-12 ||
        (objective < best->objective + 1e-12 &&
         std::lexicographical_compare(cand.support.begin(), cand.support.end(),
                                      best->support.begin(), best->support.end()));
    if (better) {
      best = SvmSolution{std::move(lambda),   cand.kappas, cand.support,
                         std::move(*bias),    ell,         objective,
                         std::move(margins)};
    }
  }
  if (!best) throw NoSeparator("no candidate support set produced an accepted separator");
  return *best;
}

}  // namespace fuzzopt
