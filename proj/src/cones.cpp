#include "fuzzopt/cones.hpp"

#include <cmath>
#include <mutex>
#include <thread>

#include "fuzzopt/rng.hpp"

namespace fuzzopt {

namespace {

bool is_zero_vector(const std::vector<double>& v) {
  for (double c : v)
    if (c != 0.0) return false;
  return true;
}

}  // namespace

bool in_descent_cone(const FuzzyExpr& e, const std::vector<double>& x,
                     const std::vector<double>& tau, const LevelGrid& grid,
                     double eps) {
  if (is_zero_vector(tau)) return false;
  return compare(directional(e, x, tau, grid), FuzzyNumber::zero(), eps).strict_all;
}

bool in_feasible_cone_box(const Box& box, const std::vector<double>& x,
                          const std::vector<double>& tau, double eps) {
  const std::size_t n = box.lo.size();
  if (box.hi.size() != n || x.size() != n || tau.size() != n)
    throw DimensionMismatch("box, point and direction arities must agree");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(box.lo[i] <= box.hi[i])) throw DomainError("box bounds out of order");
    if (x[i] < box.lo[i] - eps || x[i] > box.hi[i] + eps)
      throw InfeasiblePoint("point lies outside the box");
  }
  if (is_zero_vector(tau)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] <= box.lo[i] + eps && tau[i] < 0.0) return false;
    if (x[i] >= box.hi[i] - eps && tau[i] > 0.0) return false;
  }
  return true;
}

bool in_linearized_feasible_cone(const std::vector<FuzzyExpr>& constraints,
                                 const std::vector<double>& x,
                                 const std::vector<double>& tau, double tol_active,
                                 const LevelGrid& grid, double eps) {
  std::vector<bool> active(constraints.size(), false);
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    const CutFamily y = constraints[j].eval_family(x, grid);
    for (const Interval& iv : y.cuts())
      if (iv.hi > eps)
        throw InfeasiblePoint("point violates constraint " + std::to_string(j));
    active[j] = is_zero(y, tol_active);
  }
  if (is_zero_vector(tau)) return false;
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    if (!active[j]) continue;
    if (!compare(directional(constraints[j], x, tau, grid), FuzzyNumber::zero(), eps)
             .strict_all)
      return false;
  }
  return true;
}

namespace {

bool in_both_cones(const FuzzyExpr& e, const FeasibleSet& set,
                   const std::vector<double>& x, const std::vector<double>& tau,
                   const LevelGrid& grid, double eps) {
  const bool feasible = std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Box>) {
          return in_feasible_cone_box(s, x, tau, eps);
        } else {
          return in_linearized_feasible_cone(s.constraints, x, tau, 1e-8, grid, eps);
        }
      },
      set);
  return feasible && in_descent_cone(e, x, tau, grid, eps);
}

}  // namespace

ConeSampleReport intersection_empty_sampled(const FuzzyExpr& e, const FeasibleSet& set,
                                            const std::vector<double>& x,
                                            std::size_t trials, std::uint64_t rng_seed,
                                            const LevelGrid& grid, double eps,
                                            unsigned threads) {
  if (trials < 1) throw DomainError("direction sampling needs at least one trial");
  const std::size_t n = e.dimension();

  // Validate the base point up front so worker threads cannot throw.
  in_both_cones(e, set, x, std::vector<double>(n, 0.0), grid, eps);

  if (threads <= 1) {
    Rng rng(rng_seed);
    for (std::size_t k = 0; k < trials; ++k) {
      std::vector<double> tau = rng.unit_vector(n);
      if (in_both_cones(e, set, x, tau, grid, eps))
        return ConeSampleReport{false, std::move(tau), k + 1};
    }
    return ConeSampleReport{true, std::nullopt, trials};
  }

  // Split the trial range; each chunk draws from its own seeded stream. The
  // earliest counterexample by global trial index wins.
  const unsigned nthreads = std::min<unsigned>(threads, 16);
  const std::size_t chunk = (trials + nthreads - 1) / nthreads;
  std::mutex mu;
  std::size_t best_index = trials;
  std::vector<double> best_tau;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < nthreads; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t begin = static_cast<std::size_t>(w) * chunk;
      const std::size_t end = std::min(trials, begin + chunk);
      Rng rng(rng_seed + 0x9e3779b97f4a7c15ull * (w + 1));
      for (std::size_t k = begin; k < end; ++k) {
        std::vector<double> tau = rng.unit_vector(n);
        if (in_both_cones(e, set, x, tau, grid, eps)) {
          std::lock_guard<std::mutex> lk(mu);
          if (k < best_index) {
            best_index = k;
            best_tau = std::move(tau);
          }
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (best_index < trials)
    return ConeSampleReport{false, std::move(best_tau), best_index + 1};
  return ConeSampleReport{true, std::nullopt, trials};
}

}  // namespace fuzzopt
