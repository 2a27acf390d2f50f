#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "fuzzopt/errors.hpp"

namespace fuzzopt {

/// Comparison slack used by the order predicates unless overridden.
inline constexpr double kDefaultEps = 1e-9;

/// Closed bounded interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi)) throw DomainError("interval endpoints out of order");
  }

  static Interval point(double v) { return Interval(v, v); }

  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }

  bool contains(double v, double eps = 0.0) const {
    return lo - eps <= v && v <= hi + eps;
  }
  bool contains(const Interval& inner, double eps = 0.0) const {
    return lo - eps <= inner.lo && inner.hi <= hi + eps;
  }

  bool operator==(const Interval&) const = default;
};

inline Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo + b.lo, a.hi + b.hi);
}

/// Scalar multiple; a negative factor swaps the endpoints.
inline Interval scale(double t, const Interval& a) {
  const double x = t * a.lo;
  const double y = t * a.hi;
  return Interval(std::min(x, y), std::max(x, y));
}

/// Generalized Hukuhara difference of two intervals.
inline Interval gh_diff(const Interval& a, const Interval& b) {
  const double dlo = a.lo - b.lo;
  const double dhi = a.hi - b.hi;
  return Interval(std::min(dlo, dhi), std::max(dlo, dhi));
}

/// How far `v` lies outside the interval (0 when inside).
inline double excess(const Interval& a, double v) {
  if (v < a.lo) return a.lo - v;
  if (v > a.hi) return v - a.hi;
  return 0.0;
}

/**
 * Grid of membership levels: strictly increasing, first level 0, last level 1.
 * Levels closer than 1e-12 are treated as duplicates when merging.
 */
class LevelGrid {
 public:
  explicit LevelGrid(std::vector<double> levels) : levels_(std::move(levels)) {
    validate();
  }

  /// `count` evenly spaced levels from 0 to 1; count must be at least 2.
  static LevelGrid uniform(std::size_t count) {
    if (count < 2) throw DomainError("level grid needs at least 2 levels");
    std::vector<double> ls(count);
    for (std::size_t i = 0; i < count; ++i)
      ls[i] = static_cast<double>(i) / static_cast<double>(count - 1);
    ls.back() = 1.0;
    return LevelGrid(std::move(ls));
  }

  /// The library default: 11 evenly spaced levels {0, 0.1, ..., 1}.
  static const LevelGrid& standard() {
    static const LevelGrid g = uniform(11);
    return g;
  }

  LevelGrid merged_with(const std::vector<double>& extra) const {
    std::vector<double> ls = levels_;
    ls.insert(ls.end(), extra.begin(), extra.end());
    std::sort(ls.begin(), ls.end());
    std::vector<double> out;
    out.reserve(ls.size());
    for (double v : ls) {
      if (out.empty() || v - out.back() > 1e-12) out.push_back(v);
    }
    // keep the exact anchors no matter what near-duplicates were merged
    out.front() = 0.0;
    out.back() = 1.0;
    return LevelGrid(std::move(out));
  }

  static LevelGrid merged(const LevelGrid& a, const LevelGrid& b) {
    return a.merged_with(b.levels_);
  }

  const std::vector<double>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }
  double operator[](std::size_t i) const { return levels_[i]; }

  bool operator==(const LevelGrid&) const = default;

 private:
  void validate() const {
    if (levels_.size() < 2) throw DomainError("level grid needs at least 2 levels");
    if (levels_.front() != 0.0 || levels_.back() != 1.0)
      throw DomainError("level grid must start at 0 and end at 1");
    for (std::size_t i = 1; i < levels_.size(); ++i) {
      if (!(levels_[i - 1] < levels_[i]))
        throw DomainError("level grid must be strictly increasing");
    }
  }

  std::vector<double> levels_;
};

}  // namespace fuzzopt
