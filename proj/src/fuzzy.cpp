#include "fuzzopt/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <type_traits>

namespace fuzzopt {

namespace {

void check_level(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw DomainError("cut level must lie in [0, 1]");
}

// Endpoint formulas on validated shapes can invert by an ulp near the core.
Interval make_cut(double lo, double hi) {
  return lo <= hi ? Interval(lo, hi) : Interval(hi, lo);
}

// Snap cuts to exact nestedness; violations beyond `tol` are an error.
std::vector<Interval> monotonize(std::vector<Interval> cuts, double tol) {
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    double lo = cuts[i].lo;
    double hi = cuts[i].hi;
    if (lo < cuts[i - 1].lo - tol || hi > cuts[i - 1].hi + tol)
      throw NotAFuzzyNumber("cuts are not nested");
    lo = std::max(lo, cuts[i - 1].lo);
    hi = std::min(hi, cuts[i - 1].hi);
    if (lo > hi) {
      if (lo - hi > tol) throw NotAFuzzyNumber("cut collapsed past its bounds");
      lo = hi = 0.5 * (lo + hi);
    }
    cuts[i] = Interval(lo, hi);
  }
  return cuts;
}

}  // namespace

FuzzyNumber FuzzyNumber::triangular(double a, double b, double c) {
  if (!(a <= b && b <= c)) throw DomainError("triangular number needs a <= b <= c");
  return FuzzyNumber(Triangular{a, b, c});
}

FuzzyNumber FuzzyNumber::trapezoidal(double a, double b, double c, double d) {
  if (!(a <= b && b <= c && c <= d))
    throw DomainError("trapezoidal number needs a <= b <= c <= d");
  return FuzzyNumber(Trapezoidal{a, b, c, d});
}

FuzzyNumber FuzzyNumber::sampled(LevelGrid grid, std::vector<Interval> cuts) {
  if (cuts.size() != grid.size())
    throw DimensionMismatch("sampled fuzzy number needs one cut per grid level");
  std::vector<Interval> snapped = monotonize(std::move(cuts), 1e-12);
  return FuzzyNumber(Sampled{std::move(grid), std::move(snapped)});
}

Interval FuzzyNumber::cut(double rho) const {
  check_level(rho);
  return std::visit(
      [rho](const auto& s) -> Interval {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Triangular>) {
          return make_cut(s.a + (s.b - s.a) * rho, s.c - (s.c - s.b) * rho);
        } else if constexpr (std::is_same_v<S, Trapezoidal>) {
          return make_cut(s.a + (s.b - s.a) * rho, s.d - (s.d - s.c) * rho);
        } else {
          const auto& ls = s.grid.levels();
          if (rho <= ls.front()) return s.cuts.front();
          if (rho >= ls.back()) return s.cuts.back();
          auto it = std::upper_bound(ls.begin(), ls.end(), rho);
          const std::size_t k = static_cast<std::size_t>(it - ls.begin());
          const double t = (rho - ls[k - 1]) / (ls[k] - ls[k - 1]);
          return make_cut(s.cuts[k - 1].lo + t * (s.cuts[k].lo - s.cuts[k - 1].lo),
                          s.cuts[k - 1].hi + t * (s.cuts[k].hi - s.cuts[k - 1].hi));
        }
      },
      shape_);
}

std::vector<double> FuzzyNumber::knots() const {
  return std::visit(
      [](const auto& s) -> std::vector<double> {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Sampled>) {
          return s.grid.levels();
        } else {
          return {0.0, 1.0};
        }
      },
      shape_);
}

CutFamily::CutFamily(LevelGrid grid, std::vector<Interval> cuts)
    : grid_(std::move(grid)), cuts_(std::move(cuts)) {
  if (cuts_.size() != grid_.size())
    throw DimensionMismatch("cut family needs one interval per grid level");
}

CutFamily CutFamily::of(const FuzzyNumber& m, const LevelGrid& grid) {
  std::vector<Interval> cs;
  cs.reserve(grid.size());
  for (double rho : grid.levels()) cs.push_back(m.cut(rho));
  return CutFamily(grid, std::move(cs));
}

CutFamily CutFamily::zeros(const LevelGrid& grid) {
  return CutFamily(grid, std::vector<Interval>(grid.size()));
}

Interval CutFamily::cut(double rho) const {
  check_level(rho);
  const auto& ls = grid_.levels();
  if (rho <= ls.front()) return cuts_.front();
  if (rho >= ls.back()) return cuts_.back();
  auto it = std::upper_bound(ls.begin(), ls.end(), rho);
  const std::size_t k = static_cast<std::size_t>(it - ls.begin());
  const double t = (rho - ls[k - 1]) / (ls[k] - ls[k - 1]);
  return make_cut(cuts_[k - 1].lo + t * (cuts_[k].lo - cuts_[k - 1].lo),
                  cuts_[k - 1].hi + t * (cuts_[k].hi - cuts_[k - 1].hi));
}

CutFamily CutFamily::resampled(const LevelGrid& g) const {
  if (g == grid_) return *this;
  std::vector<Interval> cs;
  cs.reserve(g.size());
  for (double rho : g.levels()) cs.push_back(cut(rho));
  return CutFamily(g, std::move(cs));
}

bool CutFamily::nested(double tol) const {
  for (std::size_t i = 1; i < cuts_.size(); ++i) {
    if (cuts_[i].lo < cuts_[i - 1].lo - tol) return false;
    if (cuts_[i].hi > cuts_[i - 1].hi + tol) return false;
  }
  return true;
}

FuzzyVector::FuzzyVector(std::vector<FuzzyNumber> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw DimensionMismatch("fuzzy vector must be nonempty");
}

FuzzyMatrix::FuzzyMatrix(std::size_t rows, std::size_t cols,
                         std::vector<FuzzyNumber> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ < 1 || cols_ < 1) throw DimensionMismatch("fuzzy matrix must be nonempty");
  if (entries_.size() != rows_ * cols_)
    throw DimensionMismatch("fuzzy matrix entry count does not match its shape");
}

FuzzyMatrix FuzzyMatrix::from_rows(const std::vector<std::vector<FuzzyNumber>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw DimensionMismatch("fuzzy matrix must be nonempty");
  const std::size_t cols = rows.front().size();
  std::vector<FuzzyNumber> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("fuzzy matrix rows have uneven length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FuzzyMatrix(rows.size(), cols, std::move(flat));
}

FuzzyVector FuzzyMatrix::row(std::size_t i) const {
  std::vector<FuzzyNumber> v;
  v.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return FuzzyVector(std::move(v));
}

FuzzyVector FuzzyMatrix::column(std::size_t j) const {
  std::vector<FuzzyNumber> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return FuzzyVector(std::move(v));
}

// --- arithmetic ---

namespace {

// Endpoints of every parametric shape are affine on [0,1], so sums stay
// parametric whenever both operands are.
struct TrapView {
  double a, b, c, d;
  bool tri;
};

std::optional<TrapView> trap_view(const FuzzyNumber& m) {
  if (const auto* t = std::get_if<Triangular>(&m.shape()))
    return TrapView{t->a, t->b, t->b, t->c, true};
  if (const auto* t = std::get_if<Trapezoidal>(&m.shape()))
    return TrapView{t->a, t->b, t->c, t->d, false};
  return std::nullopt;
}

}  // namespace

FuzzyNumber add(const FuzzyNumber& m, const FuzzyNumber& l) {
  const auto mv = trap_view(m);
  const auto lv = trap_view(l);
  if (mv && lv) {
    if (mv->tri && lv->tri)
      return FuzzyNumber::triangular(mv->a + lv->a, mv->b + lv->b, mv->d + lv->d);
    return FuzzyNumber::trapezoidal(mv->a + lv->a, mv->b + lv->b, mv->c + lv->c,
                                    mv->d + lv->d);
  }
  LevelGrid g = LevelGrid(std::vector<double>{0.0, 1.0}).merged_with(m.knots());
  g = g.merged_with(l.knots());
  std::vector<Interval> cs;
  cs.reserve(g.size());
  for (double rho : g.levels()) cs.push_back(m.cut(rho) + l.cut(rho));
  return FuzzyNumber::sampled(std::move(g), std::move(cs));
}

CutFamily add(const CutFamily& a, const CutFamily& b) {
  const LevelGrid g = LevelGrid::merged(a.grid(), b.grid());
  const CutFamily ra = a.resampled(g);
  const CutFamily rb = b.resampled(g);
  std::vector<Interval> cs;
  cs.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) cs.push_back(ra.at(i) + rb.at(i));
  return CutFamily(g, std::move(cs));
}

FuzzyNumber scalar_mul(double t, const FuzzyNumber& m) {
  if (t == 0.0) return FuzzyNumber::zero();
  return std::visit(
      [t](const auto& s) -> FuzzyNumber {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Triangular>) {
          return t > 0 ? FuzzyNumber::triangular(t * s.a, t * s.b, t * s.c)
                       : FuzzyNumber::triangular(t * s.c, t * s.b, t * s.a);
        } else if constexpr (std::is_same_v<S, Trapezoidal>) {
          return t > 0 ? FuzzyNumber::trapezoidal(t * s.a, t * s.b, t * s.c, t * s.d)
                       : FuzzyNumber::trapezoidal(t * s.d, t * s.c, t * s.b, t * s.a);
        } else {
          std::vector<Interval> cs;
          cs.reserve(s.cuts.size());
          for (const Interval& iv : s.cuts) cs.push_back(scale(t, iv));
          return FuzzyNumber::sampled(s.grid, std::move(cs));
        }
      },
      m.shape());
}

CutFamily scalar_mul(double t, const CutFamily& a) {
  std::vector<Interval> cs;
  cs.reserve(a.size());
  for (const Interval& iv : a.cuts()) cs.push_back(scale(t, iv));
  return CutFamily(a.grid(), std::move(cs));
}

CutFamily gh_difference(const FuzzyNumber& m, const FuzzyNumber& l,
                        const LevelGrid& grid) {
  LevelGrid g = grid.merged_with(m.knots()).merged_with(l.knots());
  std::vector<Interval> cs;
  cs.reserve(g.size());
  for (double rho : g.levels()) cs.push_back(gh_diff(m.cut(rho), l.cut(rho)));
  return CutFamily(std::move(g), std::move(cs));
}

FuzzyNumber as_fuzzy_number(const CutFamily& f, double tol) {
  if (tol < 0) throw DomainError("tolerance must be nonnegative");
  if (!f.nested(tol)) throw NotAFuzzyNumber("cut family is not nested within tolerance");
  return FuzzyNumber::sampled(f.grid(), f.cuts());
}

double distance(const FuzzyNumber& m, const FuzzyNumber& l) {
  LevelGrid g = LevelGrid::standard().merged_with(m.knots()).merged_with(l.knots());
  double d = 0.0;
  for (double rho : g.levels()) {
    const Interval a = m.cut(rho);
    const Interval b = l.cut(rho);
    d = std::max(d, std::max(std::abs(a.lo - b.lo), std::abs(a.hi - b.hi)));
  }
  return d;
}

// --- order and membership ---

OrderResult compare(const CutFamily& a, const CutFamily& b, double eps) {
  const LevelGrid g = LevelGrid::merged(a.grid(), b.grid());
  const CutFamily ra = a.resampled(g);
  const CutFamily rb = b.resampled(g);
  OrderResult r{true, false, true};
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Interval& x = ra.at(i);
    const Interval& y = rb.at(i);
    if (!(x.lo <= y.lo + eps && x.hi <= y.hi + eps)) r.weak_all = false;
    if (x.lo < y.lo || x.hi < y.hi) r.strict_some = true;
    if (!(x.lo < y.lo && x.hi < y.hi)) r.strict_all = false;
  }
  return r;
}

OrderResult compare(const FuzzyNumber& m, const FuzzyNumber& l, double eps) {
  LevelGrid g = LevelGrid::standard().merged_with(m.knots()).merged_with(l.knots());
  return compare(CutFamily::of(m, g), CutFamily::of(l, g), eps);
}

OrderResult compare(const CutFamily& a, const FuzzyNumber& l, double eps) {
  const LevelGrid g = a.grid().merged_with(l.knots());
  return compare(a.resampled(g), CutFamily::of(l, g), eps);
}

OrderResult compare(const FuzzyNumber& m, const CutFamily& b, double eps) {
  const LevelGrid g = b.grid().merged_with(m.knots());
  return compare(CutFamily::of(m, g), b.resampled(g), eps);
}

bool contains_zero(const CutFamily& f, double eps) {
  for (const Interval& iv : f.cuts())
    if (!contains_zero(iv, eps)) return false;
  return true;
}

bool contains_zero(const FuzzyNumber& m, double eps) {
  // nested cuts: membership at the core implies membership everywhere
  return contains_zero(m.core(), eps);
}

std::vector<bool> contains_zero_per_level(const CutFamily& f, double eps) {
  std::vector<bool> out;
  out.reserve(f.size());
  for (const Interval& iv : f.cuts()) out.push_back(contains_zero(iv, eps));
  return out;
}

bool is_zero(const CutFamily& f, double eps) {
  for (const Interval& iv : f.cuts())
    if (std::abs(iv.lo) > eps || std::abs(iv.hi) > eps) return false;
  return true;
}

CutFamily dot(const std::vector<double>& tau, const FuzzyVector& u,
              const LevelGrid& grid) {
  if (tau.size() != u.size())
    throw DimensionMismatch("dot product dimensions do not match");
  LevelGrid g = grid;
  for (const FuzzyNumber& m : u.components()) g = g.merged_with(m.knots());
  std::vector<Interval> cs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    Interval acc(0.0, 0.0);
    for (std::size_t j = 0; j < tau.size(); ++j)
      acc = acc + scale(tau[j], u[j].cut(g[i]));
    cs[i] = acc;
  }
  return CutFamily(std::move(g), std::move(cs));
}

}  // namespace fuzzopt
