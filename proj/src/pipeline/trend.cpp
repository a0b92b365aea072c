// Quartic trace minima relative to a quadratic subfield, with certified
// box-search minimality and log-log trend slopes.
#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "totreal/exact/factor.hpp"
#include "totreal/latenum/boxes.hpp"
#include "totreal/latenum/gram.hpp"
#include "totreal/pipeline/classify.hpp"

namespace totreal {

namespace {

mpz_class isqrt_up(const mpz_class& n) {
  mpz_class r = sqrt(n);
  if (r * r < n) ++r;
  return r;
}

// The square root of d in K with positive largest embedding, or a throw
// when K has none.
FieldElem find_sqrt(const NumberField& K, const mpz_class& d) {
  std::optional<FieldElem> y = field_sqrt(K, d);
  if (!y) throw std::invalid_argument("family member lacks the required square root");
  return *y;
}

// Is beta a rational combination of 1 and y?  Exact 2x2 solve plus full
// verification over every coordinate.
struct SpanTest {
  FieldElem one, y;
  int i = -1, j = -1;  // coordinate positions with an invertible 2x2 minor
  mpq_class det;

  SpanTest(const NumberField& K, FieldElem yy)
      : one(elem_one(K)), y(std::move(yy)) {
    for (int p = 0; p < K.degree && i < 0; ++p)
      for (int q = p + 1; q < K.degree && i < 0; ++q) {
        mpq_class dd = one.c[p] * y.c[q] - one.c[q] * y.c[p];
        if (dd != 0) {
          i = p;
          j = q;
          det = dd;
        }
      }
    if (i < 0) throw std::logic_error("degenerate quadratic span");
  }

  bool contains(const FieldElem& beta) const {
    mpq_class lam = (beta.c[i] * y.c[j] - beta.c[j] * y.c[i]) / det;
    mpq_class mu = (one.c[i] * beta.c[j] - one.c[j] * beta.c[i]) / det;
    for (size_t t = 0; t < beta.c.size(); ++t)
      if (beta.c[t] != lam * one.c[t] + mu * y.c[t]) return false;
    return true;
  }
};

FieldElem shift_positive_elem(const FieldElem& a) {
  FieldElem x = a;
  FieldElem one = elem_one(*a.K);
  mpq_class guard = house(a, 24).hi().to_mpq() + 2;
  for (mpz_class k = 0; mpq_class(k) <= guard; ++k) {
    if (is_totally_positive(x)) return x;
    x = x + one;
  }
  throw std::logic_error("shift failed to reach the positive cone");
}

double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = 0, my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  double num = 0, den = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

}  // namespace

TrendTable quartic_trend(const mpz_class& d, const std::vector<NumberField>& family) {
  if (family.size() < 5) throw std::invalid_argument("insufficient sample");
  TrendTable table;
  table.d = d;
  for (const NumberField& K : family) {
    if (K.degree != 4) throw std::invalid_argument("requires quartic fields");
    SpanTest span(K, find_sqrt(K, d));

    // Seed both minima with reduced-basis vectors outside the subfield.
    mpq_class seed_trace = -1, seed_sq = -1;
    for (const FieldElem& b : minkowski_reduced_basis(K)) {
      if (span.contains(b)) continue;
      mpq_class t = std::min(trace(shift_positive_elem(b)),
                             trace(shift_positive_elem(-b)));
      if (seed_trace < 0 || t < seed_trace) seed_trace = t;
      mpq_class sq = trace(b * b);
      if (seed_sq < 0 || sq < seed_sq) seed_sq = sq;
    }
    if (seed_trace < 0) throw std::logic_error("degenerate quadratic span");

    // Least trace of a totally positive integer outside Q(sqrt(d)).  A
    // competitor strictly below the seed trace has every embedding inside
    // (0, seed), so the one-sided box is exhaustive.
    mpq_class t_a = seed_trace;
    BoxBounds cone = one_sided_box(std::vector<mpq_class>(4, seed_trace));
    for (const FieldElem& x : enumerate_box(K, cone)) {
      if (x.is_zero() || span.contains(x)) continue;
      if (!is_totally_positive(x)) continue;
      t_a = std::min(t_a, trace(x));
    }

    // Least trace of a square outside the subfield: an improver beta has
    // sigma_i(beta)^2 <= trace(beta^2) <= seed, bounding its house.
    mpq_class t_b = seed_sq;
    mpz_class seed_floor(seed_sq.get_num() / seed_sq.get_den());
    mpq_class radius(isqrt_up(seed_floor) + 1);
    BoxBounds ball = symmetric_box(std::vector<mpq_class>(4, radius));
    for (const FieldElem& x : enumerate_box(K, ball)) {
      if (x.is_zero() || span.contains(x)) continue;
      t_b = std::min(t_b, trace(x * x));
    }

    TrendRow row;
    row.label = field_label(K.degree, K.disc, K.min_poly);
    row.disc = K.disc;
    row.t_a = t_a.get_num();
    row.t_b = t_b.get_num();
    table.rows.push_back(std::move(row));
  }

  std::sort(table.rows.begin(), table.rows.end(),
            [](const TrendRow& a, const TrendRow& b) { return a.disc < b.disc; });
  std::vector<double> lx, la, lb;
  for (const TrendRow& r : table.rows) {
    lx.push_back(std::log(r.disc.get_d()));
    la.push_back(std::log(r.t_a.get_d()));
    lb.push_back(std::log(r.t_b.get_d()));
  }
  table.slope_ta = lsq_slope(lx, la);
  table.slope_tb = lsq_slope(lx, lb);
  return table;
}

std::vector<NumberField> quartic_trend_family(const mpz_class& d, int count) {
  std::vector<NumberField> out;
  std::set<std::vector<mpz_class>> seen;
  for (mpz_class m = 2; static_cast<int>(out.size()) < count && m < 1000; ++m) {
    if (m == d) continue;
    if (square_part(m) != 1) continue;
    mpz_class prod = d * m;
    mpz_class third = prod / (square_part(prod) * square_part(prod));
    std::vector<mpz_class> triple{d, m, third};
    std::sort(triple.begin(), triple.end());
    if (!seen.insert(triple).second) continue;
    out.push_back(biquadratic_compositum(d, m));
  }
  if (static_cast<int>(out.size()) < count)
    throw std::logic_error("family construction exhausted its window");
  std::sort(out.begin(), out.end(),
            [](const NumberField& a, const NumberField& b) { return a.disc < b.disc; });
  return out;
}

}  // namespace totreal
