#include "totreal/exact/roots.hpp"

#include <stdexcept>

namespace totreal {

namespace {

// Sign-change bisection for a simple root strictly inside (lo, hi).
DyadicInterval bisect_to_width(const IntPoly& f, Dyadic lo, Dyadic hi, int slo, long bits) {
  Dyadic target(mpz_class(1), -bits);
  while (hi - lo > target) {
    Dyadic m = (lo + hi).times_pow2(-1);
    int sm = f.sign_at_dyadic(m);
    if (sm == 0) return DyadicInterval(m);
    if (sm == slo)
      lo = m;
    else
      hi = m;
  }
  return {lo, hi};
}

struct Isolator {
  const IntPoly& f;
  const SturmChain& chain;
  long bits;
  std::vector<DyadicInterval> out;

  // Exactly one root of f lies in the open interval; endpoints are not roots.
  void emit(const Dyadic& lo, const Dyadic& hi) {
    int slo = f.sign_at_dyadic(lo);
    out.push_back(bisect_to_width(f, lo, hi, slo, bits));
  }

  // cnt roots of f lie in the open interval (lo, hi); endpoints are not roots.
  void split(const Dyadic& lo, const Dyadic& hi, long cnt) {
    if (cnt == 0) return;
    if (cnt == 1) {
      emit(lo, hi);
      return;
    }
    Dyadic m = (lo + hi).times_pow2(-1);
    if (f.sign_at_dyadic(m) != 0) {
      long left = chain.count_dyadic(lo, m);
      split(lo, m, left);
      split(m, hi, cnt - left);
      return;
    }
    // m is itself a root: carve out a punctured neighborhood around it
    Dyadic delta = (hi - lo).times_pow2(-2);
    Dyadic ml, mr;
    while (true) {
      ml = m - delta;
      mr = m + delta;
      if (f.sign_at_dyadic(ml) != 0 && f.sign_at_dyadic(mr) != 0 &&
          chain.count_dyadic(ml, mr) == 1)
        break;
      delta = delta.times_pow2(-1);
    }
    long left = chain.count_dyadic(lo, ml);
    split(lo, ml, left);
    out.push_back(DyadicInterval(m));
    split(mr, hi, cnt - left - 1);
  }
};

}  // namespace

std::vector<DyadicInterval> isolate_real_roots(const IntPoly& f, long precision_bits) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (f.degree() == 0) return {};
  SturmChain chain = SturmChain::build(f);
  if (!chain.squarefree()) throw std::invalid_argument("requires squarefree polynomial");
  long total = chain.count_all();
  if (total == 0) return {};
  mpz_class b = f.root_bound_pow2();
  Dyadic hi{b}, lo{mpz_class(-b)};
  Isolator iso{f, chain, precision_bits, {}};
  iso.split(lo, hi, total);
  return std::move(iso.out);
}

DyadicInterval refine_interval(const IntPoly& f, const DyadicInterval& iv, long bits) {
  if (iv.is_point()) return iv;
  Dyadic target(mpz_class(1), -bits);
  if (iv.width() <= target) return iv;
  int slo = f.sign_at_dyadic(iv.lo());
  int shi = f.sign_at_dyadic(iv.hi());
  if (slo != 0 && shi != 0 && slo != shi)
    return bisect_to_width(f, iv.lo(), iv.hi(), slo, bits);
  // No sign change visible (even-crossing bookkeeping would be wrong):
  // fall back to chain-counted bisection.
  SturmChain chain = SturmChain::build(f);
  Dyadic lo = iv.lo(), hi = iv.hi();
  while (hi - lo > target) {
    Dyadic m = (lo + hi).times_pow2(-1);
    int sm = f.sign_at_dyadic(m);
    if (sm == 0) return DyadicInterval(m);
    if (chain.count_dyadic(lo, m) == 1)
      hi = m;
    else
      lo = m;
  }
  return {lo, hi};
}

AlgReal AlgReal::of_mpq(const mpq_class& q) {
  AlgReal a;
  a.p = IntPoly({mpz_class(-q.get_num()), mpz_class(q.get_den())});
  a.iv = DyadicInterval::of_mpq(q, 64);
  return a;
}

void algreal_refine(AlgReal& a, long bits) { a.iv = refine_interval(a.p, a.iv, bits); }

int algreal_sign(AlgReal& a) {
  int s = a.iv.sign();
  if (s != 0) return s;
  if (a.iv.is_point()) return 0;  // dyadic point zero
  if (a.p.coeff(0) == 0) return 0;  // zero is a root of p inside the isolator
  long bits = 8;
  while (true) {
    algreal_refine(a, bits);
    s = a.iv.sign();
    if (s != 0) return s;
    bits *= 2;
  }
}

int algreal_cmp_dyadic(AlgReal& a, const Dyadic& d) {
  int c = a.iv.cmp_dyadic(d);
  if (c != 0) return c;
  if (a.iv.is_point()) return 0;
  if (a.p.sign_at_dyadic(d) == 0) return 0;  // d is the isolated root
  long bits = 8;
  while (true) {
    algreal_refine(a, bits);
    c = a.iv.cmp_dyadic(d);
    if (c != 0) return c;
    bits *= 2;
  }
}

int algreal_cmp_mpq(AlgReal& a, const mpq_class& q) {
  int c = a.iv.cmp_mpq(q);
  if (c != 0) return c;
  if (a.iv.is_point()) return Dyadic::cmp_mpq(a.iv.lo(), q);
  if (a.p.sign_at_mpq(q) == 0) return 0;
  long bits = 8;
  while (true) {
    algreal_refine(a, bits);
    c = a.iv.cmp_mpq(q);
    if (c != 0) return c;
    bits *= 2;
  }
}

int algreal_cmp(AlgReal& a, AlgReal& b) {
  if (a.iv.is_point()) return -algreal_cmp_dyadic(b, a.iv.lo());
  if (b.iv.is_point()) return algreal_cmp_dyadic(a, b.iv.lo());
  // Equality test up front: the values coincide iff a common root of
  // gcd(pa, pb) lies in the interval overlap (each isolator holds one root).
  {
    Dyadic lo = a.iv.lo() > b.iv.lo() ? a.iv.lo() : b.iv.lo();
    Dyadic hi = a.iv.hi() < b.iv.hi() ? a.iv.hi() : b.iv.hi();
    if (lo < hi) {
      IntPoly g = IntPoly::gcd(a.p, b.p);
      if (g.degree() >= 1 && SturmChain::build(g).count_dyadic(lo, hi) >= 1) return 0;
    }
  }
  long bits = 8;
  while (true) {
    if (a.iv.lo() > b.iv.hi()) return 1;
    if (a.iv.hi() < b.iv.lo()) return -1;
    algreal_refine(a, bits);
    algreal_refine(b, bits);
    if (a.iv.is_point()) return -algreal_cmp_dyadic(b, a.iv.lo());
    if (b.iv.is_point()) return algreal_cmp_dyadic(a, b.iv.lo());
    bits *= 2;
  }
}

int sign_at_algreal(const IntPoly& h, AlgReal& a) {
  if (h.is_zero()) return 0;
  if (a.iv.is_point()) return h.sign_at_dyadic(a.iv.lo());
  int s = h.interval_eval(a.iv).sign();
  if (s != 0) return s;
  IntPoly g = IntPoly::gcd(h, a.p);
  if (g.degree() >= 1) {
    SturmChain gc = SturmChain::build(g);
    if (gc.count_dyadic(a.iv.lo(), a.iv.hi()) >= 1) return 0;
  }
  long bits = 8;
  while (true) {
    algreal_refine(a, bits);
    if (a.iv.is_point()) return h.sign_at_dyadic(a.iv.lo());
    s = h.interval_eval(a.iv).sign();
    if (s != 0) return s;
    bits *= 2;
  }
}

double algreal_to_double(AlgReal& a) {
  algreal_refine(a, 64);
  return a.iv.to_double();
}

namespace {

// Newton divided differences; the samples must come from an integer polynomial.
IntPoly interpolate_integer_poly(const std::vector<mpq_class>& xs,
                                 const std::vector<mpq_class>& ys) {
  size_t m = xs.size();
  std::vector<mpq_class> dd = ys;
  for (size_t j = 1; j < m; ++j)
    for (size_t i = m - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<mpq_class> poly{dd[m - 1]};
  for (size_t i = m - 1; i-- > 0;) {
    poly.push_back(0);
    for (size_t k = poly.size() - 1; k > 0; --k) poly[k] = poly[k - 1] - xs[i] * poly[k];
    poly[0] = -xs[i] * poly[0] + dd[i];
  }
  std::vector<mpz_class> c(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) {
    if (poly[i].get_den() != 1) throw std::logic_error("resultant interpolation not integral");
    c[i] = poly[i].get_num();
  }
  return IntPoly(c);
}

}  // namespace

IntPoly sum_annihilator(const IntPoly& a, const IntPoly& b) {
  if (a.degree() < 1 || b.degree() < 1)
    throw std::invalid_argument("sum annihilator requires nonconstant polynomials");
  // R(t) = Res_y(a(y), b(t - y)) has degree deg(a)*deg(b) in t and vanishes
  // exactly at sums of roots.  Interpolate it from integer sample points.
  int n = a.degree() * b.degree();
  IntPoly bneg = b.negated_arg();
  std::vector<mpq_class> xs, ys;
  long t = 0;
  while (static_cast<int>(xs.size()) <= n) {
    IntPoly bt = bneg.shifted_arg(mpz_class(-t));  // b(t - y)
    xs.emplace_back(t);
    ys.emplace_back(IntPoly::resultant(a, bt));
    t = (t > 0) ? -t : -t + 1;
  }
  IntPoly r = interpolate_integer_poly(xs, ys);
  if (r.is_zero()) throw std::logic_error("sum annihilator vanished");
  return r.primitive_part();
}

AlgReal algreal_neg(const AlgReal& a) {
  AlgReal r;
  r.p = a.p.negated_arg();
  if (r.p.coeff(r.p.degree()) < 0) r.p = -r.p;
  r.iv = -a.iv;
  return r;
}

AlgReal algreal_abs(AlgReal& a) { return algreal_sign(a) >= 0 ? a : algreal_neg(a); }

namespace {

// The exact image value lies in `enclose(...)` and is a root of p.  Once the
// enclosure overlaps a single isolator the value must be the root it holds.
template <typename Refine, typename Enclose>
AlgReal locate_image(IntPoly p, Refine refine, Enclose enclose) {
  p = p.squarefree_part();
  if (p.coeff(p.degree()) < 0) p = -p;
  std::vector<DyadicInterval> roots = isolate_real_roots(p, 64);
  long bits = 64;
  while (true) {
    DyadicInterval s = enclose();
    int hits = 0;
    size_t hit = 0;
    for (size_t i = 0; i < roots.size(); ++i)
      if (!(roots[i].hi() < s.lo() || s.hi() < roots[i].lo())) {
        hit = i;
        ++hits;
      }
    if (hits == 1) return AlgReal{p, roots[hit]};
    refine(bits);
    bits *= 2;
  }
}

}  // namespace

AlgReal algreal_add(AlgReal a, AlgReal b) {
  if (a.iv.is_point() && b.iv.is_point())
    return AlgReal::of_mpq(a.iv.lo().to_mpq() + b.iv.lo().to_mpq());
  return locate_image(
      sum_annihilator(a.p, b.p),
      [&](long bits) {
        algreal_refine(a, bits);
        algreal_refine(b, bits);
      },
      [&] { return a.iv + b.iv; });
}

AlgReal algreal_square(AlgReal a) {
  if (a.iv.is_point()) {
    mpq_class v = a.iv.lo().to_mpq();
    return AlgReal::of_mpq(v * v);
  }
  // Annihilator of alpha^2: Res_y(p(y), y^2 - x), interpolated like the sum.
  int n = a.p.degree();
  std::vector<mpq_class> xs, ys;
  for (long t = 0; static_cast<int>(xs.size()) <= n; ++t) {
    xs.emplace_back(t);
    ys.emplace_back(IntPoly::resultant(a.p, IntPoly({mpz_class(-t), mpz_class(0), mpz_class(1)})));
  }
  IntPoly q = interpolate_integer_poly(xs, ys);
  return locate_image(
      q, [&](long bits) { algreal_refine(a, bits); }, [&] { return a.iv.square(); });
}

AlgReal algreal_scale_mpq(AlgReal a, const mpq_class& c) {
  if (c == 0) return AlgReal::of_mpq(0);
  if (a.iv.is_point()) return AlgReal::of_mpq(a.iv.lo().to_mpq() * c);
  // p(x * den / num) cleared of denominators annihilates c * alpha.
  const mpz_class& num = c.get_num();
  const mpz_class& den = c.get_den();
  int n = a.p.degree();
  std::vector<mpz_class> coeffs(n + 1);
  mpz_class dpow = 1, npow = 1;
  for (int i = 0; i <= n; ++i) coeffs[i] = a.p.coeff(i);
  for (int i = 0; i <= n; ++i) {
    coeffs[i] *= dpow;
    coeffs[n - i] *= npow;
    dpow *= den;
    npow *= num;
  }
  DyadicInterval cenc = DyadicInterval::of_mpq(c, 96);
  return locate_image(
      IntPoly(coeffs), [&](long bits) { algreal_refine(a, bits); },
      [&] { return cenc * a.iv; });
}

}  // namespace totreal
