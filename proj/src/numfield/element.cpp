// Field element arithmetic over the integral basis plus the exact queries:
// trace/norm from cached tables, characteristic and minimal polynomials by
// Faddeev-LeVerrier, certified embedding intervals, house comparisons, and
// total positivity (interval prefilter, Sturm-count fallback).
#include <stdexcept>

#include "totreal/exact/sturm.hpp"
#include "totreal/numfield/field.hpp"

namespace totreal {

namespace {

// power-basis numerator polynomial and positive denominator of an element
std::pair<IntPoly, mpz_class> power_numer(const FieldElem& a) {
  auto pw = power_coords(a);
  mpz_class den = 1;
  for (const auto& q : pw) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> nc(pw.size());
  for (size_t i = 0; i < pw.size(); ++i) {
    mpq_class s = pw[i] * mpq_class(den);
    nc[i] = s.get_num();
  }
  return {IntPoly{std::move(nc)}, den};
}

// regular representation: row j = coordinates of a * w_j
QMat mult_matrix(const FieldElem& a) {
  const NumberField& K = *a.K;
  size_t d = static_cast<size_t>(K.degree);
  QMat m(d, std::vector<mpq_class>(d, mpq_class(0)));
  for (size_t i = 0; i < d; ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) m[j][k] += a.c[i] * mpq_class(K.mult[i][j][k]);
  }
  return m;
}

mpq_class qtrace(const QMat& m) {
  mpq_class t = 0;
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

IntPoly primitive_from_rational(const std::vector<mpq_class>& coeffs) {
  mpz_class den = 1;
  for (const auto& q : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> c(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    mpq_class s = coeffs[i] * mpq_class(den);
    c[i] = s.get_num();
  }
  IntPoly p{std::move(c)};
  return p.primitive_part();
}

void require_index(const FieldElem& a, int k) {
  if (k < 0 || k >= a.K->degree) throw std::out_of_range("embedding index");
}

}  // namespace

bool FieldElem::is_integral() const {
  for (const auto& q : c)
    if (q.get_den() != 1) return false;
  return true;
}

bool FieldElem::is_zero() const {
  for (const auto& q : c)
    if (q != 0) return false;
  return true;
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same_field(*this, o);
  return c == o.c;
}

void check_same_field(const FieldElem& a, const FieldElem& b) {
  if (a.K == b.K) return;
  if (a.K && b.K && a.K->min_poly.coeff_list() == b.K->min_poly.coeff_list() &&
      a.K->basis == b.K->basis)
    return;
  throw std::invalid_argument("elements from different fields");
}

FieldElem elem_zero(const NumberField& K) {
  return FieldElem{&K, std::vector<mpq_class>(static_cast<size_t>(K.degree), mpq_class(0))};
}

FieldElem elem_one(const NumberField& K) {
  auto e = elem_zero(K);
  e.c[0] = 1;  // basis element 0 is 1
  return e;
}

FieldElem elem_from_coords(const NumberField& K, std::vector<mpq_class> coords) {
  size_t d = static_cast<size_t>(K.degree);
  if (coords.size() > d) throw std::invalid_argument("coordinate length mismatch");
  coords.resize(d, mpq_class(0));
  for (auto& q : coords) q.canonicalize();
  return FieldElem{&K, std::move(coords)};
}

FieldElem elem_from_int_coords(const NumberField& K, const std::vector<mpz_class>& coords) {
  std::vector<mpq_class> q(coords.begin(), coords.end());
  return elem_from_coords(K, std::move(q));
}

FieldElem elem_from_rational(const NumberField& K, const mpq_class& q) {
  auto e = elem_zero(K);
  e.c[0] = q;
  return e;
}

FieldElem elem_from_power_coords(const NumberField& K, const std::vector<mpq_class>& power) {
  size_t d = static_cast<size_t>(K.degree);
  if (power.size() > d) throw std::invalid_argument("coordinate length mismatch");
  std::vector<mpq_class> v = power;
  v.resize(d, mpq_class(0));
  return FieldElem{&K, qvec_mat(v, K.basis_inv)};
}

std::vector<mpq_class> power_coords(const FieldElem& a) {
  return qvec_mat(a.c, a.K->basis);
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  check_same_field(a, b);
  FieldElem r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  check_same_field(a, b);
  FieldElem r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

FieldElem operator-(const FieldElem& a) {
  FieldElem r = a;
  for (auto& q : r.c) q = -q;
  return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  check_same_field(a, b);
  const NumberField& K = *a.K;
  size_t d = static_cast<size_t>(K.degree);
  FieldElem r = elem_zero(K);
  for (size_t i = 0; i < d; ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (b.c[j] == 0) continue;
      mpq_class ab = a.c[i] * b.c[j];
      for (size_t k = 0; k < d; ++k) r.c[k] += ab * mpq_class(K.mult[i][j][k]);
    }
  }
  return r;
}

FieldElem elem_scale(const FieldElem& a, const mpq_class& k) {
  FieldElem r = a;
  for (auto& q : r.c) q *= k;
  return r;
}

mpq_class trace(const FieldElem& a) {
  mpq_class t = 0;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != 0) t += a.c[i] * mpq_class(a.K->basis_trace[i]);
  return t;
}

mpq_class norm(const FieldElem& a) { return qmat_det(mult_matrix(a)); }

IntPoly char_poly(const FieldElem& a) {
  const NumberField& K = *a.K;
  size_t d = static_cast<size_t>(K.degree);
  QMat m = mult_matrix(a);
  QMat n = qmat_identity(d);
  std::vector<mpq_class> coeffs(d + 1);
  coeffs[d] = 1;
  for (size_t k = 1; k <= d; ++k) {
    QMat mk = qmat_mul(m, n);
    mpq_class ck = -qtrace(mk) / mpq_class(static_cast<long>(k));
    coeffs[d - k] = ck;
    n = mk;
    for (size_t i = 0; i < d; ++i) n[i][i] += ck;
  }
  return primitive_from_rational(coeffs);
}

IntPoly element_min_poly(const FieldElem& a) { return char_poly(a).squarefree_part(); }

bool is_proper(const FieldElem& a) { return element_min_poly(a).degree() == a.K->degree; }

DyadicInterval embedding_interval(const FieldElem& a, int k, long bits) {
  require_index(a, k);
  const NumberField& K = *a.K;
  auto [g, den] = power_numer(a);
  if (g.is_zero()) return DyadicInterval(Dyadic(0L));
  DyadicInterval root = K.embeddings[static_cast<size_t>(k)];
  long root_bits = 80;
  Dyadic target(mpz_class(1), -bits);
  while (true) {
    DyadicInterval val = g.interval_eval(root);
    mpq_class lo = val.lo().to_mpq() / den, hi = val.hi().to_mpq() / den;
    DyadicInterval out{Dyadic::lower_of_mpq(lo, bits + 8), Dyadic::upper_of_mpq(hi, bits + 8)};
    if (out.width() <= target || root.is_point()) return out;
    root = refine_interval(K.min_poly, root, root_bits);
    root_bits += 64;
  }
}

int embedding_sign(const FieldElem& a, int k) {
  require_index(a, k);
  const NumberField& K = *a.K;
  auto [g, den] = power_numer(a);
  if (g.is_zero()) return 0;
  AlgReal theta{K.min_poly, K.embeddings[static_cast<size_t>(k)]};
  return sign_at_algreal(g, theta);
}

double embedding_double(const FieldElem& a, int k) {
  return embedding_interval(a, k, 44).to_double();
}

namespace {

// certified interval filter from the cached basis embeddings; only usable
// for integral coordinates (exact dyadic scaling)
bool integral_embedding_filter(const FieldElem& a, int k, DyadicInterval& out) {
  if (!a.is_integral()) return false;
  const NumberField& K = *a.K;
  DyadicInterval acc{Dyadic(0L)};
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    DyadicInterval coef{Dyadic(a.c[i].get_num())};
    acc = acc + coef * K.emb_basis[i][static_cast<size_t>(k)];
  }
  out = acc;
  return true;
}

}  // namespace

int embedding_cmp_mpq(const FieldElem& a, int k, const mpq_class& t) {
  require_index(a, k);
  DyadicInterval iv;
  if (integral_embedding_filter(a, k, iv)) {
    int c = iv.cmp_mpq(t);
    if (c != 0) return c;
  }
  return embedding_sign(a - elem_from_rational(*a.K, t), k);
}

bool is_totally_positive(const FieldElem& a) {
  if (a.is_zero()) return false;
  const NumberField& K = *a.K;
  bool undecided = false;
  for (int k = 0; k < K.degree && !undecided; ++k) {
    DyadicInterval iv;
    if (!integral_embedding_filter(a, k, iv)) {
      undecided = true;
      break;
    }
    int s = iv.sign();
    if (s < 0) return false;
    if (s == 0) undecided = true;
  }
  if (!undecided) return true;
  IntPoly m = element_min_poly(a);
  SturmChain chain = SturmChain::build(m);
  return chain.count(XRat::of(mpq_class(0)), XRat::plus_infinity()) == m.degree();
}

bool strictly_dominates(const FieldElem& a, const FieldElem& b) {
  return is_totally_positive(a - b);
}

DyadicInterval house(const FieldElem& a, long precision_bits) {
  if (a.is_zero()) return DyadicInterval(Dyadic(0L));
  DyadicInterval best = embedding_interval(a, 0, precision_bits + 2).abs_val();
  for (int k = 1; k < a.K->degree; ++k)
    best = DyadicInterval::max_of(best, embedding_interval(a, k, precision_bits + 2).abs_val());
  return best;
}

int compare_house_mpq(const FieldElem& a, const mpq_class& t) {
  if (t < 0) throw std::invalid_argument("requires nonnegative bound");
  if (a.is_zero()) return t == 0 ? 0 : -1;
  for (long bits : {24L, 64L}) {
    int c = house(a, bits).cmp_mpq(t);
    if (c != 0) return c;
  }
  IntPoly m = element_min_poly(a);
  SturmChain chain = SturmChain::build(m);
  long above = chain.count(XRat::of(t), XRat::plus_infinity());
  long not_above_neg = chain.count(XRat::minus_infinity(), XRat::of(-t));
  long below = not_above_neg - (m.sign_at_mpq(-t) == 0 ? 1 : 0);
  if (above + below > 0) return 1;
  if (m.sign_at_mpq(t) == 0 || m.sign_at_mpq(-t) == 0) return 0;
  return -1;
}

std::string coords_str(const FieldElem& a) {
  std::string out;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (i) out += ",";
    out += a.c[i].get_str();
  }
  return out;
}

}  // namespace totreal
