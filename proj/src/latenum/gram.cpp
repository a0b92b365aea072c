// Smallest eigenvalues via Sturm isolation of the characteristic polynomial,
// the Rayleigh constant, and greedy l1-reduced bases with exact tie handling
// through algebraic-real arithmetic.
#include "totreal/latenum/gram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "totreal/exact/sturm.hpp"
#include "totreal/latenum/boxes.hpp"

namespace totreal {

namespace {

IntPoly primitive_from_rational(const std::vector<mpq_class>& c) {
  mpz_class l = 1;
  for (const mpq_class& q : c)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> z(c.size());
  for (size_t i = 0; i < c.size(); ++i) z[i] = c[i].get_num() * (l / c[i].get_den());
  return IntPoly(z).primitive_part();
}

void check_symmetric(const QMat& m) {
  size_t r = m.size();
  if (r == 0) throw std::invalid_argument("matrix not symmetric");
  for (size_t i = 0; i < r; ++i) {
    if (m[i].size() != r) throw std::invalid_argument("matrix not symmetric");
    for (size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) throw std::invalid_argument("matrix not symmetric");
  }
}

// integer polynomial with the same roots as det(xI - m)
IntPoly charpoly_primitive(const QMat& m) {
  size_t r = m.size();
  QMat n = qmat_identity(r);
  std::vector<mpq_class> coeffs(r + 1);
  coeffs[r] = 1;
  for (size_t k = 1; k <= r; ++k) {
    QMat mk = qmat_mul(m, n);
    mpq_class tr = 0;
    for (size_t i = 0; i < r; ++i) tr += mk[i][i];
    mpq_class ck = -tr / mpq_class(static_cast<long>(k));
    coeffs[r - k] = ck;
    n = mk;
    for (size_t i = 0; i < r; ++i) n[i][i] += ck;
  }
  return primitive_from_rational(coeffs);
}

// isolating interval for sigma_k(x) among the roots of its minimal polynomial
AlgReal embedding_algreal(const FieldElem& x, int k) {
  IntPoly ann = element_min_poly(x);
  SturmChain chain = SturmChain::build(ann);
  long bits = 48;
  while (true) {
    DyadicInterval iv = embedding_interval(x, k, bits);
    if (iv.is_point()) return AlgReal{ann, iv};
    if (ann.sign_at_dyadic(iv.lo()) != 0 && ann.sign_at_dyadic(iv.hi()) != 0 &&
        chain.count_dyadic(iv.lo(), iv.hi()) == 1)
      return AlgReal{ann, iv};
    bits *= 2;
  }
}

}  // namespace

DyadicInterval smallest_eigenvalue(const QMat& m, long precision_bits) {
  check_symmetric(m);
  IntPoly p = charpoly_primitive(m).squarefree_part();
  if (p.coeff(p.degree()) < 0) p = -p;
  return isolate_real_roots(p, precision_bits).front();
}

GramEmbeddings make_gram_embeddings(const QMat& m, long precision_bits) {
  check_symmetric(m);
  for (size_t k = 1; k <= m.size(); ++k) {
    QMat lead(k, std::vector<mpq_class>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
    if (qmat_det(lead) <= 0) throw std::domain_error("not positive definite");
  }
  GramEmbeddings g;
  g.m = m;
  g.per_embedding = {m};
  long bits = precision_bits;
  g.lambda_min = smallest_eigenvalue(m, bits);
  while (!(g.lambda_min.lo() > Dyadic(0L))) {
    bits *= 2;
    g.lambda_min = smallest_eigenvalue(m, bits);
  }
  return g;
}

DyadicInterval rayleigh_constant(const GramEmbeddings& g) {
  return invert_enclosure(g.lambda_min, 64);
}

AlgReal house_algreal(const FieldElem& x) {
  if (x.is_zero()) return AlgReal::of_mpq(0);
  const NumberField& K = *x.K;
  AlgReal best = AlgReal::of_mpq(0);
  for (int k = 0; k < K.degree; ++k) {
    AlgReal e = embedding_algreal(x, k);
    AlgReal a = algreal_abs(e);
    if (algreal_cmp(a, best) > 0) best = a;
  }
  return best;
}

DyadicInterval norm1_interval(const FieldElem& x, long precision_bits) {
  const NumberField& K = *x.K;
  DyadicInterval acc{Dyadic(0L)};
  for (int k = 0; k < K.degree; ++k)
    acc = acc + embedding_interval(x, k, precision_bits + 3).abs_val();
  return acc;
}

AlgReal norm1_algreal(const FieldElem& x) {
  const NumberField& K = *x.K;
  AlgReal acc = AlgReal::of_mpq(0);
  for (int k = 0; k < K.degree; ++k) {
    AlgReal e = embedding_algreal(x, k);
    acc = algreal_add(acc, algreal_abs(e));
  }
  return acc;
}

namespace {

// |difference of l1 lengths| of integral elements is an algebraic integer of
// degree at most d! whose conjugates are all bounded by M, so any nonzero
// value is at least M^(1-d!); an interval tighter than that deciding nothing
// proves exact equality.
mpq_class norm1_separation(int degree, const mpq_class& conj_bound) {
  unsigned long n = 1;
  for (int i = 2; i <= degree; ++i) n *= static_cast<unsigned long>(i);
  mpq_class m = conj_bound < 2 ? mpq_class(2) : conj_bound;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), m.get_den().get_mpz_t(), n - 1);
  mpz_pow_ui(den.get_mpz_t(), m.get_num().get_mpz_t(), n - 1);
  mpq_class sep(num, den);
  sep.canonicalize();
  return sep;
}

}  // namespace

int norm1_cmp(const FieldElem& a, const FieldElem& b) {
  check_same_field(a, b);
  if (!a.is_integral() || !b.is_integral()) {
    // clear denominators: lengths scale linearly and keep their order
    mpz_class l = 1;
    for (const mpq_class& q : a.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    for (const mpq_class& q : b.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    return norm1_cmp(elem_scale(a, mpq_class(l)), elem_scale(b, mpq_class(l)));
  }
  for (long bits : {48L, 96L}) {
    DyadicInterval da = norm1_interval(a, bits);
    DyadicInterval db = norm1_interval(b, bits);
    if (da.lo() > db.hi()) return 1;
    if (da.hi() < db.lo()) return -1;
  }
  mpq_class bound =
      (norm1_interval(a, 16).hi() + norm1_interval(b, 16).hi()).to_mpq() + 2;
  mpq_class sep = norm1_separation(a.K->degree, bound);
  long bits = 192;
  while (true) {
    DyadicInterval diff = norm1_interval(a, bits) - norm1_interval(b, bits);
    int s = diff.sign();
    if (s != 0) return s;
    if (Dyadic::cmp_mpq(diff.width(), sep) < 0) return 0;
    bits *= 2;
  }
}

namespace {

int norm1_cmp_mpq(const FieldElem& x, const mpq_class& t) {
  if (!x.is_integral()) {
    mpz_class l = 1;
    for (const mpq_class& q : x.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    return norm1_cmp_mpq(elem_scale(x, mpq_class(l)), t * l);
  }
  for (long bits : {48L, 96L}) {
    int c = norm1_interval(x, bits).cmp_mpq(t);
    if (c != 0) return c;
  }
  // scale by den(t): den*||x|| - num is an algebraic integer again
  mpq_class bound = (norm1_interval(x, 16).hi().to_mpq() + abs(t) + 2) * t.get_den();
  mpq_class sep = norm1_separation(x.K->degree, bound) / t.get_den();
  long bits = 192;
  while (true) {
    DyadicInterval iv = norm1_interval(x, bits);
    int c = iv.cmp_mpq(t);
    if (c != 0) return c;
    if (Dyadic::cmp_mpq(iv.width(), sep) < 0) return 0;
    bits *= 2;
  }
}

double fp_norm1(const FieldElem& x) {
  const NumberField& K = *x.K;
  double s = 0.0;
  for (int k = 0; k < K.degree; ++k) {
    double e = 0.0;
    for (size_t i = 0; i < x.c.size(); ++i)
      e += x.c[i].get_d() * K.emb_basis_d[i][static_cast<size_t>(k)];
    s += std::abs(e);
  }
  return s;
}

// rows extend to a basis of Z^d iff the gcd of all maximal minors is 1
bool rows_extend_to_basis(const ZMat& rows, int d) {
  size_t r = rows.size();
  std::vector<size_t> idx(r);
  for (size_t i = 0; i < r; ++i) idx[i] = i;
  mpz_class g = 0;
  std::vector<size_t> cols(r);
  std::function<void(size_t, size_t)> pick = [&](size_t pos, size_t from) {
    if (g == 1) return;
    if (pos == r) {
      ZMat sq(r, std::vector<mpz_class>(r));
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) sq[i][j] = rows[i][cols[j]];
      mpz_class det = bareiss_det(std::move(sq));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      return;
    }
    for (size_t c = from; c < static_cast<size_t>(d); ++c) {
      cols[pos] = c;
      pick(pos + 1, c + 1);
    }
  };
  pick(0, 0);
  return g == 1;
}

bool coords_lex_less(const FieldElem& a, const FieldElem& b) {
  for (size_t i = 0; i < a.c.size(); ++i) {
    int c = cmp(a.c[i], b.c[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

FieldElem next_minimal_extension(const NumberField& K, const std::vector<FieldElem>& chosen) {
  int d = K.degree;
  ZMat rows;
  for (const FieldElem& e : chosen) {
    std::vector<mpz_class> r(e.c.size());
    for (size_t i = 0; i < e.c.size(); ++i) r[i] = e.c[i].get_num();
    rows.push_back(std::move(r));
  }
  rows.emplace_back(static_cast<size_t>(d));
  for (mpq_class radius(2);; radius *= 2) {
    std::vector<FieldElem> cands =
        enumerate_box(K, symmetric_box(std::vector<mpq_class>(static_cast<size_t>(d), radius)));
    std::vector<FieldElem> pool;
    double fpmin = 0.0;
    for (FieldElem& x : cands) {
      int lead = 0;
      for (const mpq_class& v : x.c) {
        if (v != 0) {
          lead = sgn(v);
          break;
        }
      }
      if (lead <= 0) continue;  // zero, or the mirror of a candidate we keep
      for (size_t i = 0; i < x.c.size(); ++i) rows.back()[i] = x.c[i].get_num();
      if (!rows_extend_to_basis(rows, d)) continue;
      double f = fp_norm1(x);
      if (pool.empty() || f < fpmin) fpmin = f;
      pool.push_back(std::move(x));
    }
    if (pool.empty()) continue;
    // exact tournament over the near-minimal shortlist only
    FieldElem best;
    for (FieldElem& x : pool) {
      if (fp_norm1(x) > fpmin + 1e-6 * (1.0 + fpmin)) continue;
      if (best.K == nullptr) {
        best = std::move(x);
        continue;
      }
      int c = norm1_cmp(x, best);
      if (c < 0 || (c == 0 && coords_lex_less(x, best))) best = std::move(x);
    }
    // lengths above the box radius may still lose to elements outside the box
    if (norm1_cmp_mpq(best, radius) <= 0) return best;
  }
}

}  // namespace

std::vector<FieldElem> minkowski_reduced_basis(const NumberField& K) {
  if (K.degree > 4) throw std::invalid_argument("unsupported degree");
  std::vector<FieldElem> basis{elem_one(K)};
  while (static_cast<int>(basis.size()) < K.degree)
    basis.push_back(next_minimal_extension(K, basis));
  return basis;
}

}  // namespace totreal
