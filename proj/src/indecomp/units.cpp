// Bounded unit search, equivalence testing modulo squares of units, and
// class representatives of bounded norm.
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "totreal/indecomp/indecomp.hpp"
#include "totreal/latenum/boxes.hpp"
#include "totreal/numfield/qmat.hpp"

namespace totreal {

namespace {

QMat mult_matrix(const FieldElem& a) {
  const NumberField& K = *a.K;
  int d = K.degree;
  QMat m(d, std::vector<mpq_class>(d, 0));
  for (int i = 0; i < d; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) m[j][k] += a.c[i] * K.mult[i][j][k];
  }
  return m;
}

// b / a for nonzero a.
FieldElem quotient(const FieldElem& b, const FieldElem& a) {
  FieldElem q = a;
  q.c = qvec_mat(b.c, qmat_inverse(mult_matrix(a)));
  return q;
}

FieldElem unit_inverse(const FieldElem& u) {
  return quotient(elem_one(*u.K), u);
}

FieldElem unit_pow(const FieldElem& u, long e) {
  if (e < 0) return unit_pow(unit_inverse(u), -e);
  FieldElem acc = elem_one(*u.K), base = u;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

std::vector<double> log_embeddings(const FieldElem& u) {
  std::vector<double> v(u.K->degree);
  for (int k = 0; k < u.K->degree; ++k)
    v[k] = std::log(std::fabs(embedding_double(u, k)));
  return v;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool trace_lex_less(const FieldElem& a, const FieldElem& b) {
  int c = cmp(trace(a), trace(b));
  if (c != 0) return c < 0;
  for (size_t i = 0; i < a.c.size(); ++i) {
    c = cmp(a.c[i], b.c[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

double fp_house(const FieldElem& a) {
  double h = 0;
  for (int k = 0; k < a.K->degree; ++k)
    h = std::max(h, std::fabs(embedding_double(a, k)));
  return h;
}

}  // namespace

UnitSystem unit_search(const NumberField& K, const mpq_class& house_bound, long limit) {
  if (house_bound < 1) throw std::invalid_argument("requires house bound >= 1");
  UnitSystem us;
  us.K = &K;
  if (K.degree == 1) {
    us.complete = true;
    return us;
  }
  if (K.degree == 2) {
    // Every unit inside any house bound is a power of the fundamental unit,
    // which has the smallest house among units off the torsion, so the box
    // search reduces to one continued-fraction computation.
    FieldElem eps = fundamental_unit_quadratic(K);
    if (compare_house_mpq(eps, house_bound) <= 0) {
      us.generators.push_back(eps);
      us.complete = true;
    }
    return us;
  }

  std::vector<mpq_class> radii(K.degree, house_bound);
  std::vector<FieldElem> units;
  for (FieldElem& x : enumerate_box(K, symmetric_box(radii), limit)) {
    if (abs(norm(x)) != 1) continue;
    for (int i = 0; i < K.degree; ++i) {
      if (x.c[i] == 0) continue;
      if (x.c[i] < 0) x = -x;
      break;
    }
    if (x == elem_one(K)) continue;
    units.push_back(x);
  }
  std::sort(units.begin(), units.end(), [](const FieldElem& a, const FieldElem& b) {
    double ha = fp_house(a), hb = fp_house(b);
    if (ha != hb) return ha < hb;
    return trace_lex_less(a, b);
  });
  units.erase(std::unique(units.begin(), units.end(),
                          [](const FieldElem& a, const FieldElem& b) { return a.c == b.c; }),
              units.end());

  // Greedy logarithmic-embedding rank: keep a unit whenever its log vector
  // leaves the span of those already kept.
  std::vector<std::vector<double>> basis;
  for (const FieldElem& u : units) {
    if (static_cast<int>(basis.size()) == K.degree - 1) break;
    std::vector<double> v = log_embeddings(u);
    double scale = std::sqrt(dot(v, v));
    for (const auto& e : basis) {
      double c = dot(v, e);
      for (size_t i = 0; i < v.size(); ++i) v[i] -= c * e[i];
    }
    double res = std::sqrt(dot(v, v));
    if (res <= 1e-8 * (1 + scale)) continue;
    for (auto& x : v) x /= res;
    basis.push_back(v);
    us.generators.push_back(u);
  }
  return us;
}

bool same_class_mod_unit_squares(const FieldElem& a, const FieldElem& b,
                                 const UnitSystem& units) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  FieldElem q = quotient(b, a);
  if (!q.is_integral() || norm(q) != 1 || !is_totally_positive(q)) return false;
  if (q == elem_one(*a.K)) return true;
  const auto& gens = units.generators;
  if (gens.empty()) return false;

  // Guess exponents from logarithmic embeddings, then confirm exactly.
  size_t r = gens.size();
  int d = a.K->degree;
  std::vector<std::vector<double>> A(r);
  for (size_t i = 0; i < r; ++i) {
    A[i] = log_embeddings(gens[i]);
    for (double& x : A[i]) x *= 2;
  }
  std::vector<double> y = log_embeddings(q);
  // Normal equations for least squares over the exponents.
  std::vector<std::vector<double>> G(r, std::vector<double>(r + 1, 0));
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) G[i][j] = dot(A[i], A[j]);
    G[i][r] = dot(A[i], y);
  }
  for (size_t col = 0; col < r; ++col) {
    size_t piv = col;
    for (size_t i = col + 1; i < r; ++i)
      if (std::fabs(G[i][col]) > std::fabs(G[piv][col])) piv = i;
    std::swap(G[piv], G[col]);
    if (std::fabs(G[col][col]) < 1e-12) return false;
    for (size_t i = 0; i < r; ++i) {
      if (i == col) continue;
      double f = G[i][col] / G[col][col];
      for (size_t j = col; j <= r; ++j) G[i][j] -= f * G[col][j];
    }
  }
  std::vector<long> base(r);
  for (size_t i = 0; i < r; ++i) {
    double e = G[i][r] / G[i][i];
    if (!(std::fabs(e) < 200)) return false;
    base[i] = std::lround(e);
  }

  std::vector<long> off(r, -1);
  for (;;) {
    FieldElem cand = elem_one(*a.K);
    for (size_t i = 0; i < r; ++i)
      cand = cand * unit_pow(gens[i], 2 * (base[i] + off[i]));
    if (cand == q) return true;
    size_t i = 0;
    while (i < r && off[i] == 1) off[i++] = -1;
    if (i == r) return false;
    ++off[i];
  }
}

ClassReps class_reps_norm_le(const NumberField& K, const mpz_class& n,
                             const UnitSystem& units, long limit) {
  if (n < 1) throw std::invalid_argument("requires positive norm bound");
  if (K.degree >= 2 && units.generators.empty())
    throw std::invalid_argument("units required");
  if (!units.generators.empty() && units.K != &K)
    throw std::invalid_argument("unit system field mismatch");

  mpq_class nq(n);
  auto collect = [&](const mpq_class& H) {
    std::vector<mpq_class> radii(K.degree, H);
    std::vector<FieldElem> pool;
    for (const FieldElem& x : enumerate_box(K, symmetric_box(radii), limit)) {
      mpq_class nx = norm(x);
      if (sgn(nx) <= 0 || cmp(nx, nq) > 0) continue;
      if (!is_totally_positive(x)) continue;
      pool.push_back(x);
    }
    std::sort(pool.begin(), pool.end(), trace_lex_less);
    std::vector<FieldElem> reps;
    for (const FieldElem& x : pool) {
      bool seen = false;
      for (const FieldElem& rep : reps)
        if (same_class_mod_unit_squares(rep, x, units)) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back(x);
    }
    return reps;
  };

  mpq_class h = 1;
  for (const FieldElem& g : units.generators) {
    mpq_class hu = house(g, 24).hi().to_mpq();
    if (cmp(hu, h) > 0) h = hu;
  }
  mpq_class H;
  if (K.degree <= 2) {
    H = nq * h * h;
  } else {
    // Balanced classes of norm <= n have small house; grow from there
    // instead of the gross worst-case bound.
    double root = std::pow(n.get_d(), 1.0 / K.degree);
    H = mpz_class(static_cast<long>(std::ceil(2 * root + 2)));
  }

  ClassReps out;
  out.K = &K;
  out.norm_bound = n;
  out.conditional = !units.complete;
  std::vector<FieldElem> prev = collect(H);
  for (;;) {
    H *= 2;
    std::vector<FieldElem> cur = collect(H);
    bool stable = cur.size() == prev.size();
    for (size_t i = 0; stable && i < cur.size(); ++i)
      if (!(cur[i].c == prev[i].c)) stable = false;
    if (stable) {
      out.reps = cur;
      out.search_bound = H;
      return out;
    }
    prev = std::move(cur);
  }
}

}  // namespace totreal
