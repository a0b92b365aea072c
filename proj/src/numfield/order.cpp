// Maximal order construction: start from Z[theta] and p-maximalize at every
// prime whose square divides disc(f), using the Frobenius-kernel radical and
// multiplier-ring enlargement.  The final basis is deterministically
// size-reduced against the trace form (omega_0 = 1 stays pinned).
#include <algorithm>
#include <stdexcept>

#include "totreal/exact/factor.hpp"
#include "totreal/exact/sturm.hpp"
#include "totreal/numfield/field.hpp"

namespace totreal {

namespace {

// product of two power-coordinate vectors, reduced mod monic f
std::vector<mpq_class> poly_mul_mod(const std::vector<mpq_class>& a,
                                    const std::vector<mpq_class>& b, const IntPoly& f) {
  size_t d = static_cast<size_t>(f.degree());
  std::vector<mpq_class> r(2 * d - 1, mpq_class(0));
  for (size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) r[i + j] += a[i] * b[j];
  }
  for (size_t k = 2 * d - 2; k >= d; --k) {
    if (r[k] == 0) continue;
    mpq_class c = r[k];
    r[k] = 0;
    for (size_t i = 0; i < d; ++i) r[k - d + i] -= c * f.coeff(static_cast<int>(i));
    if (k == d) break;
  }
  r.resize(d);
  return r;
}

// power sums s_k = Tr(theta^k), k = 0..d-1, via Newton's identities
std::vector<mpz_class> power_sums(const IntPoly& f) {
  int d = f.degree();
  std::vector<mpz_class> s(static_cast<size_t>(d));
  s[0] = d;
  for (int k = 1; k < d; ++k) {
    mpz_class acc = -mpz_class(k) * f.coeff(d - k);
    for (int i = 1; i < k; ++i) acc -= f.coeff(d - i) * s[static_cast<size_t>(k - i)];
    s[static_cast<size_t>(k)] = acc;
  }
  return s;
}

mpq_class trace_of_power(const std::vector<mpq_class>& v, const std::vector<mpz_class>& s) {
  mpq_class t = 0;
  for (size_t k = 0; k < v.size(); ++k) t += v[k] * mpq_class(s[k]);
  return t;
}

mpz_class mod_p(const mpz_class& x, const mpz_class& p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return r;
}

// right kernel basis of M over F_p (rows x cols, entries already reduced)
std::vector<std::vector<mpz_class>> kernel_mod_p(std::vector<std::vector<mpz_class>> m,
                                                 const mpz_class& p) {
  if (m.empty()) return {};
  size_t rows = m.size(), cols = m[0].size();
  std::vector<long> pivot_of_col(cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), m[r][c].get_mpz_t(), p.get_mpz_t());
    for (size_t j = c; j < cols; ++j) m[r][j] = mod_p(m[r][j] * inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpz_class f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = mod_p(m[i][j] - f * m[r][j], p);
    }
    pivot_of_col[c] = static_cast<long>(r);
    ++r;
  }
  std::vector<std::vector<mpz_class>> ker;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] != -1) continue;
    std::vector<mpz_class> v(cols, mpz_class(0));
    v[c] = 1;
    for (size_t c2 = 0; c2 < cols; ++c2) {
      long pr = pivot_of_col[c2];
      if (pr == -1) continue;
      // row pr: x_{c2} + sum of free-column entries = 0
      v[c2] = mod_p(-m[static_cast<size_t>(pr)][c], p);
    }
    ker.push_back(std::move(v));
  }
  return ker;
}

struct OrderCtx {
  const IntPoly& f;
  size_t d;
  QMat B;  // basis rows over power coordinates

  // multiplication tensor of the current basis (integer because B is a ring)
  std::vector<std::vector<std::vector<mpz_class>>> mult_table() const {
    QMat binv = qmat_inverse(B);
    std::vector<std::vector<std::vector<mpz_class>>> t(
        d, std::vector<std::vector<mpz_class>>(d, std::vector<mpz_class>(d)));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = i; j < d; ++j) {
        auto prod = poly_mul_mod(B[i], B[j], f);
        auto coords = qvec_mat(prod, binv);
        for (size_t k = 0; k < d; ++k) {
          if (coords[k].get_den() != 1)
            throw std::logic_error("order multiplication left the lattice");
          t[i][j][k] = coords[k].get_num();
        }
        if (j != i) t[j][i] = t[i][j];
      }
    return t;
  }
};

using ZVec = std::vector<mpz_class>;

ZVec mult_mod_p(const ZVec& a, const ZVec& b,
                const std::vector<std::vector<std::vector<mpz_class>>>& t, const mpz_class& p) {
  size_t d = a.size();
  ZVec r(d, mpz_class(0));
  for (size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      mpz_class ab = mod_p(a[i] * b[j], p);
      if (ab == 0) continue;
      for (size_t k = 0; k < d; ++k) r[k] += ab * t[i][j][k];
    }
  }
  for (auto& v : r) v = mod_p(v, p);
  return r;
}

ZVec pow_mod_p(ZVec base, mpz_class e,
               const std::vector<std::vector<std::vector<mpz_class>>>& t, const mpz_class& p) {
  size_t d = base.size();
  ZVec r(d, mpz_class(0));
  r[0] = 1;  // basis element 0 is 1
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mult_mod_p(r, base, t, p);
    e /= 2;
    if (e > 0) base = mult_mod_p(base, base, t, p);
  }
  return r;
}

void normalize_unit_row(QMat& B);

// one enlargement step at p; returns true if the order grew
bool p_enlarge_once(OrderCtx& ctx, const mpz_class& p) {
  size_t d = ctx.d;
  auto t = ctx.mult_table();
  // radical of O/pO = kernel of x -> x^(p^k), p^k >= d
  mpz_class pk = p;
  while (pk < static_cast<long>(d)) pk *= p;
  std::vector<std::vector<mpz_class>> frob(d);
  for (size_t i = 0; i < d; ++i) {
    ZVec e(d, mpz_class(0));
    e[i] = 1;
    frob[i] = pow_mod_p(e, pk, t, p);
  }
  // rows of the map: x -> x F ; kernel over rows means left kernel, so pass
  // the transpose to the column-kernel routine
  std::vector<std::vector<mpz_class>> ft(d, std::vector<mpz_class>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) ft[j][i] = frob[i][j];
  auto rad = kernel_mod_p(ft, p);
  if (rad.empty()) return false;  // p-maximal (even unramified) already

  // ideal I = pO + lifts(radical), as HNF rows in O-coordinates
  std::vector<std::vector<mpz_class>> gens;
  for (size_t i = 0; i < d; ++i) {
    std::vector<mpz_class> row(d, mpz_class(0));
    row[i] = p;
    gens.push_back(std::move(row));
  }
  for (auto& v : rad) gens.push_back(v);
  auto V = hnf_rows(std::move(gens), d);
  if (V.size() != d) throw std::logic_error("radical ideal lattice degenerated");
  mpz_class detV = 1;
  for (size_t i = 0; i < d; ++i) detV *= V[i][i];
  // detV = p^m
  mpz_class m_exp = 0, tmp = detV;
  while (tmp > 1) {
    if (!mpz_divisible_p(tmp.get_mpz_t(), p.get_mpz_t()))
      throw std::logic_error("radical ideal index not a p-power");
    tmp /= p;
    m_exp += 1;
  }
  // adjugate of V
  QMat vq(d, std::vector<mpq_class>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) vq[i][j] = mpq_class(V[i][j]);
  QMat vinv = qmat_inverse(vq);
  std::vector<std::vector<mpz_class>> adj(d, std::vector<mpz_class>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      mpq_class e = vinv[i][j] * mpq_class(detV);
      if (e.get_den() != 1) throw std::logic_error("adjugate not integral");
      adj[i][j] = e.get_num();
    }
  mpz_class pm = pow_mpz(p, m_exp.get_ui());
  mpz_class pm1 = pm * p;
  // condition matrix: y = e_i must satisfy (e_i * v_j) * adj(V) == 0 mod p^(m+1)
  std::vector<std::vector<mpz_class>> cond(d, std::vector<mpz_class>(d * d));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) {
      // w = e_i * v_j in O-coordinates
      ZVec w(d, mpz_class(0));
      for (size_t u = 0; u < d; ++u) {
        if (V[j][u] == 0) continue;
        for (size_t k = 0; k < d; ++k) w[k] += V[j][u] * t[i][u][k];
      }
      // translate to I-coordinates scaled by detV
      for (size_t k = 0; k < d; ++k) {
        mpz_class acc = 0;
        for (size_t u = 0; u < d; ++u) acc += w[u] * adj[u][k];
        if (!mpz_divisible_p(acc.get_mpz_t(), pm.get_mpz_t()))
          throw std::logic_error("multiplier condition not p^m-divisible");
        cond[i][j * d + k] = mod_p(acc / pm, p);
      }
    }
  }
  // left kernel of cond = right kernel of its transpose
  std::vector<std::vector<mpz_class>> ct(d * d, std::vector<mpz_class>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t c = 0; c < d * d; ++c) ct[c][i] = cond[i][c];
  auto ker = kernel_mod_p(ct, p);

  std::vector<std::vector<mpz_class>> rows;
  for (size_t i = 0; i < d; ++i) {
    std::vector<mpz_class> row(d, mpz_class(0));
    row[i] = p;
    rows.push_back(std::move(row));
  }
  for (auto& y : ker) rows.push_back(y);
  auto H = hnf_rows(std::move(rows), d);
  bool grew = false;
  for (size_t i = 0; i < d && !grew; ++i)
    for (size_t j = 0; j < d && !grew; ++j) {
      mpz_class want = (i == j) ? p : mpz_class(0);
      if (H[i][j] != want) grew = true;
    }
  if (!grew) return false;
  // B <- (1/p) H B, then restore the omega_0 = 1 invariant
  QMat hq(d, std::vector<mpq_class>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      hq[i][j] = mpq_class(H[i][j], p);
      hq[i][j].canonicalize();
    }
  ctx.B = qmat_mul(hq, ctx.B);
  normalize_unit_row(ctx.B);
  return true;
}

int first_nonzero(const std::vector<mpq_class>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return sgn(v[i]);
  return 0;
}

// unimodular change of basis putting the element 1 in row 0 (enlargement can
// leave it elsewhere); gcd-reduces the coordinates of 1 while tracking the
// inverse transform
void normalize_unit_row(QMat& B) {
  size_t d = B.size();
  std::vector<mpq_class> one(d, mpq_class(0));
  one[0] = 1;  // power coordinates of 1
  auto coords = qvec_mat(one, qmat_inverse(B));
  std::vector<mpz_class> a(d);
  for (size_t i = 0; i < d; ++i) {
    if (coords[i].get_den() != 1) throw std::logic_error("1 not in the order lattice");
    a[i] = coords[i].get_num();
  }
  ZMat w(d, std::vector<mpz_class>(d, mpz_class(0)));
  for (size_t i = 0; i < d; ++i) w[i][i] = 1;
  // Euclidean reduction of a to +-e_k; op a_i -= q a_j mirrors w_j += q w_i
  while (true) {
    size_t i = d, j = d;
    for (size_t t = 0; t < d; ++t)
      if (a[t] != 0) {
        if (i == d)
          i = t;
        else {
          j = t;
          break;
        }
      }
    if (i == d) throw std::logic_error("1 not in the order lattice");
    if (j == d) break;  // single nonzero left
    if (abs(a[i]) < abs(a[j])) std::swap(i, j);
    mpz_class q = a[i] / a[j];
    a[i] -= q * a[j];
    for (size_t t = 0; t < d; ++t) w[j][t] += q * w[i][t];
  }
  size_t k = 0;
  while (a[k] == 0) ++k;
  if (!(a[k] == 1 || a[k] == -1)) throw std::logic_error("1 not primitive in the order lattice");
  if (a[k] == -1)
    for (size_t t = 0; t < d; ++t) w[k][t] = -w[k][t];
  std::swap(w[0], w[k]);
  QMat wq(d, std::vector<mpq_class>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) wq[i][j] = mpq_class(w[i][j]);
  B = qmat_mul(wq, B);
  for (size_t j = 0; j < d; ++j)
    if (B[0][j] != (j == 0 ? 1 : 0)) throw std::logic_error("unit row normalization failed");
}

}  // namespace

NumberField maximal_order(const IntPoly& f) {
  if (f.is_zero() || !f.is_monic()) throw std::invalid_argument("requires monic polynomial");
  if (f.degree() > 8) throw std::invalid_argument("out of supported range");
  if (!poly_is_irreducible(f)) throw std::domain_error("not irreducible");
  int d = f.degree();
  if (d >= 2 && SturmChain::build(f).count_all() != d)
    throw std::domain_error("not totally real");

  size_t n = static_cast<size_t>(d);
  OrderCtx ctx{f, n, qmat_identity(n)};
  mpz_class discf = f.discriminant();
  for (const auto& [p, e] : factor_mpz(abs(discf))) {
    if (e < 2) continue;
    while (p_enlarge_once(ctx, p)) {
    }
  }

  // deterministic size reduction against the trace form, omega_0 = 1 pinned
  auto s = power_sums(f);
  auto gram_entry = [&](size_t i, size_t j) {
    return trace_of_power(poly_mul_mod(ctx.B[i], ctx.B[j], f), s);
  };
  QMat G(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j) G[i][j] = G[j][i] = gram_entry(i, j);
  for (int pass = 0; pass < 64; ++pass) {
    bool changed = false;
    for (size_t i = 1; i < n; ++i) {
      for (size_t jj = i; jj-- > 0;) {
        mpz_class mu = nearest_int(G[i][jj] / G[jj][jj]);
        if (mu == 0) continue;
        for (size_t k = 0; k < n; ++k) ctx.B[i][k] -= mpq_class(mu) * ctx.B[jj][k];
        for (size_t k = 0; k < n; ++k) G[i][k] = G[k][i] = gram_entry(i, k);
        changed = true;
      }
    }
    if (!changed) break;
  }
  // canonical sign and order for rows past omega_0
  for (size_t i = 1; i < n; ++i)
    if (first_nonzero(ctx.B[i]) < 0)
      for (size_t k = 0; k < n; ++k) ctx.B[i][k] = -ctx.B[i][k];
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin() + 1, order.end(), [&](size_t a, size_t b) {
    int c = cmp(G[a][a], G[b][b]);
    if (c != 0) return c < 0;
    for (size_t k = 0; k < n; ++k) {
      int ck = cmp(ctx.B[a][k], ctx.B[b][k]);
      if (ck != 0) return ck < 0;
    }
    return false;
  });
  QMat sorted(n);
  for (size_t i = 0; i < n; ++i) sorted[i] = ctx.B[order[i]];
  ctx.B = std::move(sorted);
  if (!(ctx.B[0][0] == 1))
    throw std::logic_error("basis lost the unit element");
  for (size_t k = 1; k < n; ++k)
    if (ctx.B[0][k] != 0) throw std::logic_error("basis lost the unit element");

  NumberField K;
  K.min_poly = f;
  K.degree = d;
  K.basis = ctx.B;
  K.basis_inv = qmat_inverse(ctx.B);
  K.mult = ctx.mult_table();
  K.trace_mat.assign(n, std::vector<mpz_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j) {
      mpq_class tq = gram_entry(i, j);
      if (tq.get_den() != 1) throw std::logic_error("non-integral trace pairing");
      K.trace_mat[i][j] = K.trace_mat[j][i] = tq.get_num();
    }
  K.basis_trace.resize(n);
  for (size_t i = 0; i < n; ++i) {
    mpq_class t = trace_of_power(ctx.B[i], s);
    if (t.get_den() != 1) throw std::logic_error("non-integral basis trace");
    K.basis_trace[i] = t.get_num();
  }
  K.disc = bareiss_det(K.trace_mat);
  if (K.disc <= 0) throw std::logic_error("discriminant not positive");
  {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), discf.get_mpz_t(), K.disc.get_mpz_t());
    if (r != 0 || !mpz_perfect_square_p(q.get_mpz_t()))
      throw std::logic_error("index squared does not divide the discriminant");
    mpz_sqrt(K.index.get_mpz_t(), q.get_mpz_t());
  }
  {
    mpz_class m4 = K.disc % 4;
    if (m4 != 0 && m4 != 1) throw std::logic_error("discriminant not 0 or 1 mod 4");
  }

  K.embeddings = isolate_real_roots(f, 64);
  if (static_cast<int>(K.embeddings.size()) != d)
    throw std::logic_error("embedding count mismatch");
  // certified per-embedding intervals for every basis element
  K.emb_basis.assign(n, std::vector<DyadicInterval>(n));
  K.emb_basis_d.assign(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i) {
    mpz_class den = 1;
    for (size_t k = 0; k < n; ++k)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ctx.B[i][k].get_den().get_mpz_t());
    std::vector<mpz_class> ic(n);
    for (size_t k = 0; k < n; ++k) {
      mpq_class scaled = ctx.B[i][k] * mpq_class(den);
      ic[k] = scaled.get_num();
    }
    IntPoly g{std::vector<mpz_class>(ic.begin(), ic.end())};
    for (size_t k = 0; k < n; ++k) {
      DyadicInterval root = K.embeddings[k];
      long bits = 80;
      DyadicInterval val = g.interval_eval(root);
      while (true) {
        mpq_class lo = val.lo().to_mpq() / den, hi = val.hi().to_mpq() / den;
        Dyadic dlo = Dyadic::lower_of_mpq(lo, 72), dhi = Dyadic::upper_of_mpq(hi, 72);
        DyadicInterval out{dlo, dhi};
        if (out.width() <= Dyadic(mpz_class(1), -48) || root.is_point()) {
          K.emb_basis[i][k] = out;
          break;
        }
        root = refine_interval(f, root, bits);
        bits += 64;
        val = g.interval_eval(root);
      }
      K.emb_basis_d[i][k] = K.emb_basis[i][k].to_double();
    }
  }
  return K;
}

NumberField biquadratic_compositum(const mpz_class& d1, const mpz_class& d2) {
  if (d1 == d2) throw std::invalid_argument("not biquadratic");
  if (d1 <= 1 || d2 <= 1 || square_part(d1) != 1 || square_part(d2) != 1)
    throw std::invalid_argument("requires squarefree radicand");
  // minimal polynomial of sqrt(d1) + sqrt(d2)
  mpz_class s = d1 + d2, q = d1 - d2;
  IntPoly f({q * q, mpz_class(0), mpz_class(-2) * s, mpz_class(0), mpz_class(1)});
  return maximal_order(f);
}

std::string NumberField::basis_str() const {
  std::string out;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (i) out += "; ";
    for (size_t j = 0; j < basis[i].size(); ++j) {
      if (j) out += ",";
      out += basis[i][j].get_str();
    }
  }
  return out;
}

}  // namespace totreal
