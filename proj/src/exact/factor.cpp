#include "totreal/exact/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "totreal/exact/sturm.hpp"

namespace totreal {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    const unsigned long limit = 10000;
    std::vector<bool> sieve(limit, true);
    std::vector<unsigned long> ps;
    for (unsigned long i = 2; i < limit; ++i) {
      if (!sieve[i]) continue;
      ps.push_back(i);
      for (unsigned long j = i * i; j < limit; j += i) sieve[j] = false;
    }
    return ps;
  }();
  return primes;
}

bool is_probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

// Pollard-Brent rho with deterministic parameter sweep; n odd composite > 1
// with no factor below the trial-division bound.
mpz_class rho_find_factor(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
      mpz_class k = 0;
      while (k < r && g == 1) {
        ys = y;
        mpz_class lim = std::min(m, mpz_class(r - k));
        for (mpz_class i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        mpz_class d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n) return g;
  }
}

void factor_rec(const mpz_class& n, std::map<mpz_class, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  mpz_class d = rho_find_factor(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factor_mpz(const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("factorization needs n >= 1");
  std::map<mpz_class, int> acc;
  mpz_class m = n;
  for (unsigned long p : small_primes()) {
    if (m == 1) break;
    if (mpz_class(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      acc[mpz_class(p)] += 1;
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  if (m > 1) factor_rec(m, acc);
  return {acc.begin(), acc.end()};
}

std::vector<mpz_class> divisors_mpz(const mpz_class& n) {
  if (n == 0) throw std::invalid_argument("divisors of zero");
  auto fac = factor_mpz(abs(n));
  std::vector<mpz_class> ds = {1};
  for (const auto& [p, e] : fac) {
    size_t base = ds.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

mpz_class square_part(const mpz_class& n) {
  mpz_class s = 1;
  for (const auto& [p, e] : factor_mpz(abs(n)))
    for (int i = 0; i < e / 2; ++i) s *= p;
  return s;
}

namespace {

// ---- GF(p) polynomial helpers for the mod-p irreducibility fast path ----

using ModPoly = std::vector<uint64_t>;  // c[i] coeff of x^i, normalized

void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mp_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  // reduce mod monic f
  size_t df = f.size() - 1;
  while (r.size() > df) {
    uint64_t c = r.back();
    size_t k = r.size() - 1 - df;
    if (c != 0)
      for (size_t i = 0; i <= df; ++i) {
        uint64_t sub = c * f[i] % p;
        r[k + i] = (r[k + i] + p - sub) % p;
      }
    r.pop_back();
    mp_trim(r);
    if (r.size() <= df) break;
  }
  mp_trim(r);
  return r;
}

ModPoly mp_powmod(ModPoly base, uint64_t e, const ModPoly& f, uint64_t p) {
  ModPoly r = {1};
  while (e) {
    if (e & 1) r = mp_mulmod(r, base, f, p);
    base = mp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, uint64_t p) {
  mp_trim(a);
  mp_trim(b);
  while (!b.empty()) {
    // a mod b via repeated leading elimination (make b monic first)
    uint64_t inv = 1, lb = b.back();
    // Fermat inverse
    uint64_t e = p - 2, base = lb % p;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    ModPoly bm = b;
    for (auto& v : bm) v = v * inv % p;
    while (a.size() >= bm.size() && !a.empty()) {
      uint64_t c = a.back();
      size_t k = a.size() - bm.size();
      if (c != 0)
        for (size_t i = 0; i < bm.size(); ++i) {
          uint64_t sub = c * bm[i] % p;
          a[k + i] = (a[k + i] + p - sub) % p;
        }
      a.pop_back();
      mp_trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin irreducibility test for monic f over GF(p); sound in both directions
// when deg(f mod p) == deg f.
bool mp_irreducible(const IntPoly& f, uint64_t p) {
  size_t d = static_cast<size_t>(f.degree());
  ModPoly fp(d + 1);
  for (size_t i = 0; i <= d; ++i) {
    mpz_class c = f.coeff(static_cast<int>(i)) % static_cast<long>(p);
    if (c < 0) c += static_cast<long>(p);
    fp[i] = c.get_ui();
  }
  if (fp[d] != 1) return false;  // degree dropped (cannot happen for monic)
  // x^(p^k) mod f by iterated Frobenius
  std::vector<ModPoly> frob(d + 1);
  frob[0] = {0, 1};
  for (size_t k = 1; k <= d; ++k) frob[k] = mp_powmod(frob[k - 1], p, fp, p);
  // x^(p^d) == x required
  ModPoly xd = frob[d];
  if (xd.size() != 2 || xd[0] != 0 || xd[1] != 1) return false;
  // gcd(x^(p^(d/q)) - x, f) == 1 for every prime q | d
  std::vector<size_t> qs;
  size_t dd = d;
  for (size_t q = 2; q <= dd; ++q)
    if (dd % q == 0) {
      qs.push_back(q);
      while (dd % q == 0) dd /= q;
    }
  for (size_t q : qs) {
    ModPoly g = frob[d / q];
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    mp_trim(g);
    ModPoly gg = mp_gcd(g, fp, p);
    if (!(gg.size() == 1)) return false;
  }
  return true;
}

// ---- bounded factor search over Z ----

// One monic quadratic factor of a monic quartic with no integer roots, or
// nullopt if irreducible.  Coefficient matching over divisor pairs of c0.
std::optional<IntPoly> quartic_quadratic_factor(const IntPoly& g) {
  const mpz_class c3 = g.coeff(3), c2 = g.coeff(2), c1 = g.coeff(1), c0 = g.coeff(0);
  for (const mpz_class& u : divisors_mpz(c0)) {
    for (int sg = 0; sg < 2; ++sg) {
      mpz_class b = sg ? mpz_class(-u) : u;
      mpz_class d = c0 / b;
      if (b != d) {
        mpz_class num = c1 - b * c3, den = d - b, a, rem;
        mpz_tdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (rem != 0) continue;
        mpz_class c = c3 - a;
        if (b + d + a * c == c2) return IntPoly({b, a, mpz_class(1)});
      } else {
        if (b * c3 != c1) continue;
        mpz_class disc = c3 * c3 - 4 * (c2 - 2 * b);
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), disc.get_mpz_t());
        mpz_class twoa = c3 + r;
        if (twoa % 2 != 0) continue;
        return IntPoly({b, mpz_class(twoa / 2), mpz_class(1)});
      }
    }
  }
  return std::nullopt;
}

// Rational polynomials just for Lagrange interpolation of candidates.
using RatPoly = std::vector<mpq_class>;

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
  RatPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Smallest-degree monic factor (degree 2..deg/2) of squarefree s with no
// integer roots, found by divisor interpolation at small integer points;
// nullopt means s is irreducible.
std::optional<IntPoly> kronecker_factor(const IntPoly& s) {
  int ds = s.degree();
  const long pts[] = {0, 1, -1, 2, -2};
  mpz_class bound = s.root_bound_pow2();
  for (int k = 2; k <= ds / 2; ++k) {
    // divisor lists at the first k+1 points
    std::vector<std::vector<mpz_class>> dv(static_cast<size_t>(k) + 1);
    std::vector<mpz_class> vals(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
      vals[static_cast<size_t>(i)] = s.eval_z(pts[i]);
      dv[static_cast<size_t>(i)] = divisors_mpz(vals[static_cast<size_t>(i)]);
    }
    // Lagrange basis denominators w_i = prod_{j != i} (t_i - t_j)
    std::vector<mpq_class> w(static_cast<size_t>(k) + 1, mpq_class(1));
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j)
        if (j != i) w[static_cast<size_t>(i)] *= mpq_class(pts[i] - pts[j]);
    // symmetric-function coefficient bounds for a degree-k factor
    std::vector<mpz_class> cb(static_cast<size_t>(k), mpz_class(0));
    for (int j = 0; j < k; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                   static_cast<unsigned long>(k - j));
      cb[static_cast<size_t>(j)] = binom * pow_mpz(bound, static_cast<unsigned long>(k - j));
    }
    // enumerate signed divisor tuples for points 0..k-1; solve point k from
    // the monic leading-coefficient constraint (k-th divided difference = 1)
    std::vector<size_t> idx(static_cast<size_t>(k), 0);
    std::vector<int> sign(static_cast<size_t>(k), 0);
    while (true) {
      mpq_class acc = 0;
      std::vector<mpq_class> hv(static_cast<size_t>(k) + 1);
      for (int i = 0; i < k; ++i) {
        mpz_class d = dv[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
        if (sign[static_cast<size_t>(i)]) d = -d;
        hv[static_cast<size_t>(i)] = mpq_class(d);
        acc += hv[static_cast<size_t>(i)] / w[static_cast<size_t>(i)];
      }
      mpq_class dk = (1 - acc) * w[static_cast<size_t>(k)];
      bool ok = dk.get_den() == 1 && dk != 0;
      if (ok) {
        mpz_class dkz = dk.get_num();
        ok = mpz_divisible_p(vals[static_cast<size_t>(k)].get_mpz_t(), dkz.get_mpz_t());
      }
      if (ok) {
        hv[static_cast<size_t>(k)] = dk;
        // Lagrange interpolation
        RatPoly h = {mpq_class(0)};
        for (int i = 0; i <= k; ++i) {
          RatPoly li = {hv[static_cast<size_t>(i)] / w[static_cast<size_t>(i)]};
          for (int j = 0; j <= k; ++j)
            if (j != i) li = rp_mul(li, RatPoly{mpq_class(-pts[j]), mpq_class(1)});
          if (li.size() > h.size()) h.resize(li.size(), mpq_class(0));
          for (size_t t = 0; t < li.size(); ++t) h[t] += li[t];
        }
        // integrality + monicity + coefficient bounds, then verified division
        bool good = h.size() == static_cast<size_t>(k) + 1 && h.back() == 1;
        std::vector<mpz_class> hc;
        if (good)
          for (size_t t = 0; t + 1 < h.size(); ++t) {
            if (h[t].get_den() != 1 || abs(h[t].get_num()) > cb[t]) {
              good = false;
              break;
            }
            hc.push_back(h[t].get_num());
          }
        if (good) {
          hc.push_back(1);
          IntPoly cand(std::move(hc));
          if (IntPoly::try_divide(s, cand)) return cand;
        }
      }
      // advance signed tuple
      int pos = 0;
      for (; pos < k; ++pos) {
        size_t i = static_cast<size_t>(pos);
        if (sign[i] == 0) {
          sign[i] = 1;
          break;
        }
        sign[i] = 0;
        if (++idx[i] < dv[i].size()) break;
        idx[i] = 0;
      }
      if (pos == k) break;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<IntPoly> factor_small(const IntPoly& f) {
  if (f.is_zero() || !f.is_monic()) throw std::invalid_argument("requires monic polynomial");
  if (f.degree() > 8) throw std::invalid_argument("out of supported range");
  std::vector<IntPoly> out;
  IntPoly g = f;
  // powers of x
  while (g.degree() >= 1 && g.coeff(0) == 0) {
    out.push_back(IntPoly::x());
    auto q = IntPoly::divmod_monic(g, IntPoly::x());
    g = q.first;
  }
  // integer roots (divisors of the constant term, both signs)
  if (g.degree() >= 1) {
    for (const mpz_class& u : divisors_mpz(g.coeff(0))) {
      for (int sg = 0; sg < 2 && g.degree() >= 1; ++sg) {
        mpz_class r = sg ? mpz_class(-u) : u;
        IntPoly lin({mpz_class(-r), mpz_class(1)});
        while (g.degree() >= 1 && g.eval_z(r) == 0) {
          out.push_back(lin);
          g = IntPoly::divmod_monic(g, lin).first;
        }
      }
      if (g.degree() < 1) break;
    }
  }
  // remaining part has no rational roots
  while (g.degree() >= 1) {
    int d = g.degree();
    if (d <= 3) {  // would need a linear factor to split
      out.push_back(g);
      break;
    }
    std::optional<IntPoly> h;
    if (d == 4) {
      h = quartic_quadratic_factor(g);
    } else {
      // mod-p certificate first, then complete bounded search
      bool certified = false;
      for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul,
                              37ul, 41ul, 43ul, 47ul}) {
        if (mp_irreducible(g, p)) {
          certified = true;
          break;
        }
      }
      if (!certified) {
        IntPoly s = g.squarefree_part();
        if (s.degree() < d) {
          // peel repeated content via the squarefree part's factors
          h = kronecker_factor(s);
          if (!h) h = s;  // s itself irreducible; g is a power of s
        } else {
          h = kronecker_factor(s);
        }
      }
    }
    if (!h) {
      out.push_back(g);
      break;
    }
    auto q = IntPoly::try_divide(g, *h);
    if (!q) throw std::logic_error("verified factor does not divide");
    do {
      out.push_back(*h);
      g = *q;
      q = IntPoly::try_divide(g, *h);
    } while (q);
  }
  std::sort(out.begin(), out.end(), [](const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      int c = cmp(a.coeff(i), b.coeff(i));
      if (c != 0) return c < 0;
    }
    return false;
  });
  return out;
}

bool poly_is_irreducible(const IntPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  return factor_small(f).size() == 1;
}

bool poly_is_totally_real(const IntPoly& f) {
  if (!poly_is_irreducible(f)) throw std::domain_error("not irreducible");
  if (f.degree() == 1) return true;
  SturmChain c = SturmChain::build(f);
  return c.count_all() == f.degree();
}

}  // namespace totreal
