// Coefficient DFS for totally real polynomials with roots in (0, 7+sqrt(6)).
// Derivative interlacing prunes the tree with padded floating-point bounds;
// every surviving polynomial is admitted or rejected by exact Sturm counts.
#include "totreal/pipeline/robinson.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "totreal/exact/factor.hpp"
#include "totreal/exact/sturm.hpp"

namespace totreal {

namespace {

long falling(long n, long k) {
  long r = 1;
  for (long i = 0; i < k; ++i) r *= n - i;
  return r;
}

// f = x^d + a[1] x^{d-1} + ... + a[d].  The (d-m)-th derivative is
//   G_m(x) = sum_{j=0..m} a[j] * falling(d-j, d-m) * x^{m-j},
// an integer polynomial of degree m whose roots interlace those of f.
// a[m] enters only the constant term, with coefficient (d-m)!.

struct DerivCoeffs {
  // coefficient of x^e in G_m, e = 0..m, with the a[m] slot left at zero
  std::array<long, 5> c{};
  long kappa = 1;  // multiplier of a[m] in the constant term
};

DerivCoeffs deriv_known_part(int d, int m, const std::array<long, 5>& a) {
  DerivCoeffs dc;
  for (int j = 0; j < m; ++j) dc.c[m - j] = a[j] * falling(d - j, d - m);
  dc.c[0] = 0;
  dc.kappa = falling(d - m, d - m);
  return dc;
}

double eval_fp(const DerivCoeffs& dc, int m, double x) {
  double v = 0;
  for (int e = m; e >= 0; --e) v = v * x + static_cast<double>(dc.c[e]);
  return v;
}

mpq_class eval_mpq(const DerivCoeffs& dc, int m, const mpq_class& x) {
  mpq_class v = 0;
  for (int e = m; e >= 0; --e) v = v * x + dc.c[e];
  return v;
}

double bisect_root(const DerivCoeffs& dc, int m, long cterm, double lo,
                   double hi, double flo) {
  for (int it = 0; it < 80 && hi - lo > 1e-13 * (1.0 + std::fabs(lo)); ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = eval_fp(dc, m, mid) + static_cast<double>(cterm);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Sign-change roots of G_m (with constant term completed by kappa*a[m]) in
// (0, hi_fp), guided by the previously found roots of its derivative.  Root
// pairs merged into touch points may be missed; that only loosens the next
// level's pruning, never tightens it.
std::vector<double> find_roots(const DerivCoeffs& dc, int m, long am,
                               const std::vector<double>& guides,
                               double hi_fp) {
  long cterm = dc.kappa * am;
  std::vector<double> pts;
  pts.push_back(0.0);
  for (double g : guides)
    if (g > 1e-12 && g < hi_fp - 1e-12) pts.push_back(g);
  pts.push_back(hi_fp);
  std::sort(pts.begin(), pts.end());

  std::vector<double> roots;
  auto sweep = [&](double lo, double hi, int cells) {
    double flo = eval_fp(dc, m, lo) + static_cast<double>(cterm);
    for (int i = 1; i <= cells; ++i) {
      double x = lo + (hi - lo) * i / cells;
      double fx = eval_fp(dc, m, x) + static_cast<double>(cterm);
      if (flo != 0 && fx != 0 && (flo > 0) != (fx > 0))
        roots.push_back(bisect_root(dc, m, cterm, x - (hi - lo) / cells, x, flo));
      flo = fx;
    }
  };
  for (size_t i = 0; i + 1 < pts.size(); ++i) sweep(pts[i], pts[i + 1], 1);
  if (static_cast<int>(roots.size()) < m) {
    roots.clear();
    for (size_t i = 0; i + 1 < pts.size(); ++i) sweep(pts[i], pts[i + 1], 64);
  }
  std::sort(roots.begin(), roots.end());
  if (static_cast<int>(roots.size()) > m) roots.clear();  // numeric noise
  return roots;
}

struct Search {
  const RobinsonConfig* cfg = nullptr;
  int d = 0;
  double hi_fp = 0;                 // fp guard just above the surd bound
  std::array<double, 5> clamp{};    // Vieta bound binom(d,m) * bound^m
  std::vector<IntPoly> out;

  void leaf(const std::array<long, 5>& a) {
    // cheap necessary conditions over the integers first
    long f10 = 1;
    for (int j = 1; j <= d; ++j) f10 = f10 * 10 + a[j];
    if (f10 <= 0) return;

    std::vector<mpz_class> coeffs(d + 1);
    coeffs[d] = 1;
    for (int j = 1; j <= d; ++j) coeffs[d - j] = a[j];
    IntPoly f(coeffs);

    SturmChain chain = SturmChain::build(f);
    if (!chain.squarefree()) return;  // repeated factor, hence reducible
    if (chain.count_all() != d) return;
    int v0 = chain.variations_at_mpq(0);
    if (v0 - chain.variations_at_surd(cfg->root_upper) != d) return;
    if (cfg->require_unit_root && v0 - chain.variations_at_mpq(1) < 1) return;
    if (!poly_is_irreducible(f)) return;
    out.push_back(f);
  }

  void descend(int m, std::array<long, 5>& a, const std::vector<double>& prev) {
    DerivCoeffs dc = deriv_known_part(d, m, a);

    // Exact one-sided bounds from the window endpoints: G_m is positive
    // beyond every root, and its sign at zero is (-1)^m.
    mpq_class probe(19, 2);  // rational point above 7+sqrt(6)
    probe.canonicalize();
    mpq_class qbound = -eval_mpq(dc, m, probe) / dc.kappa;
    mpz_class floor_q;
    mpz_fdiv_q(floor_q.get_mpz_t(), qbound.get_num_mpz_t(),
               qbound.get_den_mpz_t());
    long lo = mpz_get_si(floor_q.get_mpz_t()) + 1;
    long hi = static_cast<long>(clamp[m]) + 1;
    if (m % 2 == 0)
      lo = std::max(lo, 1L);
    else
      hi = -1;
    lo = std::max(lo, -(static_cast<long>(clamp[m]) + 1));

    // Alternation at the located extrema: counting j from the right, the
    // sign of G_m there is (-1)^j.  Touch points missed by the root finder
    // drop in pairs, so the parity of the position survives.
    for (size_t idx = 0; idx < prev.size(); ++idx) {
      double val = eval_fp(dc, m, prev[idx]);
      double pad = 1.0 + 1e-9 * std::fabs(val);
      size_t j = prev.size() - idx;  // 1-based from the right
      double b = -val / static_cast<double>(dc.kappa);
      if (j % 2 == 1)
        hi = std::min(hi, static_cast<long>(std::floor(b + pad)));
      else
        lo = std::max(lo, static_cast<long>(std::ceil(b - pad)));
    }

    for (long c = lo; c <= hi; ++c) {
      a[m] = c;
      if (m == d) {
        leaf(a);
        continue;
      }
      std::vector<double> roots = find_roots(dc, m, c, prev, hi_fp);
      descend(m + 1, a, roots);
    }
    a[m] = 0;
  }

  void run() {
    double bound = 7.0 + std::sqrt(6.0);
    hi_fp = 9.5;  // above the bound; the exact probe at 19/2 matches
    for (int m = 0; m <= d; ++m) {
      double bin = 1;
      for (int i = 0; i < m; ++i) bin = bin * (d - i) / (i + 1);
      clamp[m] = bin * std::pow(bound + 0.01, m);
    }
    std::array<long, 5> a{};
    a[0] = 1;
    for (long t = cfg->trace_min; t <= cfg->trace_max; ++t) {
      a[1] = -t;
      std::vector<double> prev{static_cast<double>(t) / d};
      if (d == 1) {
        leaf(a);
        continue;
      }
      descend(2, a, prev);
    }
  }
};

}  // namespace

RobinsonConfig default_robinson_config(int degree) {
  RobinsonConfig cfg;
  cfg.degree = degree;
  switch (degree) {
    case 2: cfg.trace_min = 4; cfg.trace_max = 18; break;
    case 3: cfg.trace_min = 5; cfg.trace_max = 19; break;
    case 4: cfg.trace_min = 7; cfg.trace_max = 29; break;
    default: throw std::invalid_argument("unsupported degree");
  }
  return cfg;
}

std::vector<IntPoly> robinson_enumerate(const RobinsonConfig& cfg) {
  if (cfg.degree < 2 || cfg.degree > 4)
    throw std::invalid_argument("unsupported degree");
  if (cfg.trace_min > cfg.trace_max)
    throw std::invalid_argument("empty trace window");
  Search s;
  s.cfg = &cfg;
  s.d = cfg.degree;
  s.run();
  std::sort(s.out.begin(), s.out.end(),
            [](const IntPoly& x, const IntPoly& y) {
              for (int i = 0; i <= x.degree(); ++i) {
                int c = cmp(x.coeff(i), y.coeff(i));
                if (c != 0) return c < 0;
              }
              return false;
            });
  return s.out;
}

}  // namespace totreal
