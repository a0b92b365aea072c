// Fincke-Pohst walk over integral-basis coordinates: floating-point pruning
// of the ellipsoid sum_k (sigma_k(x)/c_k)^2 <= d, exact certification of
// every candidate that survives.
#include "totreal/latenum/boxes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "totreal/numfield/qmat.hpp"

namespace totreal {

namespace {

struct Ldl {
  int d = 0;
  std::vector<std::vector<double>> l;  // unit lower triangular
  std::vector<double> diag;
  bool ok = false;
};

Ldl ldl_decompose(const std::vector<std::vector<double>>& a) {
  int d = static_cast<int>(a.size());
  Ldl r{d, std::vector<std::vector<double>>(d, std::vector<double>(d, 0.0)),
        std::vector<double>(d, 0.0), false};
  for (int j = 0; j < d; ++j) {
    double v = a[j][j];
    for (int k = 0; k < j; ++k) v -= r.l[j][k] * r.l[j][k] * r.diag[k];
    if (!(v > 1e-12)) return r;
    r.diag[j] = v;
    r.l[j][j] = 1.0;
    for (int i = j + 1; i < d; ++i) {
      double s = a[i][j];
      for (int k = 0; k < j; ++k) s -= r.l[i][k] * r.l[j][k] * r.diag[k];
      r.l[i][j] = s / v;
    }
  }
  r.ok = true;
  return r;
}

std::vector<std::vector<double>> weighted_vectors(const NumberField& K,
                                                  const std::vector<double>& radii) {
  int d = K.degree;
  std::vector<std::vector<double>> w(d, std::vector<double>(d, 0.0));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      w[i][k] = K.emb_basis_d[i][static_cast<size_t>(k)] / radii[static_cast<size_t>(k)];
  return w;
}

double dotv(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Lattice reduction of the weighted rows; U tracks the change of basis so
// that old coordinates are U times the enumerated ones.  Badly lopsided
// boxes (huge sigma_1, tiny sigma_2) otherwise wreck the factorization with
// catastrophic cancellation.
void lll_precondition(std::vector<std::vector<double>>& w, ZMat& u) {
  int d = static_cast<int>(w.size());
  std::vector<std::vector<double>> gs(d, std::vector<double>(d, 0.0));
  std::vector<std::vector<double>> mu(d, std::vector<double>(d, 0.0));
  std::vector<double> nb(d, 0.0);
  auto recompute = [&]() {
    for (int i = 0; i < d; ++i) {
      gs[i] = w[i];
      for (int j = 0; j < i; ++j) {
        mu[i][j] = nb[j] > 0 ? dotv(w[i], gs[j]) / nb[j] : 0.0;
        for (int t = 0; t < d; ++t) gs[i][t] -= mu[i][j] * gs[j][t];
      }
      nb[i] = dotv(gs[i], gs[i]);
    }
  };
  recompute();
  int k = 1;
  for (int guard = 0; k < d && guard < 1000; ++guard) {
    for (int j = k - 1; j >= 0; --j) {
      double m = mu[k][j];
      if (!(std::fabs(m) > 0.5)) continue;
      if (!(std::fabs(m) < 9e15)) return;  // bail out, basis unusable anyway
      long q = std::lround(m);
      for (int t = 0; t < d; ++t) w[k][t] -= static_cast<double>(q) * w[j][t];
      for (int t = 0; t < d; ++t) u[t][k] -= q * u[t][j];
      recompute();
    }
    if (nb[k] >= (0.75 - mu[k][k - 1] * mu[k][k - 1]) * nb[k - 1]) {
      ++k;
    } else {
      std::swap(w[k], w[k - 1]);
      for (int t = 0; t < d; ++t) std::swap(u[t][k], u[t][k - 1]);
      recompute();
      k = std::max(1, k - 1);
    }
  }
}

std::vector<std::vector<double>> gram_of(const std::vector<std::vector<double>>& w) {
  int d = static_cast<int>(w.size());
  std::vector<std::vector<double>> a(d, std::vector<double>(d, 0.0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i][j] = dotv(w[i], w[j]);
  return a;
}

void check_box_shape(const NumberField& K, const std::vector<mpq_class>& bounds) {
  if (static_cast<int>(bounds.size()) != K.degree)
    throw std::invalid_argument("box bounds invalid");
  for (const mpq_class& c : bounds)
    if (c <= 0) throw std::invalid_argument("box bounds invalid");
}

bool coords_lex_less(const FieldElem& a, const FieldElem& b) {
  for (size_t i = 0; i < a.c.size(); ++i) {
    int c = cmp(a.c[i], b.c[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

void enumerate_coords(const NumberField& K, const std::vector<mpq_class>& radii, long limit,
                      const std::function<bool(const std::vector<mpz_class>&)>& visit) {
  check_box_shape(K, radii);
  int d = K.degree;
  std::vector<double> rd(d);
  for (int k = 0; k < d; ++k) rd[k] = radii[static_cast<size_t>(k)].get_d();
  ZMat u(d, std::vector<mpz_class>(d, 0));
  for (int i = 0; i < d; ++i) u[i][i] = 1;
  std::vector<std::vector<double>> w = weighted_vectors(K, rd);
  lll_precondition(w, u);
  Ldl f = ldl_decompose(gram_of(w));
  if (!f.ok) {
    // retry with the uniform outer box |sigma_i| <= max c_i, which is better
    // conditioned and keeps the completeness guarantee
    double rmax = *std::max_element(rd.begin(), rd.end());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) u[i][j] = i == j ? 1 : 0;
    w = weighted_vectors(K, std::vector<double>(d, rmax));
    lll_precondition(w, u);
    f = ldl_decompose(gram_of(w));
    if (!f.ok) throw std::logic_error("embedding basis numerically degenerate");
  }
  // every point of the box satisfies q(x) <= d exactly; the slack absorbs
  // floating-point error so pruning can only cut points strictly outside
  double budget = d * (1.0 + 1e-9) + 1e-9;
  std::vector<long> x(static_cast<size_t>(d), 0);
  std::vector<mpz_class> coords(static_cast<size_t>(d));
  long visited = 0;
  std::function<bool(int, double)> walk = [&](int level, double used) -> bool {
    double center = 0.0;
    for (int i = level + 1; i < d; ++i) center += f.l[i][level] * static_cast<double>(x[i]);
    double room = (budget - used) / f.diag[level];
    if (room < 0) return true;
    double r = std::sqrt(room);
    double slack = 1e-6 * (1.0 + std::fabs(center) + r) + 1e-9;
    long lo = static_cast<long>(std::ceil(-center - r - slack));
    long hi = static_cast<long>(std::floor(-center + r + slack));
    for (long v = lo; v <= hi; ++v) {
      x[static_cast<size_t>(level)] = v;
      double y = static_cast<double>(v) + center;
      double next = used + f.diag[level] * y * y;
      if (level == 0) {
        if (++visited > limit)
          throw std::runtime_error("enumeration limit exceeded: " + std::to_string(limit));
        for (int i = 0; i < d; ++i) {
          coords[static_cast<size_t>(i)] = 0;
          for (int j = 0; j < d; ++j)
            coords[static_cast<size_t>(i)] += u[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
        }
        if (!visit(coords)) return false;
      } else if (!walk(level - 1, next)) {
        return false;
      }
    }
    x[static_cast<size_t>(level)] = 0;
    return true;
  };
  walk(d - 1, 0.0);
}

bool box_accepts(const BoxBounds& box, const FieldElem& x) {
  const NumberField& K = *x.K;
  check_box_shape(K, box.bounds);
  for (int k = 0; k < K.degree; ++k) {
    const mpq_class& c = box.bounds[static_cast<size_t>(k)];
    if (box.mode == BoxMode::symmetric) {
      if (embedding_cmp_mpq(x, k, c) > 0) return false;
      if (embedding_cmp_mpq(x, k, mpq_class(-c)) < 0) return false;
    } else {
      if (embedding_sign(x, k) <= 0) return false;
      if (embedding_cmp_mpq(x, k, c) >= 0) return false;
    }
  }
  return true;
}

std::vector<FieldElem> enumerate_box(const NumberField& K, const BoxBounds& box, long limit) {
  check_box_shape(K, box.bounds);
  std::vector<FieldElem> out;
  enumerate_coords(K, box.bounds, limit, [&](const std::vector<mpz_class>& a) {
    FieldElem x = elem_from_int_coords(K, a);
    if (box_accepts(box, x)) out.push_back(std::move(x));
    return true;
  });
  std::sort(out.begin(), out.end(), coords_lex_less);
  return out;
}

std::optional<FieldElem> square_below(const FieldElem& alpha, long limit) {
  const NumberField& K = *alpha.K;
  if (!is_totally_positive(alpha)) throw std::domain_error("not totally positive");
  // beta must satisfy sigma_k(beta)^2 < sigma_k(alpha), so |sigma_k(beta)|
  // stays under any upper bound on sqrt(sigma_k(alpha))
  std::vector<mpq_class> radii(static_cast<size_t>(K.degree));
  for (int k = 0; k < K.degree; ++k) {
    DyadicInterval iv = embedding_interval(alpha, k, 32);
    radii[static_cast<size_t>(k)] = sqrt_upper(iv.hi(), 32).to_mpq();
  }
  std::vector<std::vector<mpz_class>> cands;
  enumerate_coords(K, radii, limit, [&](const std::vector<mpz_class>& a) {
    std::vector<mpz_class> n = a;
    for (const mpz_class& v : n) {
      if (v == 0) continue;
      if (v < 0)
        for (mpz_class& w : n) w = -w;
      break;
    }
    cands.push_back(std::move(n));
    return true;
  });
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const std::vector<mpz_class>& a : cands) {
    FieldElem beta = elem_from_int_coords(K, a);
    if (beta.is_zero()) continue;
    if (is_totally_positive(alpha - beta * beta)) return beta;
  }
  return std::nullopt;
}

std::optional<FieldElem> field_sqrt(const NumberField& K, const mpz_class& d,
                                    long limit) {
  mpz_class r = sqrt(d);
  if (r * r < d) ++r;
  BoxBounds box = symmetric_box(std::vector<mpq_class>(K.degree, mpq_class(r + 1)));
  IntPoly target(std::vector<mpz_class>{-d, 0, 1});
  for (FieldElem& y : enumerate_box(K, box, limit)) {
    if (y.is_zero()) continue;
    if (!(element_min_poly(y) == target)) continue;
    if (embedding_sign(y, K.degree - 1) < 0) y = -y;
    return y;
  }
  return std::nullopt;
}

}  // namespace totreal
