// Continued fractions of quadratic surds: fundamental units and the complete
// indecomposable list of a real quadratic field.
#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "totreal/exact/factor.hpp"
#include "totreal/indecomp/indecomp.hpp"

namespace totreal {

namespace {

// State of the expansion of (P + sqrt(N)) / Q; Q stays positive and divides
// N - P^2 throughout.
struct SurdCF {
  mpz_class P, Q, N, s;

  mpz_class next() {
    mpz_class a, t = P + s;
    mpz_fdiv_q(a.get_mpz_t(), t.get_mpz_t(), Q.get_mpz_t());
    P = a * Q - P;
    Q = (N - P * P) / Q;
    if (Q <= 0) throw std::logic_error("surd expansion left its invariant");
    return a;
  }
};

struct QuadData {
  FieldElem sqrt_d;  // the square root of D with positive larger embedding
  FieldElem omega;   // (t + sqrt(D)) / 2 with t = D mod 2
  int t = 0;
  mpz_class D;
};

QuadData analyze(const NumberField& K) {
  if (K.degree != 2) throw std::invalid_argument("requires quadratic field");
  QuadData q;
  bool odd = K.disc % 4 != 0;
  q.D = odd ? K.disc : K.disc / 4;
  q.t = odd ? 1 : 0;
  FieldElem w1 = elem_from_int_coords(K, {0, 1});
  FieldElem v = w1 + w1 - elem_from_rational(K, trace(w1));
  q.sqrt_d = odd ? v : elem_scale(v, mpq_class(1, 2));
  if (embedding_sign(q.sqrt_d, 1) < 0) q.sqrt_d = -q.sqrt_d;
  q.omega = q.t == 1
                ? elem_scale(elem_from_rational(K, 1) + q.sqrt_d, mpq_class(1, 2))
                : q.sqrt_d;
  return q;
}

// Run one expansion, reporting every semiconvergent pair (p, q) to visit and
// stopping two full periods after the state first recurs.
void semiconvergent_pairs(
    SurdCF cf, const std::function<void(const mpz_class&, const mpz_class&)>& visit) {
  std::vector<std::pair<mpz_class, mpz_class>> states;
  mpz_class p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  long stop_at = -1;
  for (long i = 0; i < 500; ++i) {
    states.emplace_back(cf.P, cf.Q);
    if (stop_at < 0) {
      for (long j = 0; j + 1 < static_cast<long>(states.size()); ++j)
        if (states[j] == states.back()) {
          stop_at = i + 2 * (i - j) + 2;
          break;
        }
    }
    if (stop_at >= 0 && i >= stop_at) return;
    mpz_class a = cf.next();
    for (mpz_class r = 0; r <= a; ++r) visit(p2 + r * p1, q2 + r * q1);
    mpz_class p = a * p1 + p2, q = a * q1 + q2;
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
  throw std::logic_error("surd expansion failed to close its period");
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

bool coords_equal(const FieldElem& a, const FieldElem& b) { return a.c == b.c; }

// Preference order inside one unit-square orbit: smaller trace, then the
// lexicographically larger coordinate vector.
bool orbit_better(const FieldElem& a, const FieldElem& b) {
  int c = cmp(trace(a), trace(b));
  if (c != 0) return c < 0;
  for (size_t i = 0; i < a.c.size(); ++i) {
    c = cmp(a.c[i], b.c[i]);
    if (c != 0) return c > 0;
  }
  return false;
}

FieldElem orbit_canonical(FieldElem x, const FieldElem& eps2,
                          const FieldElem& eps2_inv) {
  for (;;) {
    FieldElem up = x * eps2, down = x * eps2_inv;
    if (orbit_better(up, x))
      x = up;
    else if (orbit_better(down, x))
      x = down;
    else
      return x;
  }
}

}  // namespace

NumberField quadratic_field(const mpz_class& d) {
  if (d < 2 || square_part(d) != 1)
    throw std::invalid_argument("requires squarefree radicand");
  return maximal_order(IntPoly({-d, 0, 1}));
}

FieldElem fundamental_unit_quadratic(const NumberField& K) {
  QuadData qd = analyze(K);
  SurdCF cf{qd.t, qd.t == 1 ? 2 : 1, qd.D, sqrt(qd.D)};
  mpz_class p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  for (int i = 0; i < 1000; ++i) {
    mpz_class a = cf.next();
    mpz_class p = a * p1 + p2, q = a * q1 + q2;
    FieldElem u =
        elem_scale(qd.omega, q) + elem_from_rational(K, mpq_class(p - q * qd.t));
    if (abs(norm(u)) == 1 && embedding_cmp_mpq(u, 1, 1) > 0) return u;
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
  throw std::logic_error("fundamental unit search exceeded iteration bound");
}

std::vector<FieldElem> quadratic_indecomposables(const NumberField& K) {
  QuadData qd = analyze(K);
  std::vector<FieldElem> cand;
  cand.push_back(elem_one(K));
  auto add_pair = [&](const FieldElem& base, int t) {
    return [&cand, &base, t, &K](const mpz_class& p, const mpz_class& q) {
      FieldElem x =
          elem_scale(base, q) + elem_from_rational(K, mpq_class(p - q * t));
      cand.push_back(x);
      cand.push_back(elem_from_rational(K, trace(x)) - x);
    };
  };
  semiconvergent_pairs(SurdCF{qd.t, qd.t == 1 ? 2 : 1, qd.D, sqrt(qd.D)},
                       add_pair(qd.omega, qd.t));
  if (qd.t == 1)
    semiconvergent_pairs(SurdCF{0, 1, qd.D, sqrt(qd.D)}, add_pair(qd.sqrt_d, 0));

  std::sort(cand.begin(), cand.end(), trace_lex_less);
  cand.erase(std::unique(cand.begin(), cand.end(), coords_equal), cand.end());

  FieldElem eps = fundamental_unit_quadratic(K);
  FieldElem eps2 = eps * eps;
  FieldElem eps2_inv = elem_from_rational(K, trace(eps2)) - eps2;

  std::vector<FieldElem> reps;
  for (const FieldElem& x : cand) {
    if (!is_totally_positive(x) || !is_indecomposable(x)) continue;
    FieldElem r = orbit_canonical(x, eps2, eps2_inv);
    bool seen = false;
    for (const FieldElem& prev : reps)
      if (coords_equal(prev, r)) seen = true;
    if (!seen) reps.push_back(r);
  }
  std::sort(reps.begin(), reps.end(), trace_lex_less);
  return reps;
}

}  // namespace totreal
