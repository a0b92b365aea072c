// Real-root isolation by Sturm bisection, interval refinement, and exact
// arithmetic-free comparisons for algebraic reals represented as
// (squarefree annihilating polynomial, isolating dyadic interval).
//
// Interval invariants used throughout:
//   - a point interval [v, v] means the value is the dyadic v itself;
//   - a non-point isolating interval contains exactly one root of the
//     annihilator and the annihilator is nonzero at both endpoints.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "totreal/exact/dyadic.hpp"
#include "totreal/exact/intpoly.hpp"
#include "totreal/exact/sturm.hpp"

namespace totreal {

// All real roots of squarefree f, sorted ascending, widths <= 2^-precision.
// Throws std::invalid_argument("requires squarefree polynomial").
std::vector<DyadicInterval> isolate_real_roots(const IntPoly& f, long precision_bits);

// Shrink an isolating interval for a root of f to width <= 2^-bits.
DyadicInterval refine_interval(const IntPoly& f, const DyadicInterval& iv, long bits);

struct AlgReal {
  IntPoly p;           // squarefree annihilator, degree >= 1
  DyadicInterval iv;   // isolating interval per the invariants above

  static AlgReal of_mpq(const mpq_class& q);
  static AlgReal of_mpz(const mpz_class& v) { return of_mpq(mpq_class(v)); }
};

void algreal_refine(AlgReal& a, long bits);
int algreal_sign(AlgReal& a);
int algreal_cmp(AlgReal& a, AlgReal& b);
int algreal_cmp_mpq(AlgReal& a, const mpq_class& q);
int algreal_cmp_dyadic(AlgReal& a, const Dyadic& d);
// Exact sign of h evaluated at the real number a represents.
int sign_at_algreal(const IntPoly& h, AlgReal& a);
double algreal_to_double(AlgReal& a);

// Integer polynomial vanishing at every sum alpha + beta of a root alpha of a
// and a root beta of b (resultant of a(y) and b(x - y), by interpolation).
IntPoly sum_annihilator(const IntPoly& a, const IntPoly& b);

AlgReal algreal_neg(const AlgReal& a);
AlgReal algreal_abs(AlgReal& a);
AlgReal algreal_add(AlgReal a, AlgReal b);
AlgReal algreal_square(AlgReal a);
AlgReal algreal_scale_mpq(AlgReal a, const mpq_class& c);

}  // namespace totreal
