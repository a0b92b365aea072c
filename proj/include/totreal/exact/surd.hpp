// Exact arithmetic in Q(sqrt(D)) for a positive non-square integer D:
// values a + b*sqrt(D) with rational a, b.  Signs and comparisons are exact.
#pragma once

#include <gmpxx.h>

#include <string>

#include "totreal/exact/intpoly.hpp"

namespace totreal {

class QuadSurd {
 public:
  QuadSurd() : a_(0), b_(0), d_(2) {}
  QuadSurd(mpq_class a, mpq_class b, mpz_class d);

  const mpq_class& rat() const { return a_; }
  const mpq_class& coef() const { return b_; }
  const mpz_class& radicand() const { return d_; }

  int sign() const;
  bool is_rational() const { return b_ == 0; }

  QuadSurd operator-() const { return QuadSurd(-a_, -b_, d_); }
  QuadSurd operator+(const QuadSurd& o) const;
  QuadSurd operator-(const QuadSurd& o) const;
  QuadSurd operator*(const QuadSurd& o) const;
  QuadSurd operator+(const mpq_class& q) const { return QuadSurd(a_ + q, b_, d_); }
  QuadSurd operator-(const mpq_class& q) const { return QuadSurd(a_ - q, b_, d_); }
  QuadSurd scaled(const mpq_class& q) const { return QuadSurd(a_ * q, b_ * q, d_); }
  QuadSurd conj() const { return QuadSurd(a_, -b_, d_); }
  QuadSurd inverse() const;

  mpq_class norm() const { return a_ * a_ - b_ * b_ * d_; }
  mpq_class trace() const { return 2 * a_; }

  int cmp(const QuadSurd& o) const { return (*this - o).sign(); }
  int cmp_mpq(const mpq_class& q) const { return QuadSurd(a_ - q, b_, d_).sign(); }
  bool operator==(const QuadSurd& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }

  std::string str() const;

 private:
  mpq_class a_, b_;
  mpz_class d_;
};

// Exact sign of f(a + b*sqrt(D)) via Horner in Q(sqrt(D)).
int sign_at_surd(const IntPoly& f, const QuadSurd& x);
QuadSurd eval_at_surd(const IntPoly& f, const QuadSurd& x);

}  // namespace totreal
