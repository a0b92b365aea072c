// Dense univariate polynomials over Z with exact evaluation, division,
// gcd (primitive pseudo-remainder sequence), resultants and discriminants.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "totreal/exact/dyadic.hpp"

namespace totreal {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return constant(1); }
  static IntPoly x();
  static IntPoly constant(const mpz_class& v);
  static IntPoly from_coeffs(std::vector<long> coeffs);
  // "c0,c1,...,cd" with optional whitespace; throws on malformed input
  static IntPoly parse(const std::string& s);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpz_class& coeff(int i) const;
  const mpz_class& lc() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly scaled(const mpz_class& k) const;
  IntPoly shifted_arg(const mpz_class& a) const;  // f(x + a)
  IntPoly negated_arg() const;                    // f(-x)

  mpz_class eval_z(const mpz_class& x) const;
  mpq_class eval_q(const mpq_class& x) const;
  int sign_at_mpq(const mpq_class& x) const;
  int sign_at_dyadic(const Dyadic& x) const;
  Dyadic eval_dyadic(const Dyadic& x) const;
  DyadicInterval interval_eval(const DyadicInterval& x) const;

  IntPoly derivative() const;
  mpz_class content() const;         // nonnegative; 0 only for zero poly
  IntPoly primitive_part() const;    // sign of lc preserved

  // Division by a monic divisor: exact quotient and remainder over Z.
  static std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b);
  // Exact divisibility test over Z[x]; quotient when it exists.
  static std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b);
  // Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
  static IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

  static IntPoly gcd(const IntPoly& a, const IntPoly& b);  // primitive, lc > 0
  IntPoly squarefree_part() const;                         // lc sign preserved
  static mpz_class resultant(const IntPoly& a, const IntPoly& b);
  mpz_class discriminant() const;

  // Power-of-two H with all complex roots of modulus < H (Cauchy bound).
  mpz_class root_bound_pow2() const;

  std::string str() const;         // human-readable, e.g. "x^3 - 4*x - 2"
  std::string coeff_list() const;  // "c0,c1,...,cd"

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Fraction-free determinant of a square integer matrix (Bareiss).
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m);

mpz_class pow_mpz(const mpz_class& b, unsigned long e);

}  // namespace totreal
