// Exact dyadic rationals m*2^e and closed intervals over them.
// Endpoint arithmetic (+, -, *) is exact and never rounds, so certified
// enclosures widen only through genuine interval dependency.  Explicit
// outward rounding is available via round_down/round_up/coarsen.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace totreal {

mpz_class shl(const mpz_class& x, unsigned long k);
mpz_class shr_floor(const mpz_class& x, unsigned long k);
mpz_class shr_ceil(const mpz_class& x, unsigned long k);

class Dyadic {
 public:
  Dyadic() : m_(0), e_(0) {}
  Dyadic(long v) : m_(v), e_(0) { normalize(); }
  explicit Dyadic(const mpz_class& m) : m_(m), e_(0) { normalize(); }
  Dyadic(const mpz_class& m, long e) : m_(m), e_(e) { normalize(); }

  const mpz_class& mantissa() const { return m_; }
  long exponent() const { return e_; }
  bool is_zero() const { return m_ == 0; }
  int sign() const { return sgn(m_); }

  Dyadic operator-() const;
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;
  Dyadic times_pow2(long k) const;
  Dyadic abs() const;

  mpq_class to_mpq() const;
  double to_double() const;
  mpz_class floor_mpz() const;
  std::string str() const;

  // Total order; also exact comparison against arbitrary rationals.
  static int cmp(const Dyadic& a, const Dyadic& b);
  static int cmp_mpq(const Dyadic& a, const mpq_class& q);

  // Tightest dyadics on the 2^-bits grid enclosing q.
  static Dyadic lower_of_mpq(const mpq_class& q, long bits);
  static Dyadic upper_of_mpq(const mpq_class& q, long bits);
  static bool mpq_is_dyadic(const mpq_class& q);
  static Dyadic of_dyadic_mpq(const mpq_class& q);  // throws unless exact

  // Directed rounding to a mantissa of at most `bits` bits.
  Dyadic round_down(long bits) const;
  Dyadic round_up(long bits) const;

 private:
  void normalize();
  mpz_class m_;
  long e_;
};

inline bool operator<(const Dyadic& a, const Dyadic& b) { return Dyadic::cmp(a, b) < 0; }
inline bool operator<=(const Dyadic& a, const Dyadic& b) { return Dyadic::cmp(a, b) <= 0; }
inline bool operator>(const Dyadic& a, const Dyadic& b) { return Dyadic::cmp(a, b) > 0; }
inline bool operator>=(const Dyadic& a, const Dyadic& b) { return Dyadic::cmp(a, b) >= 0; }
inline bool operator==(const Dyadic& a, const Dyadic& b) { return Dyadic::cmp(a, b) == 0; }
inline bool operator!=(const Dyadic& a, const Dyadic& b) { return Dyadic::cmp(a, b) != 0; }

class DyadicInterval {
 public:
  DyadicInterval() : lo_(), hi_() {}
  explicit DyadicInterval(const Dyadic& p) : lo_(p), hi_(p) {}
  DyadicInterval(const Dyadic& lo, const Dyadic& hi) : lo_(lo), hi_(hi) {
    if (lo_ > hi_) throw std::invalid_argument("interval endpoints out of order");
  }
  // Enclosure of an arbitrary rational on the 2^-bits grid (exact if dyadic).
  static DyadicInterval of_mpq(const mpq_class& q, long bits = 64);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  bool is_point() const { return lo_ == hi_; }
  Dyadic width() const { return hi_ - lo_; }
  Dyadic mid() const { return (lo_ + hi_).times_pow2(-1); }

  // +1 if entirely positive, -1 if entirely negative, 0 if 0 may lie inside.
  int sign() const;
  // +1 if entirely above q, -1 if entirely below, 0 if q may lie inside.
  int cmp_mpq(const mpq_class& q) const;
  int cmp_dyadic(const Dyadic& d) const;
  bool contains(const Dyadic& d) const { return lo_ <= d && d <= hi_; }

  DyadicInterval operator-() const { return {-hi_, -lo_}; }
  DyadicInterval operator+(const DyadicInterval& o) const { return {lo_ + o.lo_, hi_ + o.hi_}; }
  DyadicInterval operator-(const DyadicInterval& o) const { return {lo_ - o.hi_, hi_ - o.lo_}; }
  DyadicInterval operator*(const DyadicInterval& o) const;
  DyadicInterval square() const;
  DyadicInterval abs_val() const;

  Dyadic abs_upper() const;  // sup |x| over the interval
  Dyadic abs_lower() const;  // inf |x| (zero if the interval straddles 0)

  // Outward rounding of both endpoints to at most `bits` mantissa bits.
  DyadicInterval coarsen(long bits) const;

  static DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b);
  static DyadicInterval max_of(const DyadicInterval& a, const DyadicInterval& b);

  double to_double() const { return mid().to_double(); }
  std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

 private:
  Dyadic lo_, hi_;
};

// Certified enclosure of sqrt over a nonnegative interval, outward on the
// 2^-bits grid.  Throws if the interval has a negative lower endpoint.
DyadicInterval sqrt_enclosure(const DyadicInterval& x, long bits);
Dyadic sqrt_upper(const Dyadic& x, long bits);
Dyadic sqrt_lower(const Dyadic& x, long bits);

// Certified enclosure of 1/x for an interval with 0 strictly outside.
DyadicInterval invert_enclosure(const DyadicInterval& x, long bits);

}  // namespace totreal
