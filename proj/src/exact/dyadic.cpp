#include "totreal/exact/dyadic.hpp"

#include <sstream>

namespace totreal {

mpz_class shl(const mpz_class& x, unsigned long k) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

mpz_class shr_floor(const mpz_class& x, unsigned long k) {
  mpz_class r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

mpz_class shr_ceil(const mpz_class& x, unsigned long k) {
  mpz_class r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

void Dyadic::normalize() {
  if (m_ == 0) {
    e_ = 0;
    return;
  }
  unsigned long tz = mpz_scan1(m_.get_mpz_t(), 0);
  if (tz > 0) {
    m_ = shr_floor(m_, tz);  // exact: low bits are zero
    e_ += static_cast<long>(tz);
  }
}

Dyadic Dyadic::operator-() const {
  Dyadic r;
  r.m_ = -m_;
  r.e_ = e_;
  return r;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  if (m_ == 0) return o;
  if (o.m_ == 0) return *this;
  long e = std::min(e_, o.e_);
  mpz_class a = shl(m_, static_cast<unsigned long>(e_ - e));
  mpz_class b = shl(o.m_, static_cast<unsigned long>(o.e_ - e));
  return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
  return Dyadic(m_ * o.m_, e_ + o.e_);
}

Dyadic Dyadic::times_pow2(long k) const {
  if (m_ == 0) return *this;
  Dyadic r;
  r.m_ = m_;
  r.e_ = e_ + k;
  return r;
}

Dyadic Dyadic::abs() const {
  Dyadic r;
  r.m_ = ::abs(m_);
  r.e_ = e_;
  return r;
}

mpq_class Dyadic::to_mpq() const {
  mpq_class q;
  if (e_ >= 0) {
    q = mpq_class(shl(m_, static_cast<unsigned long>(e_)));
  } else {
    q = mpq_class(m_, shl(1, static_cast<unsigned long>(-e_)));
    q.canonicalize();
  }
  return q;
}

double Dyadic::to_double() const {
  // mpq conversion handles exponent scaling without overflow surprises
  return to_mpq().get_d();
}

mpz_class Dyadic::floor_mpz() const {
  if (e_ >= 0) return shl(m_, static_cast<unsigned long>(e_));
  return shr_floor(m_, static_cast<unsigned long>(-e_));
}

std::string Dyadic::str() const {
  std::ostringstream os;
  os << m_.get_str();
  if (e_ != 0) os << "*2^" << e_;
  return os.str();
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  // Same nonzero sign: compare by bit-length of the value first.  For a
  // normalized dyadic the value magnitude lies in [2^(L-1), 2^L) with
  // L = bits(mantissa) + exponent.
  long la = static_cast<long>(mpz_sizeinbase(a.m_.get_mpz_t(), 2)) + a.e_;
  long lb = static_cast<long>(mpz_sizeinbase(b.m_.get_mpz_t(), 2)) + b.e_;
  if (la != lb) return ((la < lb) ? -1 : 1) * sa;
  // Equal bit-length: exponent gap is bounded by mantissa sizes, align safely.
  long e = std::min(a.e_, b.e_);
  mpz_class ma = shl(a.m_, static_cast<unsigned long>(a.e_ - e));
  mpz_class mb = shl(b.m_, static_cast<unsigned long>(b.e_ - e));
  return ::cmp(ma, mb);
}

int Dyadic::cmp_mpq(const Dyadic& a, const mpq_class& q) {
  // compare m*2^e with n/d, d > 0: compare m*2^e*d with n
  mpz_class lhs = a.m_ * q.get_den();
  mpz_class rhs = q.get_num();
  if (a.e_ >= 0)
    lhs = shl(lhs, static_cast<unsigned long>(a.e_));
  else
    rhs = shl(rhs, static_cast<unsigned long>(-a.e_));
  return ::cmp(lhs, rhs);
}

Dyadic Dyadic::lower_of_mpq(const mpq_class& q, long bits) {
  if (bits < 0) throw std::invalid_argument("negative grid resolution");
  // floor(q * 2^bits) * 2^-bits
  mpz_class num = shl(q.get_num(), static_cast<unsigned long>(bits));
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return Dyadic(k, -bits);
}

Dyadic Dyadic::upper_of_mpq(const mpq_class& q, long bits) {
  if (bits < 0) throw std::invalid_argument("negative grid resolution");
  mpz_class num = shl(q.get_num(), static_cast<unsigned long>(bits));
  mpz_class k;
  mpz_cdiv_q(k.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return Dyadic(k, -bits);
}

bool Dyadic::mpq_is_dyadic(const mpq_class& q) {
  const mpz_class& d = q.get_den();
  if (d == 1) return true;
  return mpz_popcount(d.get_mpz_t()) == 1;
}

Dyadic Dyadic::of_dyadic_mpq(const mpq_class& q) {
  if (!mpq_is_dyadic(q)) throw std::invalid_argument("rational is not dyadic");
  const mpz_class& d = q.get_den();
  if (d == 1) return Dyadic(q.get_num());
  unsigned long k = mpz_sizeinbase(d.get_mpz_t(), 2) - 1;
  return Dyadic(q.get_num(), -static_cast<long>(k));
}

Dyadic Dyadic::round_down(long bits) const {
  if (bits < 1) bits = 1;
  long len = m_ == 0 ? 0 : static_cast<long>(mpz_sizeinbase(m_.get_mpz_t(), 2));
  if (len <= bits) return *this;
  unsigned long s = static_cast<unsigned long>(len - bits);
  return Dyadic(shr_floor(m_, s), e_ + static_cast<long>(s));
}

Dyadic Dyadic::round_up(long bits) const {
  if (bits < 1) bits = 1;
  long len = m_ == 0 ? 0 : static_cast<long>(mpz_sizeinbase(m_.get_mpz_t(), 2));
  if (len <= bits) return *this;
  unsigned long s = static_cast<unsigned long>(len - bits);
  return Dyadic(shr_ceil(m_, s), e_ + static_cast<long>(s));
}

DyadicInterval DyadicInterval::of_mpq(const mpq_class& q, long bits) {
  if (Dyadic::mpq_is_dyadic(q)) {
    return DyadicInterval(Dyadic::of_dyadic_mpq(q));
  }
  return DyadicInterval(Dyadic::lower_of_mpq(q, bits), Dyadic::upper_of_mpq(q, bits));
}

int DyadicInterval::sign() const {
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  return 0;
}

int DyadicInterval::cmp_mpq(const mpq_class& q) const {
  if (Dyadic::cmp_mpq(lo_, q) > 0) return 1;
  if (Dyadic::cmp_mpq(hi_, q) < 0) return -1;
  return 0;
}

int DyadicInterval::cmp_dyadic(const Dyadic& d) const {
  if (lo_ > d) return 1;
  if (hi_ < d) return -1;
  return 0;
}

DyadicInterval DyadicInterval::operator*(const DyadicInterval& o) const {
  Dyadic c[4] = {lo_ * o.lo_, lo_ * o.hi_, hi_ * o.lo_, hi_ * o.hi_};
  Dyadic mn = c[0], mx = c[0];
  for (int i = 1; i < 4; ++i) {
    if (c[i] < mn) mn = c[i];
    if (c[i] > mx) mx = c[i];
  }
  return {mn, mx};
}

DyadicInterval DyadicInterval::square() const {
  if (lo_.sign() >= 0) return {lo_ * lo_, hi_ * hi_};
  if (hi_.sign() <= 0) return {hi_ * hi_, lo_ * lo_};
  Dyadic a = lo_ * lo_, b = hi_ * hi_;
  return {Dyadic(0), a > b ? a : b};
}

DyadicInterval DyadicInterval::abs_val() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return {-hi_, -lo_};
  Dyadic a = -lo_;
  return {Dyadic(0), a > hi_ ? a : hi_};
}

Dyadic DyadicInterval::abs_upper() const {
  Dyadic a = lo_.abs(), b = hi_.abs();
  return a > b ? a : b;
}

Dyadic DyadicInterval::abs_lower() const {
  if (lo_.sign() <= 0 && hi_.sign() >= 0) return Dyadic(0);
  Dyadic a = lo_.abs(), b = hi_.abs();
  return a < b ? a : b;
}

DyadicInterval DyadicInterval::coarsen(long bits) const {
  return {lo_.round_down(bits), hi_.round_up(bits)};
}

DyadicInterval DyadicInterval::hull(const DyadicInterval& a, const DyadicInterval& b) {
  return {a.lo_ < b.lo_ ? a.lo_ : b.lo_, a.hi_ > b.hi_ ? a.hi_ : b.hi_};
}

DyadicInterval DyadicInterval::max_of(const DyadicInterval& a, const DyadicInterval& b) {
  return {a.lo_ > b.lo_ ? a.lo_ : b.lo_, a.hi_ > b.hi_ ? a.hi_ : b.hi_};
}

static mpz_class isqrt_floor(const mpz_class& x) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

Dyadic sqrt_lower(const Dyadic& x, long bits) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative value");
  if (x.is_zero()) return Dyadic(0);
  // largest k*2^-bits with (k*2^-bits)^2 <= x, via k = floor(sqrt(floor(x*4^bits)))
  long e2 = x.exponent() + 2 * bits;
  mpz_class scaled = e2 >= 0 ? shl(x.mantissa(), static_cast<unsigned long>(e2))
                             : shr_floor(x.mantissa(), static_cast<unsigned long>(-e2));
  return Dyadic(isqrt_floor(scaled), -bits);
}

Dyadic sqrt_upper(const Dyadic& x, long bits) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative value");
  if (x.is_zero()) return Dyadic(0);
  long e2 = x.exponent() + 2 * bits;
  mpz_class scaled = e2 >= 0 ? shl(x.mantissa(), static_cast<unsigned long>(e2))
                             : shr_ceil(x.mantissa(), static_cast<unsigned long>(-e2));
  mpz_class k = isqrt_floor(scaled);
  if (k * k < scaled) k += 1;
  return Dyadic(k, -bits);
}

DyadicInterval sqrt_enclosure(const DyadicInterval& x, long bits) {
  if (x.lo().sign() < 0) throw std::domain_error("sqrt of interval with negative endpoint");
  return {sqrt_lower(x.lo(), bits), sqrt_upper(x.hi(), bits)};
}

DyadicInterval invert_enclosure(const DyadicInterval& x, long bits) {
  if (x.sign() == 0) throw std::domain_error("inverse of interval containing zero");
  mpq_class a = x.lo().to_mpq(), b = x.hi().to_mpq();
  mpq_class ia = 1 / a, ib = 1 / b;
  return {Dyadic::lower_of_mpq(ib, bits), Dyadic::upper_of_mpq(ia, bits)};
}

}  // namespace totreal
