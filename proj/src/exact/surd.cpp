#include "totreal/exact/surd.hpp"

#include <sstream>
#include <stdexcept>

namespace totreal {

QuadSurd::QuadSurd(mpq_class a, mpq_class b, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ <= 0) throw std::invalid_argument("radicand must be positive");
  if (mpz_perfect_square_p(d_.get_mpz_t()))
    throw std::invalid_argument("radicand must not be a perfect square");
}

int QuadSurd::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2*D; equality impossible for
  // non-square D with b != 0
  mpq_class diff = a_ * a_ - b_ * b_ * d_;
  return sgn(diff) * sa;
}

QuadSurd QuadSurd::operator+(const QuadSurd& o) const {
  if (d_ != o.d_) throw std::invalid_argument("mixed radicands");
  return QuadSurd(a_ + o.a_, b_ + o.b_, d_);
}

QuadSurd QuadSurd::operator-(const QuadSurd& o) const {
  if (d_ != o.d_) throw std::invalid_argument("mixed radicands");
  return QuadSurd(a_ - o.a_, b_ - o.b_, d_);
}

QuadSurd QuadSurd::operator*(const QuadSurd& o) const {
  if (d_ != o.d_) throw std::invalid_argument("mixed radicands");
  return QuadSurd(a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + b_ * o.a_, d_);
}

QuadSurd QuadSurd::inverse() const {
  mpq_class n = norm();
  if (n == 0) throw std::domain_error("inverse of zero");
  return QuadSurd(a_ / n, -b_ / n, d_);
}

std::string QuadSurd::str() const {
  std::ostringstream os;
  os << a_.get_str();
  if (b_ != 0) {
    os << (b_ > 0 ? " + " : " - ");
    mpq_class ab = abs(b_);
    if (ab != 1) os << ab.get_str() << "*";
    os << "sqrt(" << d_.get_str() << ")";
  }
  return os.str();
}

QuadSurd eval_at_surd(const IntPoly& f, const QuadSurd& x) {
  QuadSurd acc(mpq_class(0), mpq_class(0), x.radicand());
  for (int i = f.degree(); i >= 0; --i)
    acc = acc * x + mpq_class(f.coeff(i));
  return acc;
}

int sign_at_surd(const IntPoly& f, const QuadSurd& x) { return eval_at_surd(f, x).sign(); }

}  // namespace totreal
