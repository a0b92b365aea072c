#include "totreal/exact/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace totreal {

static const mpz_class kZero = 0;

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::x() { return IntPoly({mpz_class(0), mpz_class(1)}); }

IntPoly IntPoly::constant(const mpz_class& v) {
  if (v == 0) return IntPoly();
  return IntPoly({v});
}

IntPoly IntPoly::from_coeffs(std::vector<long> coeffs) {
  std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::parse(const std::string& s) {
  std::vector<mpz_class> c;
  std::string token;
  std::istringstream is(s);
  bool any = false;
  while (std::getline(is, token, ',')) {
    size_t b = token.find_first_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("bad coefficient string");
    size_t e = token.find_last_not_of(" \t");
    token = token.substr(b, e - b + 1);
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), token.c_str(), 10) != 0)
      throw std::invalid_argument("bad coefficient string");
    c.push_back(v);
    any = true;
  }
  if (!any) throw std::invalid_argument("bad coefficient string");
  return IntPoly(std::move(c));
}

const mpz_class& IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const mpz_class& IntPoly::lc() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const mpz_class& k) const {
  if (k == 0) return IntPoly();
  IntPoly r = *this;
  for (auto& v : r.c_) v *= k;
  return r;
}

IntPoly IntPoly::shifted_arg(const mpz_class& a) const {
  IntPoly r;
  IntPoly lin({a, mpz_class(1)});
  for (int i = degree(); i >= 0; --i) r = r * lin + constant(coeff(i));
  return r;
}

IntPoly IntPoly::negated_arg() const {
  IntPoly r = *this;
  for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

mpz_class IntPoly::eval_z(const mpz_class& x) const {
  mpz_class r = 0;
  for (int i = degree(); i >= 0; --i) r = r * x + coeff(i);
  return r;
}

mpq_class IntPoly::eval_q(const mpq_class& x) const {
  mpq_class r = 0;
  for (int i = degree(); i >= 0; --i) r = r * x + mpq_class(coeff(i));
  return r;
}

int IntPoly::sign_at_mpq(const mpq_class& x) const {
  // sign of q^d * f(p/q) with q > 0, evaluated wholly over Z
  const mpz_class& p = x.get_num();
  const mpz_class& q = x.get_den();
  mpz_class acc = 0, qp = 1;
  for (int i = degree(); i >= 0; --i) {
    acc = acc * p + coeff(i) * qp;
    if (i > 0) qp *= q;
  }
  return sgn(acc);
}

int IntPoly::sign_at_dyadic(const Dyadic& x) const { return eval_dyadic(x).sign(); }

Dyadic IntPoly::eval_dyadic(const Dyadic& x) const {
  Dyadic r(0);
  for (int i = degree(); i >= 0; --i) r = r * x + Dyadic(coeff(i));
  return r;
}

DyadicInterval IntPoly::interval_eval(const DyadicInterval& x) const {
  DyadicInterval r{Dyadic(0)};
  for (int i = degree(); i >= 0; --i)
    r = r * x + DyadicInterval(Dyadic(coeff(i)));
  return r;
}

IntPoly IntPoly::derivative() const {
  if (degree() <= 0) return IntPoly();
  std::vector<mpz_class> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(r));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  mpz_class g = content();
  if (g == 0 || g == 1) return *this;
  IntPoly r = *this;
  for (auto& v : r.c_) v /= g;
  return r;
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& a, const IntPoly& b) {
  if (!b.is_monic()) throw std::invalid_argument("divisor must be monic");
  IntPoly r = a;
  int db = b.degree();
  if (a.degree() < db) return {IntPoly(), r};
  std::vector<mpz_class> q(static_cast<size_t>(a.degree() - db + 1), mpz_class(0));
  while (r.degree() >= db) {
    int k = r.degree() - db;
    mpz_class cf = r.lc();
    q[static_cast<size_t>(k)] = cf;
    for (int i = 0; i <= db; ++i)
      r.c_[static_cast<size_t>(i + k)] -= cf * b.coeff(i);
    r.trim();
  }
  return {IntPoly(std::move(q)), r};
}

std::optional<IntPoly> IntPoly::try_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  IntPoly r = a;
  int db = b.degree();
  std::vector<mpz_class> q(static_cast<size_t>(a.degree() - db + 1), mpz_class(0));
  while (r.degree() >= db) {
    mpz_class cf, rem;
    mpz_tdiv_qr(cf.get_mpz_t(), rem.get_mpz_t(), r.lc().get_mpz_t(), b.lc().get_mpz_t());
    if (rem != 0) return std::nullopt;
    int k = r.degree() - db;
    q[static_cast<size_t>(k)] = cf;
    for (int i = 0; i <= db; ++i)
      r.c_[static_cast<size_t>(i + k)] -= cf * b.coeff(i);
    r.trim();
  }
  if (!r.is_zero()) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly IntPoly::pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo-remainder by zero");
  IntPoly r = a;
  int db = b.degree();
  if (r.degree() < db) return r;
  const mpz_class& lb = b.lc();
  int steps = r.degree() - db + 1;
  for (int s = 0; s < steps && r.degree() >= db; ++s) {
    int k = r.degree() - db;
    mpz_class cf = r.lc();
    for (auto& v : r.c_) v *= lb;
    for (int i = 0; i <= db; ++i)
      r.c_[static_cast<size_t>(i + k)] -= cf * b.coeff(i);
    r.trim();
  }
  return r;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly A = a.primitive_part(), B = b.primitive_part();
  if (A.is_zero()) {
    if (B.is_zero()) return IntPoly();
    return B.lc() < 0 ? -B : B;
  }
  if (B.is_zero()) return A.lc() < 0 ? -A : A;
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    IntPoly r = pseudo_rem(A, B).primitive_part();
    A = B;
    B = r;
  }
  return A.lc() < 0 ? -A : A;
}

IntPoly IntPoly::squarefree_part() const {
  if (degree() <= 1) return *this;
  IntPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return *this;
  auto q = try_divide(*this, g);
  if (!q) {
    // primitive-part mismatch: divide out content first, then restore sign
    IntPoly pp = primitive_part();
    q = try_divide(pp, g);
    if (!q) throw std::logic_error("squarefree part division failed");
  }
  return *q;
}

mpz_class IntPoly::resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int da = a.degree(), db = b.degree();
  if (da == 0) return pow_mpz(a.lc(), static_cast<unsigned long>(db));
  if (db == 0) return pow_mpz(b.lc(), static_cast<unsigned long>(da));
  int n = da + db;
  std::vector<std::vector<mpz_class>> m(static_cast<size_t>(n),
                                        std::vector<mpz_class>(static_cast<size_t>(n), mpz_class(0)));
  for (int r = 0; r < db; ++r)
    for (int j = 0; j <= da; ++j) m[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = a.coeff(da - j);
  for (int r = 0; r < da; ++r)
    for (int j = 0; j <= db; ++j)
      m[static_cast<size_t>(db + r)][static_cast<size_t>(r + j)] = b.coeff(db - j);
  return bareiss_det(std::move(m));
}

mpz_class IntPoly::discriminant() const {
  int d = degree();
  if (d < 1) throw std::invalid_argument("discriminant needs degree >= 1");
  if (d == 1) return 1;
  mpz_class r = resultant(*this, derivative());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), lc().get_mpz_t());
  if (((static_cast<long>(d) * (d - 1)) / 2) % 2 == 1) q = -q;
  return q;
}

mpz_class IntPoly::root_bound_pow2() const {
  if (degree() < 1) throw std::invalid_argument("root bound needs degree >= 1");
  mpz_class mx = 0;
  for (int i = 0; i < degree(); ++i) {
    mpz_class a = abs(coeff(i));
    if (a > mx) mx = a;
  }
  mpz_class la = abs(lc());
  mpz_class t;
  mpz_cdiv_q(t.get_mpz_t(), mx.get_mpz_t(), la.get_mpz_t());
  t += 1;  // all roots have modulus <= 1 + max|c_i|/|lc|
  size_t k = mpz_sizeinbase(t.get_mpz_t(), 2);
  return shl(1, k);
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& v = coeff(i);
    if (v == 0) continue;
    mpz_class a = abs(v);
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    bool show_coeff = (a != 1) || i == 0;
    if (show_coeff) os << a.get_str();
    if (i > 0) {
      if (show_coeff) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string IntPoly::coeff_list() const {
  std::ostringstream os;
  int d = std::max(degree(), 0);
  for (int i = 0; i <= d; ++i) {
    if (i) os << ",";
    os << coeff(i).get_str();
  }
  return os.str();
}

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

mpz_class pow_mpz(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace totreal
