// Field isomorphism test: degree and discriminant gates, then a certified
// complete search for a root of the second defining polynomial inside the
// first maximal order (roots are bounded by the largest conjugate).
#include <algorithm>
#include <cstdlib>

#include "totreal/latenum/boxes.hpp"
#include "totreal/numfield/field.hpp"

namespace totreal {

namespace {

bool same_poly(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return false;
  for (int i = 0; i <= a.degree(); ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

}  // namespace

bool fields_isomorphic(const NumberField& k1, const NumberField& k2) {
  if (k1.degree != k2.degree) return false;
  if (k1.disc != k2.disc) return false;
  if (same_poly(k1.min_poly, k2.min_poly)) return true;
  const IntPoly& f = k2.min_poly;
  int d = k1.degree;
  // any root of f lying in O_K1 has all conjugates among the real roots of f
  Dyadic big = k2.embeddings.front().abs_upper();
  Dyadic hi = k2.embeddings.back().abs_upper();
  if (hi > big) big = hi;
  mpq_class radius = big.to_mpq() + 1;
  // a root x has trace = -a_{d-1} and norm = (-1)^d a_0; both are cheap
  // exact filters before the full polynomial evaluation
  mpq_class want_trace = -f.coeff(d - 1);
  mpq_class want_norm = (d % 2 == 0) ? mpq_class(f.coeff(0)) : mpq_class(-f.coeff(0));
  bool found = false;
  enumerate_coords(k1, std::vector<mpq_class>(static_cast<size_t>(d), radius), 10000000,
                   [&](const std::vector<mpz_class>& a) {
                     FieldElem x = elem_from_int_coords(k1, a);
                     if (trace(x) != want_trace || norm(x) != want_norm) return true;
                     FieldElem acc = elem_zero(k1);
                     for (int i = d; i >= 0; --i)
                       acc = acc * x + elem_from_rational(k1, mpq_class(f.coeff(i)));
                     if (!acc.is_zero()) return true;
                     found = true;
                     return false;
                   });
  return found;
}

}  // namespace totreal
