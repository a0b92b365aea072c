// Totally real number fields: maximal order via p-maximalization at primes
// whose square divides the polynomial discriminant, certified real
// embeddings in a fixed ascending order, and exact element queries
// (trace, norm, minimal polynomial, house, total positivity).
#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "totreal/exact/dyadic.hpp"
#include "totreal/exact/intpoly.hpp"
#include "totreal/exact/roots.hpp"
#include "totreal/numfield/qmat.hpp"

namespace totreal {

struct NumberField {
  IntPoly min_poly;  // monic irreducible totally real
  int degree = 0;
  QMat basis;        // row i = integral basis element over 1, theta, ..., theta^(d-1)
  QMat basis_inv;    // power coords -> basis coords
  mpz_class disc;    // field discriminant
  mpz_class index;   // disc(min_poly) = index^2 * disc
  std::vector<DyadicInterval> embeddings;  // ascending real roots of min_poly

  // caches for fast exact/interval element queries
  std::vector<std::vector<std::vector<mpz_class>>> mult;  // mult[i][j] = coords of w_i w_j
  ZMat trace_mat;                                         // Tr(w_i w_j)
  std::vector<mpz_class> basis_trace;                     // Tr(w_i)
  std::vector<std::vector<DyadicInterval>> emb_basis;     // emb_basis[i][k] ~ sigma_k(w_i)
  std::vector<std::vector<double>> emb_basis_d;           // double approximations

  std::string label;  // canonical label once assigned by dedup

  std::string basis_str() const;  // rows as rational coefficient lists
};

// Builds the field for monic f of degree <= 8.  Throws
// std::domain_error("not irreducible") / std::domain_error("not totally real").
NumberField maximal_order(const IntPoly& f);

struct FieldElem {
  const NumberField* K = nullptr;
  std::vector<mpq_class> c;  // coordinates over the integral basis

  bool is_integral() const;
  bool is_zero() const;
  bool operator==(const FieldElem& o) const;
};

FieldElem elem_zero(const NumberField& K);
FieldElem elem_one(const NumberField& K);
FieldElem elem_from_coords(const NumberField& K, std::vector<mpq_class> coords);
FieldElem elem_from_int_coords(const NumberField& K, const std::vector<mpz_class>& coords);
FieldElem elem_from_rational(const NumberField& K, const mpq_class& q);
// element given by a polynomial in theta (power-basis coordinates)
FieldElem elem_from_power_coords(const NumberField& K, const std::vector<mpq_class>& power);
std::vector<mpq_class> power_coords(const FieldElem& a);

FieldElem operator+(const FieldElem& a, const FieldElem& b);
FieldElem operator-(const FieldElem& a, const FieldElem& b);
FieldElem operator-(const FieldElem& a);
FieldElem operator*(const FieldElem& a, const FieldElem& b);
FieldElem elem_scale(const FieldElem& a, const mpq_class& k);

mpq_class trace(const FieldElem& a);
mpq_class norm(const FieldElem& a);
// Primitive integer form of the minimal polynomial (monic when a is integral).
IntPoly element_min_poly(const FieldElem& a);
bool is_proper(const FieldElem& a);

// Certified interval for sigma_k(a), width <= 2^-bits.
DyadicInterval embedding_interval(const FieldElem& a, int k, long bits);
// Exact sign of sigma_k(a).
int embedding_sign(const FieldElem& a, int k);
// Exact sign of sigma_k(a) - t.
int embedding_cmp_mpq(const FieldElem& a, int k, const mpq_class& t);
double embedding_double(const FieldElem& a, int k);

// Characteristic polynomial of the multiplication map (degree d, monic for
// integral a), as a primitive integer polynomial when a is integral.
IntPoly char_poly(const FieldElem& a);

bool is_totally_positive(const FieldElem& a);
// a - b totally positive
bool strictly_dominates(const FieldElem& a, const FieldElem& b);

DyadicInterval house(const FieldElem& a, long precision_bits);
// Exact three-way comparison of house(a) against a nonnegative rational.
int compare_house_mpq(const FieldElem& a, const mpq_class& t);

// Isomorphism test per the box-search method contract.
bool fields_isomorphic(const NumberField& k1, const NumberField& k2);

// Degree-4 field Q(sqrt(D1), sqrt(D2)); throws
// std::invalid_argument("not biquadratic") when D1 == D2 and
// std::invalid_argument("requires squarefree radicand") on non-squarefree input.
NumberField biquadratic_compositum(const mpz_class& d1, const mpz_class& d2);

// shared helpers
void check_same_field(const FieldElem& a, const FieldElem& b);
std::string coords_str(const FieldElem& a);

}  // namespace totreal
