// Indecomposable totally positive integers, continued-fraction machinery for
// real quadratic fields, bounded unit search, and representatives of
// bounded-norm classes modulo squares of units.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "totreal/numfield/field.hpp"

namespace totreal {

struct UnitSystem {
  const NumberField* K = nullptr;
  std::vector<FieldElem> generators;  // norm +-1 each, no torsion, independent
  bool complete = false;  // certified to generate the units modulo torsion
};

struct ClassReps {
  const NumberField* K = nullptr;
  mpz_class norm_bound;
  std::vector<FieldElem> reps;  // totally positive, norm <= norm_bound,
                                // pairwise inequivalent mod unit squares
  bool conditional = false;     // completeness rests on an uncertified unit system
  mpq_class search_bound;       // house radius at which the class list stabilized
};

struct FullDecomposition {
  FieldElem bounded;               // totally positive, norm <= field discriminant
  std::vector<FieldElem> squares;  // input = bounded + sum of their squares
};

// True iff no totally positive x has every sigma_i(x) strictly below
// sigma_i(a); decided by a complete certified box search.
// Throws std::domain_error("not totally positive") unless a is, and
// std::invalid_argument("requires integral element") unless a is integral.
bool is_indecomposable(const FieldElem& a, long limit = 10000000);

// Maximal order of Q(sqrt(D)); throws
// std::invalid_argument("requires squarefree radicand") unless D is a
// squarefree integer > 1.
NumberField quadratic_field(const mpz_class& d);

// Fundamental unit > 1 of a real quadratic field, from the continued
// fraction of (t + sqrt(D))/2; norm +-1 is verified exactly.
FieldElem fundamental_unit_quadratic(const NumberField& K);

// Complete list of indecomposables up to multiplication by unit squares,
// generated from continued-fraction semiconvergents and certified
// element-by-element; canonical class representatives (smallest trace, ties
// toward the lexicographically larger coordinates), sorted by trace then
// coordinates.
std::vector<FieldElem> quadratic_indecomposables(const NumberField& K);

// Every unit with house <= house_bound, reduced to an independent generating
// subset of the group they generate.  complete is only ever set in degree
// <= 2 (degree 2: the continued-fraction fundamental unit inside the bound).
UnitSystem unit_search(const NumberField& K, const mpq_class& house_bound,
                       long limit = 10000000);

// Does b equal u^2 * a for some u in the group the generators produce?
// Exponents are guessed from logarithmic embeddings, then verified exactly.
bool same_class_mod_unit_squares(const FieldElem& a, const FieldElem& b,
                                 const UnitSystem& units);

// Representatives of the totally positive elements of norm <= n modulo unit
// squares, each class keeping its smallest (trace, coordinates) member; the
// search radius doubles until a pass adds no class.
// Throws std::invalid_argument("units required") when the unit system is
// empty in degree >= 2.
ClassReps class_reps_norm_le(const NumberField& K, const mpz_class& n,
                             const UnitSystem& units, long limit = 10000000);

// gamma = bounded + sum of squares, extracting square_below witnesses until
// the remainder has norm <= disc(K).
FullDecomposition decompose_full(const FieldElem& gamma, long limit = 10000000);

}  // namespace totreal
