// Exhaustive enumeration of monic irreducible integer polynomials whose
// roots are totally real and confined to (0, 7+sqrt(6)), and reduction of
// the resulting list to one field per isomorphism class.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "totreal/exact/intpoly.hpp"
#include "totreal/exact/surd.hpp"
#include "totreal/numfield/field.hpp"

namespace totreal {

// Search window for robinson_enumerate.  All root-location decisions are
// exact; the upper root bound is the quadratic surd 7+sqrt(6).
struct RobinsonConfig {
  int degree = 3;                // 2, 3 or 4
  long trace_min = 5;            // inclusive
  long trace_max = 19;           // inclusive
  // Demand a root strictly inside (0, 1).  Off by default: the reference
  // counts for these windows (2885 cubics, 190084 quartics) come from the
  // enumeration without the unit-interval condition, which the later
  // field-classification stages impose on their own.  This is the single
  // boundary-convention toggle; enabling it shrinks the cubic list to 1554.
  bool require_unit_root = false;
  // When set, roots are admitted on the closed window [0, 7+sqrt(6)] and
  // the unit-interval condition reads [0, 1].  Irreducibility already rules
  // out rational roots and the bound itself is irrational, so for the lists
  // produced here both conventions agree; the flag exists to make the
  // convention explicit and testable.
  bool closed_boundaries = false;

  QuadSurd root_upper = QuadSurd(7, 1, 6);
};

// Trace windows used throughout: degree 3 -> [5, 19], degree 4 -> [7, 29],
// degree 2 -> [4, 18] (cross-checks only).
RobinsonConfig default_robinson_config(int degree);

// All monic irreducible totally real f of the configured degree with every
// root strictly inside (0, root_upper), at least one root strictly inside
// (0, 1) when required, and trace within the window.  Output is sorted by
// coefficient vector (constant term first) and contains no duplicates.
std::vector<IntPoly> robinson_enumerate(const RobinsonConfig& cfg);

// One field per isomorphism class of the fields generated by the input
// polynomials.  Records are grouped by (degree, discriminant) and split by
// explicit isomorphism tests inside each group; the representative
// polynomial is the smallest group member by coefficient vector.
struct FieldRecord {
  int degree = 0;
  mpz_class disc;
  IntPoly poly;      // canonical defining polynomial for the class
  long members = 0;  // input polynomials generating this class
};

// Sorted by (degree, disc, coefficient vector).  Each input polynomial must
// be monic irreducible.
std::vector<FieldRecord> dedup_fields(const std::vector<IntPoly>& polys);

// Field of a record, built fresh on demand.
NumberField record_field(const FieldRecord& rec);

}  // namespace totreal
