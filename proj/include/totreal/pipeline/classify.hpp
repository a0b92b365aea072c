// Field classification: which totally real fields of degree at most 4 have
// every element of twice the totally positive maximal-order cone equal to a
// sum of integral squares.  Candidates come from the window enumeration
// (plus quadratic compositums in degree 4); a basis-element sieve excludes
// most, a bounded counterexample search over class representatives settles
// the rest, and survivors receive an explicit certificate.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "totreal/pipeline/robinson.hpp"
#include "totreal/sosrep/sosrep.hpp"

namespace totreal {

// All real quadratic fields generated by a quadratic integer whose house is
// strictly below 2+sqrt(6); comparisons exact, result sorted by
// discriminant.  There are 24 of them.
std::vector<NumberField> quadratic_generators_with_small_house();

// Canonical label "d<degree>-<disc>-<c0_c1_..._cd>" for a field given by
// its canonical defining polynomial.
std::string field_label(int degree, const mpz_class& disc, const IntPoly& poly);

// One candidate field after classification.  stage is one of
//   "sieve"  - excluded: twice a shifted basis element is not a sum of squares
//   "search" - excluded: a bounded class representative furnished a
//              counterexample
//   "pass"   - certified: twice every class representative with norm at most
//              the discriminant is a sum of squares
struct FieldOutcome {
  std::string label;
  int degree = 0;
  mpz_class disc;
  IntPoly poly;
  std::string stage;
  // Basis coordinates of alpha with 2*alpha totally positive yet not a sum
  // of squares; empty for passing fields.
  std::vector<std::string> counterexample;
  bool conditional = false;  // certificate relies on an unverified unit system
  long reps_checked = 0;     // representatives certified for passing fields
  bool composite = false;    // member of the quadratic-compositum family
};

struct ClassificationReport {
  int degree = 0;
  long candidates = 0;
  long sieve_excluded = 0;
  long search_excluded = 0;
  long passed = 0;
  // compositum branch tallies (degree 4; zero otherwise)
  long composite_candidates = 0;
  long composite_survivors = 0;  // composites past the sieve
  long composite_excluded = 0;   // composites excluded by the search
  std::vector<FieldOutcome> records;  // ordered by (disc, label)
};

struct ClassifyOptions {
  std::string checkpoint_path;   // empty disables checkpointing
  long checkpoint_every = 1000;  // fields between checkpoint writes
  long limit = 10000000;         // per-enumeration step budget
  const PythagorasTable* table = nullptr;  // null: built-in caps
  // Precomputed window-enumeration fields (degree 3/4); when null they are
  // rebuilt from scratch.
  const std::vector<FieldRecord>* fields = nullptr;
};

// Full pipeline for one degree.  Throws std::invalid_argument("unsupported
// degree") outside 2..4.  Resource errors are rethrown with the offending
// field's label prefixed; a checkpoint file makes the run restartable.
ClassificationReport classify(int degree, const ClassifyOptions& opt = {});

// Per-field minima for the quartic trace experiment: t_a is the least trace
// of a totally positive integer outside Q(sqrt(d)), t_b the least trace of
// a square of an integer outside Q(sqrt(d)).  Both are certified minimal by
// box searches.
struct TrendRow {
  std::string label;
  mpz_class disc;
  mpz_class t_a;
  mpz_class t_b;
};

struct TrendTable {
  mpz_class d;
  std::vector<TrendRow> rows;  // ascending discriminant
  double slope_ta = 0;         // least-squares slope of log t_a vs log disc
  double slope_tb = 0;         // least-squares slope of log t_b vs log disc
};

// Requires at least 5 fields ("insufficient sample") each containing
// sqrt(d) ("family member lacks the required square root", verified via an
// exact minimal-polynomial search).
TrendTable quartic_trend(const mpz_class& d, const std::vector<NumberField>& family);

// Compositums Q(sqrt(d), sqrt(m)) for the `count` smallest squarefree m
// that give distinct fields, sorted by discriminant.
std::vector<NumberField> quartic_trend_family(const mpz_class& d, int count);

}  // namespace totreal
