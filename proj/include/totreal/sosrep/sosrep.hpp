// Sums of squares under a Pythagoras-number cap, diagonal-form
// representation, universal-form construction, and finite universality
// spot checks.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "totreal/indecomp/indecomp.hpp"
#include "totreal/numfield/field.hpp"

namespace totreal {

struct DiagonalForm {
  const NumberField* K = nullptr;
  std::vector<FieldElem> coefficients;  // class reps first, then the ones
  int rank = 0;                         // == coefficients.size()
  bool conditional = false;             // inherited from the unit system
};

struct PythagorasTable {
  std::map<int, int> caps;  // degree -> cap on the number of squares
};

const PythagorasTable& default_pythagoras_table();  // {1:4, 2:5, 3:6, 4:7}

// tau as an exact sum of at most m nonzero squares of integers, or nullopt
// as a completeness certificate that no such representation exists.
// Depth-first over candidates x with x^2 below tau, largest house first,
// with infeasible (remainder, budget) states memoized.
// Throws std::domain_error("not totally positive") for tau not totally
// positive (zero included) and std::invalid_argument("requires positive
// cap") for m < 1.
std::optional<std::vector<FieldElem>> sum_of_squares(const FieldElem& tau, int m,
                                                     long limit = 10000000);

// Exact solution of sum_i a_i x_i^2 = tau over integers (zeros allowed),
// or a certified none.  Same search scheme with per-coefficient boxes.
std::optional<std::vector<FieldElem>> represent_diagonal(const DiagonalForm& qf,
                                                         const FieldElem& tau,
                                                         long limit = 10000000);

// Coefficients class_reps_norm_le(K, disc, units) followed by P copies of 1,
// P looked up by degree.
DiagonalForm universal_form(const NumberField& K, const UnitSystem& units,
                            const PythagorasTable& table = default_pythagoras_table(),
                            long limit = 10000000);

// All totally positive integers of trace <= trace_bound the form fails to
// represent, ascending by (trace, coordinates); empty means the check passed.
std::vector<FieldElem> universality_spot_check(const DiagonalForm& qf,
                                               long trace_bound,
                                               long limit = 10000000);

}  // namespace totreal
