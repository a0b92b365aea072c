// Sturm chains over Z with content-normalized, sign-correct remainders.
// Root counting on half-open intervals (a, b], with endpoints rational,
// dyadic, quadratic-surd, or infinite.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "totreal/exact/dyadic.hpp"
#include "totreal/exact/intpoly.hpp"
#include "totreal/exact/surd.hpp"

namespace totreal {

// Extended rational: a finite value or a signed infinity.
struct XRat {
  int inf = 0;  // -1 below all rationals, +1 above, 0 finite
  mpq_class q;

  static XRat minus_infinity() { return XRat{-1, 0}; }
  static XRat plus_infinity() { return XRat{+1, 0}; }
  static XRat of(mpq_class v) { return XRat{0, std::move(v)}; }

  // total order on the extended line
  int cmp(const XRat& o) const;
};

class SturmChain {
 public:
  // Requires deg f >= 1.  The chain always builds; squarefree() reports
  // whether root counts are valid for f itself.
  static SturmChain build(const IntPoly& f);

  bool squarefree() const { return squarefree_; }
  const std::vector<IntPoly>& seq() const { return seq_; }

  int variations_at_mpq(const mpq_class& x) const;
  int variations_at_dyadic(const Dyadic& x) const;
  int variations_at_surd(const QuadSurd& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  // Number of roots in (a, b]; requires a <= b.
  long count(const XRat& a, const XRat& b) const;
  long count_dyadic(const Dyadic& a, const Dyadic& b) const;
  long count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

 private:
  std::vector<IntPoly> seq_;
  bool squarefree_ = false;
};

// Spec operation: roots of squarefree f in (a, b].  Throws
// std::invalid_argument("requires squarefree polynomial") otherwise.
long sturm_count(const IntPoly& f, const XRat& a, const XRat& b);

}  // namespace totreal
