// Certified enumeration of algebraic integers inside embedding boxes:
// floating-point Fincke-Pohst pruning, exact accept/reject at every leaf.
#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <vector>

#include "totreal/numfield/field.hpp"

namespace totreal {

enum class BoxMode {
  symmetric,  // |sigma_i(x)| <= c_i
  one_sided,  // 0 < sigma_i(x) < c_i
};

struct BoxBounds {
  std::vector<mpq_class> bounds;  // c_1..c_d, all positive, embedding order
  BoxMode mode = BoxMode::symmetric;
};

inline BoxBounds symmetric_box(std::vector<mpq_class> bounds) {
  return {std::move(bounds), BoxMode::symmetric};
}
inline BoxBounds one_sided_box(std::vector<mpq_class> bounds) {
  return {std::move(bounds), BoxMode::one_sided};
}

// Visits the integral-coordinate vector of every x in O_K with
// |sigma_i(x)| <= radius_i, possibly along with extra vectors outside the
// region; exact filtering is the caller's job.  Visit order is not canonical.
// Returning false from the callback stops the walk early.  Throws
// std::runtime_error("enumeration limit exceeded: <limit>") once more than
// `limit` candidates have been visited.
void enumerate_coords(const NumberField& K, const std::vector<mpq_class>& radii, long limit,
                      const std::function<bool(const std::vector<mpz_class>&)>& visit);

// Exact per-embedding certificate that x lies in the box.
bool box_accepts(const BoxBounds& box, const FieldElem& x);

// The full set {x in O_K : x satisfies the box constraints}, every membership
// decided by exact sign tests, sorted by coordinate vector (lexicographic).
std::vector<FieldElem> enumerate_box(const NumberField& K, const BoxBounds& box,
                                     long limit = 10000000);

// A nonzero beta with alpha - beta^2 totally positive, or nullopt after a
// complete search.  Candidates are sign-normalized (first nonzero coordinate
// positive) and tried in coordinate-lexicographic order.
// Throws std::domain_error("not totally positive") unless alpha is.
std::optional<FieldElem> square_below(const FieldElem& alpha, long limit = 10000000);

// The square root of the integer d > 1 inside O_K with positive largest
// embedding, pinned by an exact minimal-polynomial check over a complete
// box search; nullopt when the field contains none.
std::optional<FieldElem> field_sqrt(const NumberField& K, const mpz_class& d,
                                    long limit = 10000000);

}  // namespace totreal
