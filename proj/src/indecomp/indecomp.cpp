// Indecomposability certificates and the bounded-remainder square
// decomposition.
#include <stdexcept>

#include "totreal/indecomp/indecomp.hpp"
#include "totreal/latenum/boxes.hpp"

namespace totreal {

namespace {

void require_positive_integral(const FieldElem& a) {
  if (!a.is_integral()) throw std::invalid_argument("requires integral element");
  if (!is_totally_positive(a)) throw std::domain_error("not totally positive");
}

}  // namespace

bool is_indecomposable(const FieldElem& a, long limit) {
  require_positive_integral(a);
  const NumberField& K = *a.K;
  std::vector<mpq_class> radii(K.degree);
  for (int k = 0; k < K.degree; ++k)
    radii[k] = embedding_interval(a, k, 32).hi().to_mpq();
  bool decomposable = false;
  enumerate_coords(K, radii, limit, [&](const std::vector<mpz_class>& c) {
    bool zero = true;
    for (const auto& v : c)
      if (v != 0) zero = false;
    if (zero) return true;
    FieldElem x = elem_from_int_coords(K, c);
    if (is_totally_positive(x) && is_totally_positive(a - x)) {
      decomposable = true;
      return false;
    }
    return true;
  });
  return !decomposable;
}

FullDecomposition decompose_full(const FieldElem& gamma, long limit) {
  require_positive_integral(gamma);
  const NumberField& K = *gamma.K;
  mpq_class disc(K.disc);
  FullDecomposition out{gamma, {}};
  while (cmp(norm(out.bounded), disc) > 0) {
    auto beta = square_below(out.bounded, limit);
    if (!beta) throw std::logic_error("expected square witness below");
    out.squares.push_back(*beta);
    out.bounded = out.bounded - *beta * *beta;
  }
  return out;
}

}  // namespace totreal
