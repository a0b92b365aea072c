// Sum-of-squares searches with completeness certificates, diagonal-form
// representation, universal forms from class representatives, and finite
// universality spot checks.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "totreal/sosrep/sosrep.hpp"

using namespace totreal;

namespace {

IntPoly P(const std::vector<long>& c) {
  std::vector<mpz_class> v(c.begin(), c.end());
  return IntPoly{v};
}

FieldElem E(const NumberField& K, const std::vector<long>& c) {
  std::vector<mpz_class> v(c.begin(), c.end());
  return elem_from_int_coords(K, v);
}

std::vector<std::vector<long>> coord_list(const std::vector<FieldElem>& xs) {
  std::vector<std::vector<long>> out;
  for (const FieldElem& x : xs) {
    std::vector<long> r;
    for (const mpq_class& c : x.c) r.push_back(c.get_num().get_si());
    out.push_back(std::move(r));
  }
  return out;
}

FieldElem square_sum(const std::vector<FieldElem>& xs) {
  FieldElem acc = elem_zero(*xs.front().K);
  for (const FieldElem& x : xs) acc = acc + x * x;
  return acc;
}

// independent arithmetic oracle for three-square failures
bool is_4a_8b7(long n) {
  while (n % 4 == 0) n /= 4;
  return n % 8 == 7;
}

}  // namespace

TEST_CASE("sums of squares over the rationals") {
  NumberField q1 = maximal_order(P({-1, 1}));

  auto seven4 = sum_of_squares(E(q1, {7}), 4);
  REQUIRE(seven4.has_value());
  CHECK(coord_list(*seven4) == std::vector<std::vector<long>>{{2}, {1}, {1}, {1}});
  CHECK(square_sum(*seven4) == E(q1, {7}));
  CHECK_FALSE(sum_of_squares(E(q1, {7}), 3).has_value());

  for (long n = 1; n <= 1000; ++n) {
    FieldElem t = E(q1, {n});
    auto four = sum_of_squares(t, 4);
    REQUIRE(four.has_value());
    CHECK(square_sum(*four) == t);
    CHECK(four->size() <= 4);
    bool three = sum_of_squares(t, 3).has_value();
    CHECK(three == !is_4a_8b7(n));
  }

  CHECK_THROWS_WITH_AS(sum_of_squares(E(q1, {7}), 0), "requires positive cap",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(sum_of_squares(elem_zero(q1), 4), "not totally positive",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(sum_of_squares(E(q1, {-3}), 4), "not totally positive",
                       std::domain_error);
}

TEST_CASE("sums of squares in real quadratic fields") {
  NumberField s2 = maximal_order(P({-2, 0, 1}));
  FieldElem tau = E(s2, {4, 2});  // 4 + 2*sqrt(2) = 2*(2+sqrt(2))

  auto two = sum_of_squares(tau, 2);
  REQUIRE(two.has_value());
  CHECK(coord_list(*two) == std::vector<std::vector<long>>{{1, 1}, {1, 0}});
  CHECK(square_sum(*two) == tau);
  CHECK_FALSE(sum_of_squares(tau, 1).has_value());
  for (int m = 3; m <= 5; ++m) {
    auto more = sum_of_squares(tau, m);  // monotone in the cap
    REQUIRE(more.has_value());
    CHECK(square_sum(*more) == tau);
  }

  // scaling by a unit square preserves representability
  FieldElem u = E(s2, {1, 1});
  FieldElem scaled = u * u * tau;
  CHECK(sum_of_squares(scaled, 2).has_value());
  CHECK_FALSE(sum_of_squares(scaled, 1).has_value());

  NumberField s5 = maximal_order(P({-5, 0, 1}));
  FieldElem t5 = E(s5, {3, 1});  // 3 + omega, omega = (1+sqrt(5))/2
  CHECK_FALSE(sum_of_squares(t5, 2).has_value());
  auto three = sum_of_squares(t5, 3);
  REQUIRE(three.has_value());
  CHECK(coord_list(*three) ==
        std::vector<std::vector<long>>{{0, 1}, {1, 0}, {1, 0}});
  CHECK(square_sum(*three) == t5);

  CHECK_THROWS_WITH_AS(sum_of_squares(E(s2, {0, 1}), 4), "not totally positive",
                       std::domain_error);
}

TEST_CASE("diagonal form representation") {
  NumberField q1 = maximal_order(P({-1, 1}));
  DiagonalForm lagrange{&q1, {elem_one(q1), elem_one(q1), elem_one(q1),
                              elem_one(q1), elem_one(q1)},
                        5, false};
  FieldElem t30 = E(q1, {30});
  auto rep = represent_diagonal(lagrange, t30);
  REQUIRE(rep.has_value());
  REQUIRE(rep->size() == 5);
  FieldElem acc = elem_zero(q1);
  for (size_t i = 0; i < rep->size(); ++i)
    acc = acc + lagrange.coefficients[i] * (*rep)[i] * (*rep)[i];
  CHECK(acc == t30);

  DiagonalForm two_squares{&q1, {elem_one(q1), elem_one(q1)}, 2, false};
  auto r4 = represent_diagonal(two_squares, E(q1, {4}));
  REQUIRE(r4.has_value());
  CHECK(coord_list(*r4) == std::vector<std::vector<long>>{{2}, {0}});
  CHECK_FALSE(represent_diagonal(two_squares, E(q1, {3})).has_value());

  CHECK_THROWS_WITH_AS(represent_diagonal(lagrange, elem_zero(q1)),
                       "not totally positive", std::domain_error);
  NumberField s5 = maximal_order(P({-5, 0, 1}));
  CHECK_THROWS_WITH_AS(represent_diagonal(lagrange, elem_one(s5)), "field mismatch",
                       std::invalid_argument);

  // every totally positive target of small trace is represented by the
  // universal form (a failure here is a build-stopping bug)
  UnitSystem u5 = unit_search(s5, 2);
  DiagonalForm qf5 = universal_form(s5, u5);
  std::mt19937 rng(424244);
  std::uniform_int_distribution<long> coeff(-3, 3);
  int found = 0;
  for (int it = 0; it < 120 && found < 25; ++it) {
    FieldElem s = E(s5, {coeff(rng), coeff(rng)});
    FieldElem t = s * s + elem_from_rational(s5, 1 + it % 4);
    if (cmp(trace(t), mpq_class(30)) > 0) continue;
    ++found;
    auto r = represent_diagonal(qf5, t);
    REQUIRE(r.has_value());
    FieldElem sum = elem_zero(s5);
    for (size_t i = 0; i < r->size(); ++i)
      sum = sum + qf5.coefficients[i] * (*r)[i] * (*r)[i];
    CHECK(sum == t);
  }
  CHECK(found >= 25);
}

TEST_CASE("universal forms and spot checks") {
  NumberField q1 = maximal_order(P({-1, 1}));
  UnitSystem uq = unit_search(q1, 5);
  DiagonalForm fq = universal_form(q1, uq);
  CHECK(fq.rank == 5);
  CHECK(coord_list(fq.coefficients) ==
        std::vector<std::vector<long>>{{1}, {1}, {1}, {1}, {1}});
  CHECK_FALSE(fq.conditional);
  CHECK(universality_spot_check(fq, 290).empty());

  DiagonalForm two_squares{&q1, {elem_one(q1), elem_one(q1)}, 2, false};
  CHECK(coord_list(universality_spot_check(two_squares, 10)) ==
        std::vector<std::vector<long>>{{3}, {6}, {7}});

  NumberField s5 = maximal_order(P({-5, 0, 1}));
  UnitSystem u5 = unit_search(s5, 2);
  DiagonalForm f5 = universal_form(s5, u5);
  CHECK(f5.rank == 8);  // three classes of norm <= 5 plus five ones
  CHECK_FALSE(f5.conditional);
  CHECK(universality_spot_check(f5, 20).empty());

  NumberField s2 = maximal_order(P({-2, 0, 1}));
  UnitSystem u2 = unit_search(s2, 3);
  DiagonalForm f2 = universal_form(s2, u2);
  CHECK(f2.rank == 11);  // six classes of norm <= 8 plus five ones
  CHECK(universality_spot_check(f2, 14).empty());

  PythagorasTable small{{{2, 3}}};
  CHECK(universal_form(s5, u5, small).rank == 6);

  NumberField deg5 = maximal_order(P({1, 3, -3, -4, 1, 1}));
  UnitSystem dummy{&deg5, {elem_one(deg5)}, false};
  CHECK_THROWS_WITH_AS(universal_form(deg5, dummy), "unsupported degree",
                       std::invalid_argument);
}
