// Indecomposability certificates against complete box searches,
// continued-fraction fundamental units, quadratic indecomposable lists,
// bounded unit systems, class representatives modulo unit squares, and the
// bounded-remainder square decomposition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "totreal/exact/factor.hpp"
#include "totreal/indecomp/indecomp.hpp"
#include "totreal/latenum/boxes.hpp"
#include "totreal/numfield/field.hpp"

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

std::vector<long> coords(const FieldElem& x) {
  std::vector<long> r;
  for (const mpq_class& c : x.c) r.push_back(c.get_num().get_si());
  return r;
}

std::vector<std::vector<long>> coord_list(const std::vector<FieldElem>& xs) {
  std::vector<std::vector<long>> out;
  for (const FieldElem& x : xs) out.push_back(coords(x));
  return out;
}

}  // namespace

TEST_CASE("indecomposability certificates") {
  NumberField q1 = maximal_order(P({-1, 1}));
  NumberField s2 = maximal_order(P({-2, 0, 1}));
  NumberField s5 = maximal_order(P({-5, 0, 1}));
  NumberField cub = maximal_order(P({-2, -4, 0, 1}));

  CHECK(is_indecomposable(elem_one(q1)));
  CHECK(is_indecomposable(elem_one(s2)));
  CHECK(is_indecomposable(elem_one(s5)));
  CHECK(is_indecomposable(elem_one(cub)));

  CHECK_FALSE(is_indecomposable(E(q1, {2})));
  CHECK_FALSE(is_indecomposable(E(s2, {2, 0})));
  CHECK_FALSE(is_indecomposable(E(s5, {2, 0})));  // 2 = 1 + 1 everywhere

  CHECK(is_indecomposable(E(s2, {2, 1})));        // 2 + sqrt(2)
  CHECK_FALSE(is_indecomposable(E(s2, {3, 1})));  // 3 + sqrt(2) = 1 + (2 + sqrt(2))
  CHECK_FALSE(is_indecomposable(E(s2, {4, 2})));

  CHECK_THROWS_WITH_AS(is_indecomposable(E(s2, {0, 1})), "not totally positive",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(is_indecomposable(elem_zero(s2)), "not totally positive",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(is_indecomposable(elem_scale(elem_one(s2), mpq_class(1, 2))),
                       "requires integral element", std::invalid_argument);
}

TEST_CASE("fundamental units from continued fractions") {
  struct Row {
    long d;
    std::vector<long> unit;  // integral-basis coordinates
    long unit_norm;
  };
  // hand-checked: 1+sqrt(2), 2+sqrt(3), (1+sqrt(5))/2, 5+2*sqrt(6),
  // 8+3*sqrt(7), (3+sqrt(13))/2
  const std::vector<Row> rows = {
      {2, {1, 1}, -1},  {3, {2, 1}, 1},  {5, {0, 1}, -1},
      {6, {5, 2}, 1},   {7, {8, 3}, 1},  {13, {1, 1}, -1},
  };
  for (const Row& r : rows) {
    CAPTURE(r.d);
    NumberField K = quadratic_field(r.d);
    FieldElem u = fundamental_unit_quadratic(K);
    CHECK(coords(u) == r.unit);
    CHECK(norm(u) == r.unit_norm);
    CHECK(embedding_cmp_mpq(u, 1, 1) > 0);
  }

  CHECK_THROWS_WITH_AS(quadratic_field(12), "requires squarefree radicand",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(quadratic_field(1), "requires squarefree radicand",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(quadratic_field(0), "requires squarefree radicand",
                       std::invalid_argument);
  NumberField cub = maximal_order(P({-2, -4, 0, 1}));
  CHECK_THROWS_WITH_AS(fundamental_unit_quadratic(cub), "requires quadratic field",
                       std::invalid_argument);
}

TEST_CASE("quadratic indecomposable lists") {
  NumberField s5 = quadratic_field(5);
  CHECK(coord_list(quadratic_indecomposables(s5)) ==
        std::vector<std::vector<long>>{{1, 0}});

  NumberField s2 = quadratic_field(2);
  CHECK(coord_list(quadratic_indecomposables(s2)) ==
        std::vector<std::vector<long>>{{1, 0}, {2, 1}});  // 1 and 2+sqrt(2)

  NumberField s3 = quadratic_field(3);
  CHECK(coord_list(quadratic_indecomposables(s3)) ==
        std::vector<std::vector<long>>{{1, 0}, {2, 1}});  // 1 and 2+sqrt(3)

  // Q(sqrt(13)), omega = (1+sqrt(13))/2: the two conjugate norm-3 classes of
  // 2+omega = (5+sqrt(13))/2 sit in distinct unit-square orbits.
  NumberField s13 = quadratic_field(13);
  CHECK(coord_list(quadratic_indecomposables(s13)) ==
        std::vector<std::vector<long>>{{1, 0}, {2, 1}, {3, -1}});

  for (const FieldElem& x : quadratic_indecomposables(s13))
    CHECK(cmp(norm(x), mpq_class(s13.disc)) <= 0);
}

TEST_CASE("quadratic lists agree with a complete box search") {
  std::vector<long> ds;
  for (long d = 2; d <= 30; ++d)
    if (square_part(d) == 1) ds.push_back(d);
  REQUIRE(ds.size() == 18);

  for (long d : ds) {
    CAPTURE(d);
    NumberField K = quadratic_field(d);
    std::vector<FieldElem> list = quadratic_indecomposables(K);
    UnitSystem us = unit_search(K, 1000);
    REQUIRE(us.complete);

    for (const FieldElem& x : list) {
      CHECK(is_totally_positive(x));
      CHECK(is_indecomposable(x));
      CHECK(cmp(norm(x), mpq_class(K.disc)) <= 0);
    }
    for (size_t i = 0; i < list.size(); ++i)
      for (size_t j = i + 1; j < list.size(); ++j)
        CHECK_FALSE(same_class_mod_unit_squares(list[i], list[j], us));

    // every indecomposable in the house<=20 box lies in a listed class
    std::vector<mpq_class> radii(2, 20);
    long checked = 0;
    for (const FieldElem& x : enumerate_box(K, symmetric_box(radii))) {
      if (!is_totally_positive(x) || !is_indecomposable(x)) continue;
      ++checked;
      bool found = false;
      for (const FieldElem& rep : list)
        if (same_class_mod_unit_squares(rep, x, us)) found = true;
      CHECK(found);
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("unit system search") {
  NumberField q1 = maximal_order(P({-1, 1}));
  UnitSystem uq = unit_search(q1, 5);
  CHECK(uq.generators.empty());
  CHECK(uq.complete);

  NumberField s2 = maximal_order(P({-2, 0, 1}));
  UnitSystem u2 = unit_search(s2, 3);
  REQUIRE(u2.generators.size() == 1);
  CHECK(coords(u2.generators[0]) == std::vector<long>{1, 1});
  CHECK(u2.complete);
  UnitSystem u2small = unit_search(s2, 2);  // house(1+sqrt(2)) > 2
  CHECK(u2small.generators.empty());
  CHECK_FALSE(u2small.complete);

  NumberField s5 = maximal_order(P({-5, 0, 1}));
  UnitSystem u5 = unit_search(s5, 2);
  REQUIRE(u5.generators.size() == 1);
  CHECK(coords(u5.generators[0]) == std::vector<long>{0, 1});
  CHECK(u5.complete);

  NumberField cub = maximal_order(P({-2, -4, 0, 1}));
  UnitSystem uc = unit_search(cub, 10);
  REQUIRE(uc.generators.size() == 2);
  CHECK_FALSE(uc.complete);
  for (const FieldElem& g : uc.generators) CHECK(abs(norm(g)) == 1);

  CHECK_THROWS_WITH_AS(unit_search(s2, mpq_class(1, 2)),
                       "requires house bound >= 1", std::invalid_argument);
  CHECK_THROWS_WITH_AS(unit_search(cub, 50, 10), "enumeration limit exceeded: 10",
                       std::runtime_error);
}

TEST_CASE("class representatives modulo unit squares") {
  NumberField q1 = maximal_order(P({-1, 1}));
  UnitSystem uq = unit_search(q1, 5);
  ClassReps rq = class_reps_norm_le(q1, 4, uq);
  CHECK(coord_list(rq.reps) == std::vector<std::vector<long>>{{1}, {2}, {3}, {4}});
  CHECK_FALSE(rq.conditional);

  NumberField s5 = maximal_order(P({-5, 0, 1}));
  UnitSystem u5 = unit_search(s5, 2);
  ClassReps r5 = class_reps_norm_le(s5, 5, u5);
  // 1, 2, and the norm-5 class of 2+omega = (5+sqrt(5))/2
  CHECK(coord_list(r5.reps) ==
        std::vector<std::vector<long>>{{1, 0}, {2, 0}, {2, 1}});
  CHECK_FALSE(r5.conditional);

  NumberField s2 = maximal_order(P({-2, 0, 1}));
  UnitSystem u2 = unit_search(s2, 3);
  ClassReps r2 = class_reps_norm_le(s2, 8, u2);
  CHECK(coord_list(r2.reps) ==
        std::vector<std::vector<long>>{
            {1, 0}, {2, -1}, {2, 0}, {3, -1}, {3, 1}, {4, -2}});
  bool has_2_plus_sqrt2 = false;
  for (const FieldElem& rep : r2.reps)
    if (same_class_mod_unit_squares(rep, E(s2, {2, 1}), u2)) has_2_plus_sqrt2 = true;
  CHECK(has_2_plus_sqrt2);
  CHECK(cmp(r2.search_bound, mpq_class(8)) >= 0);

  // every totally positive element of norm <= 8 nearby matches exactly one rep
  std::vector<mpq_class> radii(2, 10);
  for (const FieldElem& x : enumerate_box(s2, symmetric_box(radii))) {
    mpq_class nx = norm(x);
    if (sgn(nx) <= 0 || cmp(nx, mpq_class(8)) > 0) continue;
    if (!is_totally_positive(x)) continue;
    int hits = 0;
    for (const FieldElem& rep : r2.reps)
      if (same_class_mod_unit_squares(rep, x, u2)) ++hits;
    CHECK(hits == 1);
  }

  // unit-square invariance of the membership test
  FieldElem u = u2.generators[0];
  for (const FieldElem& rep : r2.reps)
    CHECK(same_class_mod_unit_squares(rep, u * u * rep, u2));

  CHECK_THROWS_WITH_AS(class_reps_norm_le(q1, 0, uq), "requires positive norm bound",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(class_reps_norm_le(s2, 8, UnitSystem{}), "units required",
                       std::invalid_argument);
}

TEST_CASE("square decompositions with bounded remainder") {
  NumberField q1 = maximal_order(P({-1, 1}));
  FullDecomposition d7 = decompose_full(E(q1, {7}));
  CHECK(coords(d7.bounded) == std::vector<long>{1});
  CHECK(d7.squares.size() == 6);  // canonical witness is 1 at every step
  FieldElem acc = d7.bounded;
  for (const FieldElem& b : d7.squares) {
    CHECK(coords(b) == std::vector<long>{1});
    acc = acc + b * b;
  }
  CHECK(acc == E(q1, {7}));

  NumberField s2 = maximal_order(P({-2, 0, 1}));
  NumberField s5 = maximal_order(P({-5, 0, 1}));
  CHECK_THROWS_WITH_AS(decompose_full(E(s2, {-1, 0})), "not totally positive",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(decompose_full(elem_scale(elem_one(s2), mpq_class(1, 2))),
                       "requires integral element", std::invalid_argument);

  std::mt19937 rng(20260825);
  std::uniform_int_distribution<long> coeff(-2, 2);
  const NumberField* fields[] = {&q1, &s2, &s5};
  for (const NumberField* K : fields) {
    for (int it = 0; it < 200; ++it) {
      std::vector<mpz_class> c(static_cast<size_t>(K->degree));
      for (auto& v : c) v = coeff(rng);
      FieldElem s = elem_from_int_coords(*K, c);
      FieldElem gamma = s * s + elem_from_rational(*K, 1 + it % 5);
      FullDecomposition dec = decompose_full(gamma);
      CHECK(cmp(norm(dec.bounded), mpq_class(K->disc)) <= 0);
      CHECK(is_totally_positive(dec.bounded));
      FieldElem sum = dec.bounded;
      for (const FieldElem& b : dec.squares) {
        CHECK_FALSE(b.is_zero());
        sum = sum + b * b;
      }
      CHECK(sum == gamma);
    }
  }
}

TEST_CASE("indecomposables have norm at most the discriminant") {
  for (long d : {2L, 3L, 5L, 13L}) {
    CAPTURE(d);
    NumberField K = quadratic_field(d);
    std::vector<mpq_class> radii(2, 12);
    long found = 0;
    for (const FieldElem& x : enumerate_box(K, symmetric_box(radii))) {
      if (x.is_zero() || !is_totally_positive(x)) continue;
      if (!is_indecomposable(x)) continue;
      ++found;
      CHECK(cmp(norm(x), mpq_class(K.disc)) <= 0);
    }
    CHECK(found > 0);
  }
}
