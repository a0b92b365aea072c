// Box enumeration against a naive coordinate-loop oracle, square-below
// witnesses, certified smallest eigenvalues and the Rayleigh inequality,
// l1-reduced bases with exact tie handling, and field isomorphism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "totreal/latenum/boxes.hpp"
#include "totreal/latenum/gram.hpp"
#include "totreal/numfield/field.hpp"

using namespace totreal;

namespace {

IntPoly P(const std::vector<long>& c) {
  std::vector<mpz_class> v(c.begin(), c.end());
  return IntPoly{v};
}

mpq_class Q(long n, long d = 1) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
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

// independent check: loop a rectangle of integral-basis coordinates and keep
// exactly the elements the certificates accept
std::vector<std::vector<long>> naive_box(const NumberField& K, const BoxBounds& box, long range) {
  std::vector<std::vector<long>> out;
  std::vector<long> a(static_cast<size_t>(K.degree), -range);
  while (true) {
    std::vector<mpz_class> z(a.begin(), a.end());
    FieldElem x = elem_from_int_coords(K, z);
    if (box_accepts(box, x)) out.push_back(a);
    int i = 0;
    for (; i < K.degree; ++i) {
      if (a[static_cast<size_t>(i)] < range) {
        ++a[static_cast<size_t>(i)];
        for (int j = 0; j < i; ++j) a[static_cast<size_t>(j)] = -range;
        break;
      }
    }
    if (i == K.degree) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

FieldElem from_long_coords(const NumberField& K, const std::vector<long>& c) {
  std::vector<mpz_class> z(c.begin(), c.end());
  return elem_from_int_coords(K, z);
}

}  // namespace

TEST_CASE("box enumeration reference examples") {
  NumberField s2 = maximal_order(P({-2, 0, 1}));
  NumberField s5 = maximal_order(P({-5, 0, 1}));
  NumberField q1 = maximal_order(P({-3, 1}));

  auto r = enumerate_box(s2, symmetric_box({Q(3, 2), Q(3, 2)}));
  CHECK(coord_list(r) == std::vector<std::vector<long>>{
                             {-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}});

  auto rq = enumerate_box(q1, symmetric_box({Q(5, 2)}));
  CHECK(coord_list(rq) == std::vector<std::vector<long>>{{-2}, {-1}, {0}, {1}, {2}});

  // closed box: the bound 2 itself stays in
  auto r5 = enumerate_box(s5, symmetric_box({Q(2), Q(2)}));
  CHECK(coord_list(r5) == std::vector<std::vector<long>>{{-2, 0},
                                                         {-1, 0},
                                                         {-1, 1},
                                                         {0, -1},
                                                         {0, 0},
                                                         {0, 1},
                                                         {1, -1},
                                                         {1, 0},
                                                         {2, 0}});

  // every nonzero algebraic integer has house >= 1
  for (const NumberField* K : {&s2, &s5, &q1}) {
    std::vector<mpq_class> half(static_cast<size_t>(K->degree), Q(1, 2));
    auto z = enumerate_box(*K, symmetric_box(half));
    REQUIRE(z.size() == 1);
    CHECK(z[0].is_zero());
  }

  // strict one-sided box drops 0 and everything with a non-positive conjugate
  auto os = enumerate_box(s2, one_sided_box({Q(3, 2), Q(3, 2)}));
  CHECK(coord_list(os) == std::vector<std::vector<long>>{{1, 0}});
}

TEST_CASE("box enumeration matches the naive oracle on quadratic fields") {
  std::vector<std::vector<long>> polys = {
      {-2, 0, 1}, {-3, 0, 1}, {-5, 0, 1}, {-6, 0, 1}, {-7, 0, 1}, {-13, 0, 1}, {-33, 0, 1}};
  std::vector<BoxBounds> boxes = {
      symmetric_box({Q(4), Q(4)}),
      symmetric_box({Q(3, 2), Q(3, 2)}),
      symmetric_box({Q(7, 2), Q(2)}),
      symmetric_box({Q(1, 2), Q(4)}),
      one_sided_box({Q(3), Q(3)}),
      one_sided_box({Q(4), Q(5, 2)}),
  };
  for (const auto& pc : polys) {
    NumberField K = maximal_order(P(pc));
    REQUIRE(K.disc <= 40);
    for (const BoxBounds& box : boxes) {
      auto fast = coord_list(enumerate_box(K, box));
      auto slow = naive_box(K, box, 25);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("box enumeration validation and resource limit") {
  NumberField s2 = maximal_order(P({-2, 0, 1}));
  CHECK_THROWS_WITH_AS(enumerate_box(s2, symmetric_box({Q(1)})), "box bounds invalid",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(enumerate_box(s2, symmetric_box({Q(1), Q(0)})), "box bounds invalid",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(enumerate_box(s2, symmetric_box({Q(1), Q(-2)})), "box bounds invalid",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(enumerate_box(s2, symmetric_box({Q(50), Q(50)}), 10),
                       "enumeration limit exceeded: 10", std::runtime_error);
}

TEST_CASE("square below witnesses") {
  NumberField q1 = maximal_order(P({-3, 1}));
  NumberField s2 = maximal_order(P({-2, 0, 1}));
  NumberField s5 = maximal_order(P({-5, 0, 1}));

  auto b5 = square_below(elem_from_rational(q1, 5));
  REQUIRE(b5.has_value());
  CHECK(b5->c == std::vector<mpq_class>{Q(1)});

  CHECK_FALSE(square_below(elem_from_rational(q1, 1)).has_value());
  auto b2 = square_below(elem_from_rational(q1, 2));  // 2 - 1^2 = 1 remains positive
  REQUIRE(b2.has_value());
  CHECK(b2->c == std::vector<mpq_class>{Q(1)});

  // 4 + sqrt(2): norm 14 > disc 8, so a witness must exist
  auto bs = square_below(from_long_coords(s2, {4, 1}));
  REQUIRE(bs.has_value());
  CHECK(bs->c == std::vector<mpq_class>{Q(0), Q(1)});  // beta = sqrt(2)

  // 3 + (1+sqrt5)/2: norm 11 > disc 5
  auto bg = square_below(from_long_coords(s5, {3, 1}));
  REQUIRE(bg.has_value());
  CHECK(bg->c == std::vector<mpq_class>{Q(0), Q(1)});

  CHECK_THROWS_WITH_AS(square_below(from_long_coords(s2, {0, 1})), "not totally positive",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(square_below(elem_zero(s2)), "not totally positive", std::domain_error);
}

TEST_CASE("square below exists whenever the norm exceeds the discriminant") {
  std::mt19937_64 rng(20260825);
  std::uniform_int_distribution<long> pick(-2, 2);
  for (const auto& pc : std::initializer_list<std::vector<long>>{
           {-2, 0, 1}, {-5, 0, 1}, {-13, 0, 1}, {-2, -4, 0, 1}, {1, -4, -1, 1}}) {
    NumberField K = maximal_order(P(pc));
    int found = 0;
    for (int it = 0; it < 120 && found < 10; ++it) {
      std::vector<long> c(static_cast<size_t>(K.degree));
      for (auto& v : c) v = pick(rng);
      // squares plus a positive rational are always totally positive
      FieldElem s = from_long_coords(K, c);
      FieldElem a = s * s + elem_from_rational(K, 1 + it % 6);
      if (norm(a) <= K.disc) continue;
      if (compare_house_mpq(a, 30) > 0) continue;
      ++found;
      auto b = square_below(a);
      REQUIRE(b.has_value());
      CHECK(is_totally_positive(a - *b * *b));
      CHECK_FALSE(b->is_zero());
    }
    CHECK(found > 0);
  }
}

TEST_CASE("smallest eigenvalue certificates") {
  QMat id1 = {{Q(1)}};
  QMat id3 = qmat_identity(3);
  QMat d22 = {{Q(2), Q(0)}, {Q(0), Q(2)}};
  QMat a21 = {{Q(2), Q(1)}, {Q(1), Q(2)}};

  for (auto [m, lam] : std::initializer_list<std::pair<QMat, mpq_class>>{
           {id1, Q(1)}, {id3, Q(1)}, {d22, Q(2)}, {a21, Q(1)}}) {
    DyadicInterval iv = smallest_eigenvalue(m, 60);
    CHECK(iv.cmp_mpq(lam) == 0);
    CHECK(iv.width() <= Dyadic(mpz_class(1), -60));
  }

  // symmetric but indefinite is fine for the eigenvalue query alone
  QMat indef = {{Q(1), Q(2)}, {Q(2), Q(1)}};
  CHECK(smallest_eigenvalue(indef, 50).cmp_mpq(Q(-1)) == 0);

  QMat frac = {{Q(1, 2), Q(0)}, {Q(0), Q(1, 3)}};
  CHECK(smallest_eigenvalue(frac, 50).cmp_mpq(Q(1, 3)) == 0);

  CHECK_THROWS_WITH_AS(smallest_eigenvalue({{Q(1), Q(2)}, {Q(3), Q(4)}}, 40),
                       "matrix not symmetric", std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_gram_embeddings(indef), "not positive definite", std::domain_error);
  CHECK_THROWS_WITH_AS(make_gram_embeddings({{Q(0)}}), "not positive definite", std::domain_error);
}

TEST_CASE("rayleigh constant examples") {
  GramEmbeddings g1 = make_gram_embeddings(qmat_identity(2));
  DyadicInterval c1 = rayleigh_constant(g1);
  CHECK(c1.cmp_mpq(Q(1)) == 0);
  CHECK(c1.width() <= Dyadic(mpz_class(1), -40));
  CHECK(g1.per_embedding.size() == 1);

  GramEmbeddings g2 = make_gram_embeddings({{Q(2), Q(0)}, {Q(0), Q(2)}});
  CHECK(rayleigh_constant(g2).cmp_mpq(Q(1, 2)) == 0);

  GramEmbeddings g3 = make_gram_embeddings({{Q(2), Q(1)}, {Q(1), Q(2)}});
  CHECK(rayleigh_constant(g3).cmp_mpq(Q(1)) == 0);
  CHECK(g3.lambda_min.cmp_mpq(Q(1)) == 0);
}

TEST_CASE("rayleigh inequality on random lattice vectors") {
  std::mt19937_64 rng(424243);
  std::uniform_int_distribution<long> pick(-20, 20);
  std::vector<NumberField> pool;
  pool.push_back(maximal_order(P({-2, 0, 1})));
  pool.push_back(maximal_order(P({-5, 0, 1})));
  pool.push_back(maximal_order(P({-2, -4, 0, 1})));
  pool.push_back(maximal_order(P({9, 0, -14, 0, 1})));
  std::vector<QMat> grams = {
      {{Q(1)}},
      qmat_identity(2),
      {{Q(2), Q(1)}, {Q(1), Q(2)}},
      {{Q(1), Q(1, 2)}, {Q(1, 2), Q(1)}},
      {{Q(1), Q(0), Q(0)}, {Q(0), Q(2), Q(0)}, {Q(0), Q(0), Q(3)}},
  };
  for (const NumberField& K : pool) {
    for (const QMat& m : grams) {
      GramEmbeddings g = make_gram_embeddings(m);
      mpq_class c = rayleigh_constant(g).hi().to_mpq();
      size_t r = m.size();
      for (int it = 0; it < 6; ++it) {
        std::vector<FieldElem> v;
        bool zero = true;
        for (size_t i = 0; i < r; ++i) {
          std::vector<long> cc(static_cast<size_t>(K.degree));
          for (auto& x : cc) x = pick(rng);
          v.push_back(from_long_coords(K, cc));
          zero = zero && v.back().is_zero();
        }
        if (zero) continue;
        FieldElem q = elem_zero(K);
        for (size_t i = 0; i < r; ++i)
          for (size_t j = 0; j < r; ++j) q = q + elem_scale(v[i] * v[j], m[i][j]);
        AlgReal vmax = AlgReal::of_mpq(0);
        for (size_t i = 0; i < r; ++i) {
          AlgReal h = house_algreal(v[i]);
          if (algreal_cmp(h, vmax) > 0) vmax = h;
        }
        AlgReal lhs = algreal_square(vmax);
        AlgReal rhs0 = house_algreal(q);
        AlgReal rhs = algreal_scale_mpq(rhs0, c);
        CHECK(algreal_cmp(lhs, rhs) <= 0);
      }
    }
  }
}

TEST_CASE("l1 length helpers") {
  NumberField s2 = maximal_order(P({-2, 0, 1}));
  FieldElem rt2 = from_long_coords(s2, {0, 1});
  FieldElem onert2 = from_long_coords(s2, {1, 1});

  CHECK(norm1_cmp(rt2, onert2) == 0);  // both have length 2*sqrt(2)
  CHECK(norm1_cmp(from_long_coords(s2, {1, 0}), rt2) < 0);
  CHECK(norm1_cmp(from_long_coords(s2, {2, 0}), rt2) > 0);

  AlgReal n1 = norm1_algreal(rt2);
  AlgReal sq = algreal_square(n1);
  CHECK(algreal_cmp_mpq(sq, Q(8)) == 0);

  AlgReal h = house_algreal(onert2);
  CHECK(algreal_cmp_mpq(h, Q(2)) > 0);
  CHECK(algreal_cmp_mpq(h, Q(5, 2)) < 0);
  AlgReal hs = algreal_square(h);
  AlgReal expect = algreal_add(AlgReal::of_mpq(3), n1);
  CHECK(algreal_cmp(hs, expect) == 0);  // (1+sqrt2)^2 = 3 + 2*sqrt2 = 3 + ||sqrt2||

  AlgReal hr = house_algreal(elem_from_rational(s2, Q(-3)));
  CHECK(algreal_cmp_mpq(hr, Q(3)) == 0);

  DyadicInterval iv = norm1_interval(rt2, 50);
  CHECK(iv.width() <= Dyadic(mpz_class(1), -50));
  CHECK(algreal_cmp_dyadic(n1, iv.lo()) >= 0);
  CHECK(algreal_cmp_dyadic(n1, iv.hi()) <= 0);
}

TEST_CASE("minkowski reduced bases") {
  NumberField q1 = maximal_order(P({-3, 1}));
  auto b1 = minkowski_reduced_basis(q1);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].c == std::vector<mpq_class>{Q(1)});

  // golden ratio beats sqrt(5): ||(1+sqrt5)/2|| = sqrt5 < 2*sqrt5
  NumberField s5 = maximal_order(P({-5, 0, 1}));
  auto b5 = minkowski_reduced_basis(s5);
  REQUIRE(b5.size() == 2);
  CHECK(b5[0].c == std::vector<mpq_class>{Q(1), Q(0)});
  CHECK(b5[1].c == std::vector<mpq_class>{Q(0), Q(1)});

  // tie ||sqrt2|| = ||1+sqrt2|| broken toward the lex-smaller coordinates
  NumberField s2 = maximal_order(P({-2, 0, 1}));
  auto b2 = minkowski_reduced_basis(s2);
  REQUIRE(b2.size() == 2);
  CHECK(b2[1].c == std::vector<mpq_class>{Q(0), Q(1)});

  NumberField s3 = maximal_order(P({-3, 0, 1}));
  auto b3 = minkowski_reduced_basis(s3);
  CHECK(b3[1].c == std::vector<mpq_class>{Q(0), Q(1)});

  // independent minimality check for the quadratic second vector: any (a, b)
  // with |b| = 1 completes {1} to a basis; none may be strictly shorter
  for (const NumberField* K : {&s2, &s3, &s5}) {
    auto bb = minkowski_reduced_basis(*K);
    for (long a = -8; a <= 8; ++a)
      for (long b : {-1L, 1L}) CHECK(norm1_cmp(from_long_coords(*K, {a, b}), bb[1]) >= 0);
  }

  // cubic and quartic: structure checks (unimodular coordinate matrix,
  // lengths ascending, first entry 1)
  for (const auto& pc :
       std::initializer_list<std::vector<long>>{{-2, -4, 0, 1}, {9, 0, -14, 0, 1}}) {
    NumberField K = maximal_order(P(pc));
    auto bb = minkowski_reduced_basis(K);
    REQUIRE(static_cast<int>(bb.size()) == K.degree);
    CHECK(bb[0].c[0] == 1);
    QMat coords;
    for (const FieldElem& e : bb) coords.push_back(e.c);
    mpq_class det = qmat_det(coords);
    CHECK((det == 1 || det == -1));
    for (size_t i = 0; i + 1 < bb.size(); ++i) CHECK(norm1_cmp(bb[i], bb[i + 1]) <= 0);
  }

  NumberField deg5 = maximal_order(P({1, 3, -3, -4, 1, 1}));
  CHECK_THROWS_WITH_AS(minkowski_reduced_basis(deg5), "unsupported degree", std::invalid_argument);
}

TEST_CASE("field isomorphism") {
  NumberField c1 = maximal_order(P({-2, -4, 0, 1}));
  CHECK(fields_isomorphic(c1, c1));

  // same field presented through the shifted generator theta + 1
  NumberField c2 = maximal_order(P({1, -1, -3, 1}));
  REQUIRE(c2.disc == c1.disc);
  CHECK(fields_isomorphic(c1, c2));
  CHECK(fields_isomorphic(c2, c1));

  NumberField s2 = maximal_order(P({-2, 0, 1}));
  NumberField s3 = maximal_order(P({-3, 0, 1}));
  NumberField s8 = maximal_order(P({-8, 0, 1}));
  CHECK_FALSE(fields_isomorphic(s2, s3));
  CHECK(fields_isomorphic(s2, s8));
  CHECK(fields_isomorphic(s8, s2));
  CHECK_FALSE(fields_isomorphic(s2, c1));

  // same discriminant 2304, different defining polynomials, same field
  NumberField b1 = maximal_order(P({1, 0, -10, 0, 1}));
  NumberField b2 = maximal_order(P({1, 0, -4, 0, 1}));
  REQUIRE(b1.disc == b2.disc);
  CHECK(fields_isomorphic(b1, b2));
}
