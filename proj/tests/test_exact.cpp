// Tests for the exact arithmetic layer: dyadics, integer polynomials,
// Sturm counting, surds, root isolation, algebraic reals, factorization.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "totreal/exact/dyadic.hpp"
#include "totreal/exact/factor.hpp"
#include "totreal/exact/intpoly.hpp"
#include "totreal/exact/roots.hpp"
#include "totreal/exact/sturm.hpp"
#include "totreal/exact/surd.hpp"

using namespace totreal;

static IntPoly P(std::vector<long> c) { return IntPoly::from_coeffs(std::move(c)); }

TEST_CASE("dyadic normalization and arithmetic") {
  Dyadic a(8);
  CHECK(a.mantissa() == 1);
  CHECK(a.exponent() == 3);
  Dyadic b(mpz_class(3), -2);   // 3/4
  Dyadic c(mpz_class(5), -3);   // 5/8
  Dyadic s = b + c;             // 11/8
  CHECK(s.to_mpq() == mpq_class(11, 8));
  CHECK((b - c).to_mpq() == mpq_class(1, 8));
  CHECK((b * c).to_mpq() == mpq_class(15, 32));
  CHECK((-b).sign() == -1);
  CHECK(Dyadic(0).sign() == 0);
  CHECK(b.times_pow2(3).to_mpq() == 6);
  CHECK(b < Dyadic(1));
  CHECK(Dyadic(mpz_class(1), 10) > Dyadic(1000));
  CHECK(Dyadic::cmp_mpq(b, mpq_class(3, 4)) == 0);
  CHECK(Dyadic::cmp_mpq(b, mpq_class(2, 3)) > 0);
  CHECK(Dyadic(mpz_class(-5), -1).floor_mpz() == -3);
}

TEST_CASE("dyadic rounding brackets the value") {
  Dyadic v(mpz_class(0xdeadbeefcafeL), -13);
  Dyadic dn = v.round_down(10), up = v.round_up(10);
  CHECK(dn <= v);
  CHECK(v <= up);
  CHECK(mpz_sizeinbase(dn.mantissa().get_mpz_t(), 2) <= 10);
  mpq_class third(1, 3);
  Dyadic lo = Dyadic::lower_of_mpq(third, 16);
  Dyadic hi = Dyadic::upper_of_mpq(third, 16);
  CHECK(Dyadic::cmp_mpq(lo, third) < 0);
  CHECK(Dyadic::cmp_mpq(hi, third) > 0);
  CHECK((hi - lo).to_mpq() == mpq_class(1, 65536));
  CHECK(Dyadic::of_dyadic_mpq(mpq_class(7, 16)).to_mpq() == mpq_class(7, 16));
}

TEST_CASE("interval arithmetic stays exact and contains products") {
  DyadicInterval x(Dyadic(-2), Dyadic(3));
  DyadicInterval sq = x.square();
  CHECK(sq.lo() == Dyadic(0));
  CHECK(sq.hi() == Dyadic(9));
  DyadicInterval y(Dyadic(mpz_class(1), -1), Dyadic(2));  // [1/2, 2]
  DyadicInterval pr = x * y;
  CHECK(pr.lo() == Dyadic(-4));
  CHECK(pr.hi() == Dyadic(6));
  CHECK(x.abs_upper() == Dyadic(3));
  CHECK(x.abs_lower() == Dyadic(0));
  CHECK(y.abs_lower().to_mpq() == mpq_class(1, 2));
  CHECK(x.sign() == 0);
  CHECK(y.sign() == 1);
  DyadicInterval e = DyadicInterval::of_mpq(mpq_class(1, 3), 20);
  CHECK(e.cmp_mpq(mpq_class(1, 3)) == 0);
  CHECK(e.cmp_mpq(mpq_class(1, 2)) == -1);
  CHECK(e.cmp_mpq(mpq_class(1, 4)) == 1);
}

TEST_CASE("sqrt and inverse enclosures certify") {
  DyadicInterval two(Dyadic(2));
  DyadicInterval r = sqrt_enclosure(two, 40);
  CHECK(r.lo().sign() > 0);
  CHECK((r.lo() * r.lo()) <= Dyadic(2));
  CHECK((r.hi() * r.hi()) >= Dyadic(2));
  CHECK(r.width() <= Dyadic(mpz_class(1), -39));
  DyadicInterval z(Dyadic(2), Dyadic(4));
  DyadicInterval inv = invert_enclosure(z, 40);
  CHECK(inv.cmp_mpq(mpq_class(1, 3)) == 0);
  CHECK(Dyadic::cmp_mpq(inv.lo(), mpq_class(1, 4)) <= 0);
  CHECK(Dyadic::cmp_mpq(inv.hi(), mpq_class(1, 2)) >= 0);
  CHECK_THROWS(invert_enclosure(DyadicInterval(Dyadic(-1), Dyadic(1)), 10));
}

TEST_CASE("polynomial parsing, printing and evaluation") {
  IntPoly f = IntPoly::parse("-2,-4,0,1");
  CHECK(f == P({-2, -4, 0, 1}));
  CHECK(f.str() == "x^3 - 4*x - 2");
  CHECK(f.coeff_list() == "-2,-4,0,1");
  CHECK(f.eval_z(2) == -2);
  CHECK(f.eval_z(3) == 13);
  CHECK(f.sign_at_mpq(mpq_class(1, 2)) == -1);
  CHECK(f.sign_at_mpq(mpq_class(-2)) == -1);
  CHECK(f.sign_at_dyadic(Dyadic(mpz_class(5), -1)) == 1);  // f(5/2) = 13/8 > 0
  CHECK(IntPoly::parse(" 1 , 2 ") == P({1, 2}));
  CHECK_THROWS_AS(IntPoly::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(IntPoly::parse("1,x"), std::invalid_argument);
  CHECK(P({0, 0, 0}).is_zero());
  CHECK(P({3}).degree() == 0);
  CHECK(f.interval_eval(DyadicInterval(Dyadic(2), Dyadic(3))).cmp_mpq(mpq_class(-2)) >= 0);
}

TEST_CASE("polynomial ring operations") {
  IntPoly a = P({-1, 0, 1});  // x^2 - 1
  IntPoly b = P({-1, 1});     // x - 1
  auto q = IntPoly::try_divide(a, b);
  REQUIRE(q.has_value());
  CHECK(*q == P({1, 1}));
  CHECK(!IntPoly::try_divide(P({1, 0, 1}), b).has_value());
  CHECK(IntPoly::gcd(a, P({1, -2, 1})) == b);
  CHECK(IntPoly::gcd(P({0}), P({2, 2})) == P({1, 1}));
  IntPoly f = P({-2, -4, 0, 1});
  CHECK(f.derivative() == P({-4, 0, 3}));
  CHECK(P({2, 4, 6}).content() == 2);
  CHECK(P({2, 4, 6}).primitive_part() == P({1, 2, 3}));
  CHECK(P({0, 0, 1}).shifted_arg(1) == P({1, 2, 1}));
  CHECK(f.negated_arg() == P({-2, 4, 0, -1}));
  auto [qq, rr] = IntPoly::divmod_monic(P({1, 2, 3, 1}), P({1, 1}));
  CHECK(qq * P({1, 1}) + rr == P({1, 2, 3, 1}));
}

TEST_CASE("resultants and discriminants") {
  CHECK(IntPoly::resultant(P({-3, 0, 1}), P({-1, 1})) == -2);
  CHECK(P({-5, 0, 1}).discriminant() == 20);
  CHECK(P({-2, -4, 0, 1}).discriminant() == 148);
  CHECK(P({1, 1, 1}).discriminant() == -3);
  CHECK(P({9, 0, -14, 0, 1}).discriminant() == 3686400);
  CHECK(P({-1, -2, 1, 1}).discriminant() == 49);
  // squarefree part strips repeated factors
  IntPoly sq = P({-1, 1}) * P({-1, 1}) * P({1, 0, 1});
  CHECK(sq.squarefree_part() == P({-1, 1}) * P({1, 0, 1}));
}

TEST_CASE("surd signs and arithmetic") {
  QuadSurd r(mpq_class(7), mpq_class(1), 6);  // 7 + sqrt(6)
  CHECK(r.sign() == 1);
  QuadSurd s(mpq_class(2), mpq_class(-1), 6);  // 2 - sqrt(6) < 0
  CHECK(s.sign() == -1);
  QuadSurd t(mpq_class(3), mpq_class(-1), 6);  // 3 - sqrt(6) > 0
  CHECK(t.sign() == 1);
  CHECK((r * r).rat() == 55);   // 55 + 14 sqrt(6)
  CHECK((r * r).coef() == 14);
  CHECK(r.norm() == 43);
  CHECK(r.trace() == 14);
  CHECK(r.inverse().cmp_mpq(mpq_class(1, 9)) == -1);  // 1/(7+sqrt 6) ~ 0.1058
  CHECK(r.inverse().cmp_mpq(mpq_class(1, 10)) == 1);
  // 7+sqrt(6) is a root of x^2 - 14x + 43
  CHECK(sign_at_surd(P({43, -14, 1}), r) == 0);
  CHECK(sign_at_surd(P({-2, -4, 0, 1}), r) == 1);
}

TEST_CASE("sturm counting on half-open intervals") {
  IntPoly f = P({-2, 0, 1});
  CHECK(sturm_count(f, XRat::of(0), XRat::of(2)) == 1);
  CHECK(sturm_count(f, XRat::minus_infinity(), XRat::plus_infinity()) == 2);
  CHECK(sturm_count(P({-2, -4, 0, 1}), XRat::minus_infinity(), XRat::plus_infinity()) == 3);
  CHECK(sturm_count(P({1, 0, 1}), XRat::minus_infinity(), XRat::plus_infinity()) == 0);
  // half-open (a, b]: right endpoint root counted, left excluded
  IntPoly g = P({-1, 0, 1});
  CHECK(sturm_count(g, XRat::of(-1), XRat::of(1)) == 1);
  CHECK(sturm_count(g, XRat::of(-2), XRat::of(1)) == 2);
  CHECK(sturm_count(g, XRat::of(-2), XRat::of(0)) == 1);
  CHECK(sturm_count(g, XRat::of(1), XRat::of(5)) == 0);
  CHECK(sturm_count(g, XRat::of(1), XRat::of(1)) == 0);
  CHECK_THROWS_AS(sturm_count(g, XRat::of(2), XRat::of(1)), std::invalid_argument);
  CHECK_THROWS_WITH_AS(sturm_count(P({1, -2, 1}), XRat::minus_infinity(), XRat::plus_infinity()),
                       "requires squarefree polynomial", std::invalid_argument);
}

TEST_CASE("sturm counting with surd endpoints") {
  // both roots of x^2 - 14x + 43 lie in (0, 7 + sqrt(6)]
  IntPoly m = P({43, -14, 1});
  SturmChain c = SturmChain::build(m);
  QuadSurd big(mpq_class(7), mpq_class(1), 6);
  CHECK(c.variations_at_mpq(mpq_class(0)) - c.variations_at_surd(big) == 2);
  QuadSurd mid(mpq_class(7), mpq_class(0), 6);
  CHECK(c.variations_at_mpq(mpq_class(0)) - c.variations_at_surd(mid) == 1);
}

TEST_CASE("sturm partition additivity on random polynomials") {
  std::mt19937_64 rng(20260825);
  std::uniform_int_distribution<long> coeff(-9, 9);
  int done = 0;
  while (done < 40) {
    std::vector<long> cs = {coeff(rng), coeff(rng), coeff(rng), 1};
    IntPoly f(IntPoly::from_coeffs(cs));
    SturmChain ch = SturmChain::build(f);
    if (!ch.squarefree()) continue;
    ++done;
    long a = coeff(rng), span1 = 1 + (done % 5), span2 = 1 + (done % 3);
    XRat xa = XRat::of(a), xb = XRat::of(a + span1), xc = XRat::of(a + span1 + span2);
    CHECK(ch.count(xa, xc) == ch.count(xa, xb) + ch.count(xb, xc));
    CHECK(ch.count(XRat::minus_infinity(), XRat::plus_infinity()) ==
          static_cast<long>(isolate_real_roots(f, 10).size()));
  }
}

TEST_CASE("root isolation meets width and ordering contracts") {
  auto roots = isolate_real_roots(P({-2, 0, 1}), 30);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].hi() < roots[1].lo());
  for (const auto& iv : roots) {
    CHECK(iv.width() <= Dyadic(mpz_class(1), -30));
  }
  CHECK(roots[0].cmp_mpq(mpq_class(-1)) == -1);  // -sqrt(2) < -1
  CHECK(roots[1].cmp_mpq(mpq_class(1)) == 1);

  auto cube = isolate_real_roots(P({-2, -4, 0, 1}), 20);
  CHECK(cube.size() == 3);
  for (size_t i = 0; i + 1 < cube.size(); ++i) CHECK(cube[i].hi() < cube[i + 1].lo());

  CHECK(isolate_real_roots(P({1, 0, 1}), 10).empty());
  CHECK_THROWS_WITH_AS(isolate_real_roots(P({1, -2, 1}), 10),
                       "requires squarefree polynomial", std::invalid_argument);

  // dyadic roots collapse to point intervals
  auto pts = isolate_real_roots(P({-4, 0, 1}), 10);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].is_point());
  CHECK(pts[0].lo() == Dyadic(-2));
  CHECK(pts[1].is_point());
  CHECK(pts[1].lo() == Dyadic(2));
}

TEST_CASE("algebraic real comparisons are exact") {
  IntPoly p2 = P({-2, 0, 1});
  auto r2 = isolate_real_roots(p2, 8);
  AlgReal sqrt2{p2, r2[1]};
  CHECK(algreal_sign(sqrt2) == 1);
  CHECK(algreal_cmp_mpq(sqrt2, mpq_class(3, 2)) == -1);
  CHECK(algreal_cmp_mpq(sqrt2, mpq_class(7, 5)) == 1);
  CHECK(algreal_cmp_mpq(sqrt2, mpq_class(1)) == 1);

  // same number under a different annihilator: (x^2-2)(x^2-3)
  IntPoly prod = p2 * P({-3, 0, 1});
  auto pr = isolate_real_roots(prod, 8);
  REQUIRE(pr.size() == 4);
  AlgReal viaprod{prod, pr[2]};  // roots: -sqrt3 < -sqrt2 < sqrt2 < sqrt3
  AlgReal s2b = sqrt2;
  CHECK(algreal_cmp(s2b, viaprod) == 0);
  AlgReal sqrt3{P({-3, 0, 1}), isolate_real_roots(P({-3, 0, 1}), 8)[1]};
  AlgReal s2c = sqrt2;
  CHECK(algreal_cmp(s2c, sqrt3) == -1);

  AlgReal ratl = AlgReal::of_mpq(mpq_class(-3, 7));
  CHECK(algreal_sign(ratl) == -1);
  CHECK(algreal_cmp_mpq(ratl, mpq_class(-3, 7)) == 0);
  AlgReal zero = AlgReal::of_mpq(0);
  CHECK(algreal_sign(zero) == 0);

  AlgReal s2d = sqrt2;
  CHECK(sign_at_algreal(P({-2, 0, 1}), s2d) == 0);
  CHECK(sign_at_algreal(P({-1, 1}), s2d) == 1);   // sqrt2 - 1 > 0
  CHECK(sign_at_algreal(P({-3, 0, 0, 1}), s2d) == -1);  // 2*sqrt2 < 3
  AlgReal neg{p2, r2[0]};
  CHECK(sign_at_algreal(P({0, 0, 0, 1}), neg) == -1);
  double d = algreal_to_double(s2d);
  CHECK(d > 1.41421356);
  CHECK(d < 1.41421357);
}

TEST_CASE("interval refinement tightens without losing the root") {
  IntPoly f = P({-2, 0, 1});
  auto iv = isolate_real_roots(f, 4)[1];
  DyadicInterval fine = refine_interval(f, iv, 100);
  CHECK(fine.width() <= Dyadic(mpz_class(1), -100));
  CHECK(fine.lo() >= iv.lo());
  CHECK(fine.hi() <= iv.hi());
  CHECK(f.sign_at_dyadic(fine.lo()) * f.sign_at_dyadic(fine.hi()) < 0);
}

TEST_CASE("integer factorization utilities") {
  auto fac = factor_mpz(mpz_class(2016));  // 2^5 * 3^2 * 7
  REQUIRE(fac.size() == 3);
  CHECK(fac[0] == std::make_pair(mpz_class(2), 5));
  CHECK(fac[1] == std::make_pair(mpz_class(3), 2));
  CHECK(fac[2] == std::make_pair(mpz_class(7), 1));
  CHECK(divisors_mpz(mpz_class(360)).size() == 24);
  CHECK(divisors_mpz(mpz_class(-12)) ==
        std::vector<mpz_class>({1, 2, 3, 4, 6, 12}));
  CHECK(square_part(mpz_class(360)) == 6);
  CHECK(square_part(mpz_class(148)) == 2);
  CHECK(square_part(mpz_class(49)) == 7);
  CHECK(is_probable_prime(mpz_class(1000000007)));
  CHECK(!is_probable_prime(mpz_class(1000000007) * 17));
  // exercises the rho path: semiprime with both factors above the sieve
  mpz_class semi = mpz_class(1000003) * mpz_class(1000033);
  auto sf = factor_mpz(semi);
  REQUIRE(sf.size() == 2);
  CHECK(sf[0].first == 1000003);
  CHECK(sf[1].first == 1000033);
}

static bool same_multiset(std::vector<IntPoly> a, std::vector<IntPoly> b) {
  auto key = [](const IntPoly& p) { return p.coeff_list(); };
  std::vector<std::string> ka, kb;
  for (auto& p : a) ka.push_back(key(p));
  for (auto& p : b) kb.push_back(key(p));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

TEST_CASE("factoring monic polynomials of small degree") {
  auto f1 = factor_small(P({4, 0, -5, 0, 1}));
  CHECK(same_multiset(f1, {P({-1, 1}), P({1, 1}), P({-2, 1}), P({2, 1})}));
  CHECK(factor_small(P({9, 0, -14, 0, 1})).size() == 1);
  CHECK(factor_small(P({1, 0, -10, 0, 1})).size() == 1);
  auto f2 = factor_small(P({-2, 0, 1}) * P({-2, 0, 1}));
  CHECK(same_multiset(f2, {P({-2, 0, 1}), P({-2, 0, 1})}));
  auto f3 = factor_small(P({-2, 0, 1}) * P({1, 0, -10, 0, 1}));
  CHECK(same_multiset(f3, {P({-2, 0, 1}), P({1, 0, -10, 0, 1})}));
  auto f4 = factor_small(P({-2, 0, 1}) * P({-1, -1, 0, 1}));
  CHECK(same_multiset(f4, {P({-2, 0, 1}), P({-1, -1, 0, 1})}));
  auto f5 = factor_small(P({0, 0, 2, 1}) + P({0, 0, 0, 0, 1}));  // x^4+x^3+2x^2 = x^2 (x^2+x+2)
  CHECK(same_multiset(f5, {P({0, 1}), P({0, 1}), P({2, 1, 1})}));
  CHECK(factor_small(IntPoly::one()).empty());
  CHECK_THROWS_AS(factor_small(P({-2, 0, 2})), std::invalid_argument);
  CHECK_THROWS_WITH_AS(factor_small(P({1, 1, 0, 0, 0, 0, 0, 0, 0, 1})),
                       "out of supported range", std::invalid_argument);
}

TEST_CASE("factor product round-trips on random composites") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<long> small(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    // random monic quadratics/linears multiplied together, degree <= 6
    IntPoly f = IntPoly::one();
    int parts = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < parts; ++i) {
      if (rng() % 2) {
        f = f * P({small(rng), 1});
      } else {
        f = f * P({small(rng), small(rng), 1});
      }
    }
    if (f.degree() > 6) continue;
    auto fs = factor_small(f);
    IntPoly prod = IntPoly::one();
    for (const auto& h : fs) {
      CHECK(h.is_monic());
      CHECK(poly_is_irreducible(h));
      prod = prod * h;
    }
    CHECK(prod == f);
  }
}

TEST_CASE("totally real detection") {
  CHECK(poly_is_totally_real(P({-5, 0, 1})));
  CHECK(poly_is_totally_real(P({-2, -4, 0, 1})));
  CHECK(poly_is_totally_real(P({9, 0, -14, 0, 1})));
  CHECK(poly_is_totally_real(P({-1, -2, 1, 1})));
  CHECK(!poly_is_totally_real(P({1, 0, 1})));
  CHECK(!poly_is_totally_real(P({-2, 0, 0, 1})));
  CHECK_THROWS_WITH_AS(poly_is_totally_real(P({-1, 0, 1})), "not irreducible",
                       std::domain_error);
}
