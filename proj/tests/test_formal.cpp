#include "vrb/formal.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace vrb;
using fixtures::gen;
using fixtures::term;

namespace {

AlgebraSpec heis1() { return fixtures::load_algebra("heis1"); }

}  // namespace

TEST_CASE("linear_combine cancels, merges and sums") {
  AlgebraSpec alg = heis1();
  Element alpha = gen(alg, "alpha");
  Element k = gen(alg, "k");

  std::vector<std::pair<Rational, Element>> parts{{1, alpha}, {-1, alpha}};
  CHECK(linear_combine(parts).is_zero());

  parts = {{Rational(1, 2), alpha}, {Rational(1, 2), alpha}};
  CHECK(linear_combine(parts) == alpha);

  Element dalpha = apply_partial(alg.basis, alpha, 1);
  parts = {{2, dalpha}, {3, k}};
  Element expected;
  expected.add(alg.basis.require("alpha"), 1, 2);
  expected.add(alg.basis.require("k"), 0, 3);
  CHECK(linear_combine(parts) == expected);
}

TEST_CASE("apply_partial raises powers and drops torsion-killed terms") {
  AlgebraSpec alg = heis1();
  Element alpha = gen(alg, "alpha");
  Element k = gen(alg, "k");

  Element dalpha;
  dalpha.add(alg.basis.require("alpha"), 1, 1);
  CHECK(apply_partial(alg.basis, alpha, 1) == dalpha);

  CHECK(apply_partial(alg.basis, k, 1).is_zero());  // d k = 0

  Element mixed = dalpha + k;
  Element d3alpha;
  d3alpha.add(alg.basis.require("alpha"), 3, 1);
  CHECK(apply_partial(alg.basis, mixed, 2) == d3alpha);
}

TEST_CASE("apply_partial composes additively") {
  AlgebraSpec alg = heis1();
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Element e = fixtures::random_element(rng, alg.basis);
    unsigned m = rng() % 3, n = rng() % 3;
    CHECK(apply_partial(alg.basis, apply_partial(alg.basis, e, m), n) ==
          apply_partial(alg.basis, e, m + n));
  }
}

TEST_CASE("shift_negate on worked examples") {
  AlgebraSpec alg = heis1();

  // (1/2) lambda^2 k  ->  (1/2) mu^2 k   (d kills k)
  FormalPoly p = term(alg, Rational(1, 2), Var::nu, 2, 0, "k");
  CHECK(shift_negate(alg.basis, p, Var::nu, Var::mu) ==
        term(alg, Rational(1, 2), Var::mu, 2, 0, "k"));

  // degree-0 value is untouched
  FormalPoly c = FormalPoly::constant(gen(alg, "alpha"));
  CHECK(shift_negate(alg.basis, c, Var::nu, Var::mu) == c);

  // lambda g -> -mu g - dg for free g
  FormalPoly lg = term(alg, 1, Var::nu, 1, 0, "alpha");
  FormalPoly expected = term(alg, -1, Var::mu, 1, 0, "alpha") +
                        term(alg, -1, Var::mu, 0, 1, "alpha");
  CHECK(shift_negate(alg.basis, lg, Var::nu, Var::mu) == expected);
}

TEST_CASE("shift_negate rejects two-variable input") {
  AlgebraSpec alg = heis1();
  FormalPoly p = term(alg, 1, Var::nu, 1, 0, "alpha") +
                 term(alg, 1, Var::mu, 1, 0, "alpha");
  CHECK_THROWS_AS(shift_negate(alg.basis, p, Var::nu, Var::mu),
                  ValidationError);
}

TEST_CASE("shift_negate is an involution") {
  std::mt19937 rng(11);
  for (const char* name : {"heis1", "odd1", "even1"}) {
    AlgebraSpec alg = fixtures::load_algebra(name);
    for (int i = 0; i < 100; ++i) {
      FormalPoly p = fixtures::random_poly(rng, alg.basis, Var::nu, 5);
      FormalPoly once = shift_negate(alg.basis, p, Var::nu, Var::mu);
      CHECK(shift_negate(alg.basis, once, Var::mu, Var::nu) == p);
    }
  }
}

TEST_CASE("substitute_sum on worked examples") {
  AlgebraSpec alg = heis1();

  FormalPoly sq = term(alg, 1, Var::nu, 2, 0, "alpha");
  FormalPoly expected = term(alg, 1, Var::nu, 2, 0, "alpha");
  {
    Monomial m{1, 1};
    Element e = gen(alg, "alpha");
    e.scale(2);
    expected.add(m, e);
  }
  expected += term(alg, 1, Var::mu, 2, 0, "alpha");
  CHECK(substitute_sum(sq, Var::nu, Var::nu, Var::mu) == expected);

  FormalPoly c = FormalPoly::constant(gen(alg, "alpha"));
  CHECK(substitute_sum(c, Var::nu, Var::nu, Var::mu) == c);

  FormalPoly lin = term(alg, 1, Var::nu, 1, 0, "alpha");
  CHECK(substitute_sum(lin, Var::nu, Var::nu, Var::mu) ==
        lin + term(alg, 1, Var::mu, 1, 0, "alpha"));
}

TEST_CASE("substitute_sum at mu = 0 is the identity") {
  std::mt19937 rng(13);
  AlgebraSpec alg = fixtures::load_algebra("heis2");
  for (int i = 0; i < 100; ++i) {
    FormalPoly p = fixtures::random_poly(rng, alg.basis, Var::nu, 5);
    FormalPoly s = substitute_sum(p, Var::nu, Var::nu, Var::mu);
    CHECK(drop_positive_powers(s, Var::mu) == p);
  }
}

TEST_CASE("kernel operations are linear") {
  std::mt19937 rng(17);
  AlgebraSpec alg = fixtures::load_algebra("odd1");
  for (int i = 0; i < 100; ++i) {
    FormalPoly p1 = fixtures::random_poly(rng, alg.basis, Var::nu, 4);
    FormalPoly p2 = fixtures::random_poly(rng, alg.basis, Var::nu, 4);
    Rational c1 = fixtures::random_rational(rng);
    Rational c2 = fixtures::random_rational(rng);
    FormalPoly combo = c1 * p1 + c2 * p2;

    CHECK(shift_negate(alg.basis, combo, Var::nu, Var::mu) ==
          c1 * shift_negate(alg.basis, p1, Var::nu, Var::mu) +
              c2 * shift_negate(alg.basis, p2, Var::nu, Var::mu));
    CHECK(substitute_sum(combo, Var::nu, Var::nu, Var::mu) ==
          c1 * substitute_sum(p1, Var::nu, Var::nu, Var::mu) +
              c2 * substitute_sum(p2, Var::nu, Var::nu, Var::mu));
    CHECK(apply_partial(alg.basis, combo, 2) ==
          c1 * apply_partial(alg.basis, p1, 2) +
              c2 * apply_partial(alg.basis, p2, 2));
  }
}

TEST_CASE("rational helpers") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("4/-6") == Rational(-2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(!rational_sqrt(Rational(2)).has_value());
  CHECK(!rational_sqrt(Rational(-1)).has_value());
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
}
