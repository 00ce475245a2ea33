#include "vrb/algebra.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace vrb;
using fixtures::gen;
using fixtures::term;

TEST_CASE("eval_pairing on the Heisenberg table") {
  AlgebraSpec alg = fixtures::load_algebra("heis1");
  Element alpha = gen(alg, "alpha");
  Element k = gen(alg, "k");

  CHECK(eval_pairing(alg.basis, alg.bracket, alpha, alpha, Var::mu) ==
        term(alg, Rational(1, 2), Var::mu, 2, 0, "k"));

  Element dalpha = apply_partial(alg.basis, alpha, 1);
  CHECK(eval_pairing(alg.basis, alg.bracket, dalpha, alpha, Var::mu) ==
        term(alg, Rational(-1, 2), Var::mu, 3, 0, "k"));

  CHECK(eval_pairing(alg.basis, alg.bracket, k, alpha, Var::mu).is_zero());

  CHECK(eval_pairing(alg.basis, alg.bracket, alpha, dalpha, Var::mu) ==
        term(alg, Rational(1, 2), Var::mu, 3, 0, "k"));
}

TEST_CASE("eval_pairing_nested extends coefficient-wise") {
  AlgebraSpec alg = fixtures::load_algebra("heis1");
  Element alpha = gen(alg, "alpha");

  // I(alpha, (1/2) mu^2 k)(nu) = 0 since the (alpha, k) entry is zero
  FormalPoly inner = term(alg, Rational(1, 2), Var::mu, 2, 0, "k");
  CHECK(eval_pairing_nested(alg.basis, alg.bracket,
                            FormalPoly::constant(alpha), inner, Var::nu)
            .is_zero());

  // I(mu alpha, alpha)(nu) = (1/2) mu nu^2 k
  FormalPoly carried = term(alg, 1, Var::mu, 1, 0, "alpha");
  FormalPoly out = eval_pairing_nested(alg.basis, alg.bracket, carried,
                                       FormalPoly::constant(alpha), Var::nu);
  FormalPoly expected;
  {
    Element e;
    e.add(alg.basis.require("k"), 0, Rational(1, 2));
    expected.add(Monomial{1, 2}, e);
  }
  CHECK(out == expected);

  // zero table
  Pairing zero;
  CHECK(eval_pairing_nested(alg.basis, zero, carried,
                            FormalPoly::constant(alpha), Var::nu)
            .is_zero());

  // variable collision
  FormalPoly bad = term(alg, 1, Var::nu, 1, 0, "alpha");
  CHECK_THROWS_AS(eval_pairing_nested(alg.basis, alg.bracket, bad,
                                      FormalPoly::constant(alpha), Var::nu),
                  ValidationError);
}

TEST_CASE("parity_sign") {
  AlgebraSpec alg = fixtures::load_algebra("odd1");
  Element h = gen(alg, "h");
  Element theta = gen(alg, "theta");
  CHECK(parity_sign(alg.basis, h, h) == 1);
  CHECK(parity_sign(alg.basis, theta, h) == 1);
  CHECK(parity_sign(alg.basis, theta, theta) == -1);
  CHECK_THROWS_AS(parity_sign(alg.basis, h + theta, h), ValidationError);
}

TEST_CASE("eval_pairing is bilinear") {
  std::mt19937 rng(23);
  AlgebraSpec alg = fixtures::load_algebra("heis2");
  for (int i = 0; i < 50; ++i) {
    Element a1 = fixtures::random_element(rng, alg.basis);
    Element a2 = fixtures::random_element(rng, alg.basis);
    Element b = fixtures::random_element(rng, alg.basis);
    Rational c1 = fixtures::random_rational(rng);
    Rational c2 = fixtures::random_rational(rng);
    CHECK(eval_pairing(alg.basis, alg.bracket, c1 * a1 + c2 * a2, b, Var::mu) ==
          c1 * eval_pairing(alg.basis, alg.bracket, a1, b, Var::mu) +
              c2 * eval_pairing(alg.basis, alg.bracket, a2, b, Var::mu));
    CHECK(eval_pairing(alg.basis, alg.bracket, b, c1 * a1 + c2 * a2, Var::mu) ==
          c1 * eval_pairing(alg.basis, alg.bracket, b, a1, Var::mu) +
              c2 * eval_pairing(alg.basis, alg.bracket, b, a2, Var::mu));
  }
}

TEST_CASE("reduction-order independence of the evaluator") {
  for (const char* name : {"heis1", "heis2", "odd1", "even1"}) {
    AlgebraSpec alg = fixtures::load_algebra(name);
    for (GenId i = 0; i < alg.basis.size(); ++i) {
      for (GenId j = 0; j < alg.basis.size(); ++j) {
        for (unsigned m = 0; m <= 3; ++m) {
          for (unsigned n = 0; n <= 3; ++n) {
            Element a;
            a.add(i, m, 1);
            Element b;
            b.add(j, n, 1);
            CHECK(eval_pairing(alg.basis, alg.bracket, a, b, Var::mu) ==
                  eval_pairing_left_first(alg.basis, alg.bracket, a, b,
                                          Var::mu));
          }
        }
      }
    }
  }
}

TEST_CASE("eval_pairing of homogeneous arguments is homogeneous") {
  std::mt19937 rng(29);
  AlgebraSpec alg = fixtures::load_algebra("odd1");
  for (int i = 0; i < 50; ++i) {
    for (int pa = 0; pa <= 1; ++pa) {
      for (int pb = 0; pb <= 1; ++pb) {
        Element a = fixtures::random_homogeneous(rng, alg.basis, pa);
        Element b = fixtures::random_homogeneous(rng, alg.basis, pb);
        FormalPoly v = eval_pairing(alg.basis, alg.bracket, a, b, Var::mu);
        if (v.is_zero()) continue;
        CHECK(parity_of(alg.basis, v) == (pa + pb) % 2);
      }
    }
  }
}

TEST_CASE("skew auto-completion fills missing reverse entries") {
  AlgebraSpec alg = fixtures::load_algebra("odd1");
  GenId h = alg.basis.require("h");
  GenId theta = alg.basis.require("theta");
  // (theta, h) was not in the file; completion gives -mu sigma since
  // d sigma = 0 and the parity sign is +1.
  CHECK(alg.bracket.has(theta, h));
  CHECK(alg.bracket.at(theta, h) == term(alg, -1, Var::mu, 1, 0, "sigma"));
}

TEST_CASE("validation rejects bad tables") {
  // parity-inconsistent entry: even-even pair valued in an odd generator
  AlgebraSpec bad;
  bad.basis = Basis({{"a", 0, {}}, {"t", 1, {}}});
  Element t = Element::generator(1);
  bad.bracket.set(0, 0, FormalPoly::constant(t));
  CHECK_THROWS_AS(complete_and_validate(bad), ValidationError);

  // torsion-killed term: strict errors, lenient reduces
  AlgebraSpec tors;
  tors.basis = Basis({{"a", 0, {}}, {"k", 0, 1u}});
  Element dk;
  dk.add(1, 1, 1);  // d k with k of torsion order 1
  tors.bracket.set(0, 0, FormalPoly::constant(dk));
  CHECK_THROWS_AS(complete_and_validate(tors, true), ValidationError);
  AlgebraSpec reduced = complete_and_validate(tors, false);
  CHECK(!reduced.bracket.has(0, 0));
}
