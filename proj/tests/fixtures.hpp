#pragma once

#include "vrb/cohomology.hpp"
#include "vrb/io.hpp"

#include <random>
#include <string>

namespace fixtures {

inline vrb::AlgebraSpec load_algebra(const std::string& name) {
  return vrb::parse_algebra(std::string(VRB_DATA_DIR) + "/" + name + ".json");
}

inline vrb::OperatorSpec load_operator(const std::string& name,
                                       const vrb::AlgebraSpec& alg) {
  return vrb::parse_operator(std::string(VRB_DATA_DIR) + "/" + name + ".json",
                             alg);
}

inline vrb::Element gen(const vrb::AlgebraSpec& alg, const std::string& name) {
  return vrb::Element::generator(alg.basis.require(name));
}

// c * var^p * d^q g
inline vrb::FormalPoly term(const vrb::AlgebraSpec& alg, const vrb::Rational& c,
                            vrb::Var var, unsigned var_power,
                            unsigned del_power, const std::string& g) {
  vrb::Element e;
  e.add(alg.basis.require(g), del_power, c);
  vrb::Monomial m;
  m.raise(var, var_power);
  vrb::FormalPoly p;
  p.add(m, e);
  return p;
}

// kappa * id as an OperatorSpec of the given weight.
inline vrb::OperatorSpec scalar_op(const vrb::AlgebraSpec& alg,
                                   const vrb::Rational& kappa,
                                   const vrb::Rational& weight) {
  vrb::OperatorSpec op;
  op.name = "scalar(" + vrb::to_string(kappa) + ")";
  op.weight = weight;
  for (vrb::GenId g = 0; g < alg.basis.size(); ++g)
    op.action.set(g, kappa * vrb::Element::generator(g));
  return op;
}

inline vrb::Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 4);
  return vrb::Rational(num(rng), den(rng));
}

// Random element honoring torsion bounds, d-degree <= 2.
inline vrb::Element random_element(std::mt19937& rng,
                                   const vrb::Basis& basis) {
  vrb::Element e;
  std::uniform_int_distribution<unsigned> del(0, 2);
  for (vrb::GenId g = 0; g < basis.size(); ++g) {
    unsigned d = del(rng);
    if (basis.info(g).torsion_order && d >= *basis.info(g).torsion_order)
      d = 0;
    e.add(g, d, random_rational(rng));
  }
  return e;
}

// Random homogeneous element of the requested parity (may be zero when the
// basis has no generators of that parity).
inline vrb::Element random_homogeneous(std::mt19937& rng,
                                       const vrb::Basis& basis, int parity) {
  vrb::Element e;
  std::uniform_int_distribution<unsigned> del(0, 2);
  for (vrb::GenId g = 0; g < basis.size(); ++g) {
    if (basis.info(g).parity != parity) continue;
    unsigned d = del(rng);
    if (basis.info(g).torsion_order && d >= *basis.info(g).torsion_order)
      d = 0;
    e.add(g, d, random_rational(rng));
  }
  return e;
}

inline vrb::FormalPoly random_poly(std::mt19937& rng, const vrb::Basis& basis,
                                   vrb::Var var, unsigned max_degree) {
  vrb::FormalPoly p;
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  for (int t = 0; t < 3; ++t) {
    vrb::Monomial m;
    m.raise(var, deg(rng));
    p.add(m, random_element(rng, basis));
  }
  return p;
}

}  // namespace fixtures
