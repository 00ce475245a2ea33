#pragma once

#include "vrb/algebra.hpp"
#include "vrb/report.hpp"
#include "vrb/rota_baxter.hpp"

#include <string>
#include <vector>

namespace vrb {

// A 2-cochain is a generator-pair table evaluated with the same
// sesquilinear rules as the bracket.
struct Cochain2 {
  Pairing table;
  std::string source;  // "phi(P)" or "delta(psi)"
};

using Cochain1 = GenMap;

CheckReport validate_cochain1(const AlgebraSpec& alg, const Cochain1& psi);

// Phi = deformed bracket - original bracket, computed by the defining
// three-term formula on generator pairs.
Cochain2 build_phi(const AlgebraSpec& alg, const OperatorSpec& op);

// Cocycle condition over all generator triples, with the module action
// "original bracket, first argument pushed through P".
CheckReport check_cocycle(const AlgebraSpec& alg, const OperatorSpec& op,
                          const Cochain2& cochain);

// Coboundary of a 1-cochain.
Cochain2 delta_one(const AlgebraSpec& alg, const OperatorSpec& op,
                   const Cochain1& psi);

// delta(P) = sign * I(P^2 a, b); requires check_rb to pass, otherwise
// throws HypothesisError.
CheckReport check_deltaP_identity(const AlgebraSpec& alg,
                                  const OperatorSpec& op);

// Necessary condition for Phi = delta(P); failing pairs certify that the
// candidate psi = P does not trivialize Phi.
CheckReport check_dagger(const AlgebraSpec& alg, const OperatorSpec& op);

// Entrywise build_phi == delta_one(psi) on generator pairs.
CheckReport check_coboundary_eq(const AlgebraSpec& alg, const OperatorSpec& op,
                                const Cochain1& psi);

enum class ScalarKind { coboundary, rb };

struct ScalarSolution {
  ScalarKind kind;
  Rational weight;
  std::vector<Rational> roots;
  bool irrational = false;  // quadratic has no rational roots
};

// coboundary: rational roots of k^2 - 2k - (w - 1) = 0, i.e. 1 +- sqrt(w).
// rb: roots of k^2 + w k = 0, i.e. {0, -w}.
ScalarSolution solve_scalar(const Rational& weight, ScalarKind kind);

}  // namespace vrb
