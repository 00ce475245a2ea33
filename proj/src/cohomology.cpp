#include "vrb/cohomology.hpp"

#include <algorithm>

namespace vrb {

CheckReport validate_cochain1(const AlgebraSpec& alg, const Cochain1& psi) {
  return validate_genmap(alg, psi, "cochain1");
}

static void require_valid_cochain1(const AlgebraSpec& alg,
                                   const Cochain1& psi) {
  CheckReport report = validate_cochain1(alg, psi);
  if (!report.passed)
    throw ValidationError("1-cochain fails validation at generator '" +
                          report.witnesses.front().args.front() + "'");
}

Cochain2 build_phi(const AlgebraSpec& alg, const OperatorSpec& op) {
  require_valid_operator(alg, op);
  const Basis& basis = alg.basis;
  Cochain2 phi{.table = {}, .source = "phi(" + op.name + ")"};
  for (GenId i = 0; i < basis.size(); ++i) {
    for (GenId j = 0; j < basis.size(); ++j) {
      Element a = Element::generator(i);
      Element b = Element::generator(j);
      FormalPoly entry =
          eval_pairing(basis, alg.bracket, a, apply_operator(basis, op, b),
                       Var::mu) +
          eval_pairing(basis, alg.bracket, apply_operator(basis, op, a), b,
                       Var::mu) +
          (op.weight - 1) * eval_pairing(basis, alg.bracket, a, b, Var::mu);
      phi.table.set(i, j, std::move(entry));
    }
  }
  return phi;
}

CheckReport check_cocycle(const AlgebraSpec& alg, const OperatorSpec& op,
                          const Cochain2& cochain) {
  require_valid_operator(alg, op);
  CheckReport report{.check_name = "cocycle"};
  const Basis& basis = alg.basis;
  AlgebraSpec deformed = deform(alg, op);
  for (GenId a = 0; a < basis.size(); ++a) {
    for (GenId b = 0; b < basis.size(); ++b) {
      for (GenId c = 0; c < basis.size(); ++c) {
        Element ea = Element::generator(a);
        Element eb = Element::generator(b);
        Element ec = Element::generator(c);
        Rational eps = parity_sign_gens(basis, a, b);
        Element pa = apply_operator(basis, op, ea);
        Element pb = apply_operator(basis, op, eb);

        // Module action: original bracket with P on the first argument.
        FormalPoly phi_bc = eval_pairing(basis, cochain.table, eb, ec, Var::mu);
        FormalPoly phi_ac = eval_pairing(basis, cochain.table, ea, ec, Var::mu);
        FormalPoly lhs =
            eval_pairing_nested(basis, alg.bracket, FormalPoly::constant(pa),
                                phi_bc, Var::nu) -
            eps * eval_pairing_nested(basis, alg.bracket,
                                      FormalPoly::constant(pb), phi_ac,
                                      Var::nu);

        FormalPoly rhs = eval_pairing_shifted(basis, cochain.table,
                                              deformed.bracket.at(a, b), ec);

        FormalPoly residual = lhs - rhs;
        ++report.tuples_checked;
        if (!residual.is_zero()) {
          report.passed = false;
          report.witnesses.push_back(
              {{basis.info(a).name, basis.info(b).name, basis.info(c).name},
               std::move(residual)});
        }
      }
    }
  }
  return report;
}

Cochain2 delta_one(const AlgebraSpec& alg, const OperatorSpec& op,
                   const Cochain1& psi) {
  require_valid_operator(alg, op);
  require_valid_cochain1(alg, psi);
  const Basis& basis = alg.basis;
  AlgebraSpec deformed = deform(alg, op);
  Cochain2 out{.table = {}, .source = "delta(psi)"};
  for (GenId i = 0; i < basis.size(); ++i) {
    for (GenId j = 0; j < basis.size(); ++j) {
      Element a = Element::generator(i);
      Element b = Element::generator(j);
      Rational eps = parity_sign_gens(basis, i, j);
      Element pa = apply_operator(basis, op, a);
      Element p_psi_a =
          apply_operator(basis, op, psi.apply(basis, a));
      FormalPoly entry =
          eval_pairing(basis, alg.bracket, pa, psi.apply(basis, b), Var::mu) -
          psi.apply(basis, deformed.bracket.at(i, j)) +
          eps * eval_pairing(basis, alg.bracket, p_psi_a, b, Var::mu);
      out.table.set(i, j, std::move(entry));
    }
  }
  return out;
}

CheckReport check_deltaP_identity(const AlgebraSpec& alg,
                                  const OperatorSpec& op) {
  CheckReport rb = check_rb(alg, op);
  if (!rb.passed)
    throw HypothesisError("delta-P identity: hypothesis not met, '" + op.name +
                          "' is not a Rota-Baxter operator of weight " +
                          to_string(op.weight));
  CheckReport report{.check_name = "delta-p-identity"};
  const Basis& basis = alg.basis;
  Cochain2 dp = delta_one(alg, op, op.action);
  for (GenId i = 0; i < basis.size(); ++i) {
    for (GenId j = 0; j < basis.size(); ++j) {
      Element a = Element::generator(i);
      Element b = Element::generator(j);
      Element p2a = apply_operator(basis, op, apply_operator(basis, op, a));
      FormalPoly expected =
          parity_sign_gens(basis, i, j) *
          eval_pairing(basis, alg.bracket, p2a, b, Var::mu);
      FormalPoly residual = dp.table.at(i, j) - expected;
      ++report.tuples_checked;
      if (!residual.is_zero()) {
        report.passed = false;
        report.witnesses.push_back(
            {{basis.info(i).name, basis.info(j).name}, std::move(residual)});
      }
    }
  }
  return report;
}

CheckReport check_dagger(const AlgebraSpec& alg, const OperatorSpec& op) {
  require_valid_operator(alg, op);
  CheckReport report{.check_name = "dagger"};
  const Basis& basis = alg.basis;
  for (GenId i = 0; i < basis.size(); ++i) {
    for (GenId j = 0; j < basis.size(); ++j) {
      Element a = Element::generator(i);
      Element b = Element::generator(j);
      Element pa = apply_operator(basis, op, a);
      Element pb = apply_operator(basis, op, b);
      Element p2a = apply_operator(basis, op, pa);
      FormalPoly lhs =
          eval_pairing(basis, alg.bracket, a, pb, Var::mu) +
          eval_pairing(basis, alg.bracket, pa, b, Var::mu) +
          (op.weight - 1) * eval_pairing(basis, alg.bracket, a, b, Var::mu);
      FormalPoly rhs = parity_sign_gens(basis, i, j) *
                       eval_pairing(basis, alg.bracket, p2a, b, Var::mu);
      FormalPoly residual = lhs - rhs;
      ++report.tuples_checked;
      if (!residual.is_zero()) {
        report.passed = false;
        report.witnesses.push_back(
            {{basis.info(i).name, basis.info(j).name}, std::move(residual)});
      }
    }
  }
  return report;
}

CheckReport check_coboundary_eq(const AlgebraSpec& alg, const OperatorSpec& op,
                                const Cochain1& psi) {
  Cochain2 phi = build_phi(alg, op);
  Cochain2 dpsi = delta_one(alg, op, psi);
  CheckReport report{.check_name = "coboundary-eq"};
  const Basis& basis = alg.basis;
  for (GenId i = 0; i < basis.size(); ++i) {
    for (GenId j = 0; j < basis.size(); ++j) {
      FormalPoly residual = phi.table.at(i, j) - dpsi.table.at(i, j);
      ++report.tuples_checked;
      if (!residual.is_zero()) {
        report.passed = false;
        report.witnesses.push_back(
            {{basis.info(i).name, basis.info(j).name}, std::move(residual)});
      }
    }
  }
  return report;
}

ScalarSolution solve_scalar(const Rational& weight, ScalarKind kind) {
  ScalarSolution sol{.kind = kind, .weight = weight};
  if (kind == ScalarKind::coboundary) {
    // k^2 - 2k - (w - 1) = 0, k = 1 +- sqrt(w)
    auto root = rational_sqrt(weight);
    if (!root) {
      sol.irrational = true;
      return sol;
    }
    sol.roots.push_back(1 + *root);
    if (*root != 0) sol.roots.push_back(1 - *root);
  } else {
    // k^2 + w k = 0, k in {0, -w}
    sol.roots.push_back(0);
    if (weight != 0) sol.roots.push_back(-weight);
  }
  // Exact substitution back into the quadratic.
  for (const Rational& k : sol.roots) {
    Rational value = kind == ScalarKind::coboundary
                         ? Rational(k * k - 2 * k - (weight - 1))
                         : Rational(k * k + weight * k);
    if (value != 0)
      throw Error("scalar root " + to_string(k) + " fails verification");
  }
  return sol;
}

}  // namespace vrb
