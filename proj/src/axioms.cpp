#include "vrb/axioms.hpp"

namespace vrb {

namespace {

void record(CheckReport& report, std::vector<std::string> args,
            FormalPoly residual) {
  ++report.tuples_checked;
  if (residual.is_zero()) return;
  report.passed = false;
  report.witnesses.push_back({std::move(args), std::move(residual)});
}

}  // namespace

CheckReport check_vacuum(const AlgebraSpec& alg) {
  if (!alg.vacuum)
    throw ValidationError("check_vacuum: algebra '" + alg.name +
                          "' has no vacuum");
  CheckReport report{.check_name = "vacuum"};
  const Basis& basis = alg.basis;
  Element vac = Element::generator(*alg.vacuum);
  for (GenId g = 0; g < basis.size(); ++g) {
    Element gen = Element::generator(g);
    FormalPoly expected = FormalPoly::constant(gen);
    record(report, {basis.info(*alg.vacuum).name, basis.info(g).name},
           eval_pairing(basis, alg.bracket, vac, gen, Var::mu) - expected);
    record(report, {basis.info(g).name, basis.info(*alg.vacuum).name},
           eval_pairing(basis, alg.bracket, gen, vac, Var::mu) - expected);
  }
  return report;
}

CheckReport check_skew(const AlgebraSpec& alg) {
  CheckReport report{.check_name = "skew"};
  const Basis& basis = alg.basis;
  for (GenId i = 0; i < basis.size(); ++i) {
    for (GenId j = 0; j < basis.size(); ++j) {
      FormalPoly expected = shift_negate(basis, alg.bracket.at(i, j), Var::mu,
                                         Var::mu);
      expected.scale(parity_sign_gens(basis, i, j));
      record(report, {basis.info(i).name, basis.info(j).name},
             alg.bracket.at(j, i) - expected);
    }
  }
  return report;
}

CheckReport check_jacobi(const AlgebraSpec& alg) {
  CheckReport report{.check_name = "jacobi"};
  const Basis& basis = alg.basis;
  for (GenId a = 0; a < basis.size(); ++a) {
    for (GenId b = 0; b < basis.size(); ++b) {
      for (GenId c = 0; c < basis.size(); ++c) {
        Element ea = Element::generator(a);
        Element eb = Element::generator(b);
        Element ec = Element::generator(c);
        Rational eps = parity_sign_gens(basis, a, b);

        FormalPoly inner_bc = eval_pairing(basis, alg.bracket, eb, ec, Var::mu);
        FormalPoly inner_ac = eval_pairing(basis, alg.bracket, ea, ec, Var::mu);
        FormalPoly lhs =
            eval_pairing_nested(basis, alg.bracket, FormalPoly::constant(ea),
                                inner_bc, Var::nu) -
            eps * eval_pairing_nested(basis, alg.bracket,
                                      FormalPoly::constant(eb), inner_ac,
                                      Var::nu);

        FormalPoly inner_ab = eval_pairing(basis, alg.bracket, ea, eb, Var::mu);
        FormalPoly rhs = eval_pairing_shifted(basis, alg.bracket, inner_ab, ec);

        record(report,
               {basis.info(a).name, basis.info(b).name, basis.info(c).name},
               lhs - rhs);
      }
    }
  }
  return report;
}

CheckReport check_v2_consistency(const AlgebraSpec& alg) {
  CheckReport report{.check_name = "v2-consistency"};
  report.note = "evaluator self-test: left-first vs right-first reduction";
  const Basis& basis = alg.basis;
  for (GenId i = 0; i < basis.size(); ++i) {
    for (GenId j = 0; j < basis.size(); ++j) {
      for (unsigned m = 0; m <= 3; ++m) {
        for (unsigned n = 0; n <= 3; ++n) {
          Element a;
          a.add(i, m, 1);
          Element b;
          b.add(j, n, 1);
          FormalPoly right_first =
              eval_pairing(basis, alg.bracket, a, b, Var::mu);
          FormalPoly left_first =
              eval_pairing_left_first(basis, alg.bracket, a, b, Var::mu);
          record(report,
                 {"d^" + std::to_string(m) + " " + basis.info(i).name,
                  "d^" + std::to_string(n) + " " + basis.info(j).name},
                 right_first - left_first);
        }
      }
    }
  }
  return report;
}

std::vector<CheckReport> check_all(const AlgebraSpec& alg, bool unital) {
  std::vector<CheckReport> reports;
  if (unital) reports.push_back(check_vacuum(alg));
  reports.push_back(check_v2_consistency(alg));
  reports.push_back(check_skew(alg));
  reports.push_back(check_jacobi(alg));
  return reports;
}

}  // namespace vrb
