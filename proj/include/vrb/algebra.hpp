#pragma once

#include "vrb/formal.hpp"

#include <map>
#include <optional>
#include <string>

namespace vrb {

// Generator-pair table of one-variable FormalPolys (stored in mu).
// Absent entries read as zero.
class Pairing {
 public:
  void set(GenId i, GenId j, FormalPoly value);  // erases on zero
  const FormalPoly& at(GenId i, GenId j) const;
  bool has(GenId i, GenId j) const;
  const std::map<std::pair<GenId, GenId>, FormalPoly>& entries() const {
    return table_;
  }

  bool operator==(const Pairing& other) const = default;

 private:
  std::map<std::pair<GenId, GenId>, FormalPoly> table_;
};

struct AlgebraSpec {
  std::string name;
  Basis basis;
  std::optional<GenId> vacuum;
  Pairing bracket;
};

// Parity of a homogeneous Element (zero counts as even); throws
// ValidationError on mixed parity.
int parity_of(const Basis& basis, const Element& e);
int parity_of(const Basis& basis, const FormalPoly& p);

// (-1)^{eps(a) eps(b)}
Rational parity_sign(const Basis& basis, const Element& a, const Element& b);
Rational parity_sign_gens(const Basis& basis, GenId a, GenId b);

// Sesquilinear extension of a generator-pair table to Elements:
// T(d^m g_i, d^n g_j)(var) = (-var)^m (d + var)^n T(i,j).
FormalPoly eval_pairing(const Basis& basis, const Pairing& table,
                        const Element& a, const Element& b, Var var);

// Same evaluation with the left d-power reduced before the right one;
// used as the evaluator self-consistency check.
FormalPoly eval_pairing_left_first(const Basis& basis, const Pairing& table,
                                   const Element& a, const Element& b, Var var);

// Coefficient-wise extension over the formal-variable monomials of either
// argument; neither argument may already use var.
FormalPoly eval_pairing_nested(const Basis& basis, const Pairing& table,
                               const FormalPoly& a, const FormalPoly& b,
                               Var var);

// T(inner, c)(nu + mu) for inner in V[mu]: evaluates each mu-coefficient
// against c at nu, substitutes nu -> nu + mu, and carries the mu monomial.
FormalPoly eval_pairing_shifted(const Basis& basis, const Pairing& table,
                                const FormalPoly& inner, const Element& c);

// Applies torsion reduction and parity validation to every table entry and
// fills in each missing (j,i) from (i,j) via skew-symmetry. Explicit entries
// are kept as given; the axiom checks cross-examine them.
// With strict_torsion, an entry that torsion reduction would change is an
// error instead of being silently reduced.
AlgebraSpec complete_and_validate(AlgebraSpec spec, bool strict_torsion = true);

}  // namespace vrb
