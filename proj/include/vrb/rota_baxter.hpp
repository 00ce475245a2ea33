#pragma once

#include "vrb/algebra.hpp"
#include "vrb/report.hpp"

#include <map>
#include <string>

namespace vrb {

// Generator -> Element map extended d-linearly; [map, d] = 0 is automatic.
// Shared between operators and 1-cochains.
class GenMap {
 public:
  void set(GenId id, Element image);  // erases on zero
  const Element& image(GenId id) const;  // zero if unset
  const std::map<GenId, Element>& images() const { return images_; }

  Element apply(const Basis& basis, const Element& x) const;
  FormalPoly apply(const Basis& basis, const FormalPoly& p) const;

  bool operator==(const GenMap& other) const = default;

 private:
  std::map<GenId, Element> images_;
};

struct OperatorSpec {
  std::string name;
  Rational weight;
  GenMap action;
};

Element apply_operator(const Basis& basis, const OperatorSpec& op,
                       const Element& x);
FormalPoly apply_operator(const Basis& basis, const OperatorSpec& op,
                          const FormalPoly& p);

// Parity preservation and torsion compatibility of each generator image.
CheckReport validate_genmap(const AlgebraSpec& alg, const GenMap& map,
                            const std::string& what);
CheckReport validate_operator(const AlgebraSpec& alg, const OperatorSpec& op);

// Throws ValidationError when validate_operator fails.
void require_valid_operator(const AlgebraSpec& alg, const OperatorSpec& op);

// Rota-Baxter condition of weight op.weight over all generator pairs.
CheckReport check_rb(const AlgebraSpec& alg, const OperatorSpec& op);

// Deformed bracket table; pure formula, no RB hypothesis. The result never
// carries a vacuum.
AlgebraSpec deform(const AlgebraSpec& alg, const OperatorSpec& op);

// I(Pa, Pb) = P(deformed bracket), cross-checked against check_rb.
CheckReport check_homomorphism(const AlgebraSpec& alg, const OperatorSpec& op);

}  // namespace vrb
