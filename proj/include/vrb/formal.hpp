#pragma once

#include "vrb/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vrb {

using GenId = std::size_t;

// The two formal variables. Every polynomial value lives in V[mu] or
// V[mu,nu]; bracket tables are stored in mu by convention.
enum class Var { mu = 0, nu = 1 };

const char* var_name(Var v);

struct GeneratorInfo {
  std::string name;
  int parity = 0;  // 0 even, 1 odd
  std::optional<unsigned> torsion_order;  // absent = free; t means d^t g = 0
};

// Immutable generator table with name lookup.
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<GeneratorInfo> gens);

  std::size_t size() const { return gens_.size(); }
  const GeneratorInfo& info(GenId id) const { return gens_.at(id); }
  std::optional<GenId> find(std::string_view name) const;
  GenId require(std::string_view name) const;  // throws ValidationError
  const std::vector<GeneratorInfo>& generators() const { return gens_; }

  bool operator==(const Basis& other) const;

 private:
  std::vector<GeneratorInfo> gens_;
  std::map<std::string, GenId, std::less<>> index_;
};

// Polynomial in the translation symbol d (partial) with rational
// coefficients. Canonical: no zero coefficients stored.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  static DeltaPoly monomial(unsigned del_power, Rational coeff);

  void add(unsigned del_power, const Rational& coeff);
  void scale(const Rational& c);
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<unsigned, Rational>& coeffs() const { return coeffs_; }

  DeltaPoly& operator+=(const DeltaPoly& other);
  bool operator==(const DeltaPoly& other) const = default;

 private:
  std::map<unsigned, Rational> coeffs_;
};

// Finite linear combination of generators scaled by DeltaPolys.
// Torsion reduction is applied by the operations that raise d-powers
// (apply_partial and everything built on it), not stored state.
class Element {
 public:
  Element() = default;
  static Element generator(GenId id);

  void add(GenId id, unsigned del_power, const Rational& coeff);
  void add(GenId id, const DeltaPoly& p);
  void scale(const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  const std::map<GenId, DeltaPoly>& terms() const { return terms_; }

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  bool operator==(const Element& other) const = default;

 private:
  std::map<GenId, DeltaPoly> terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(const Rational& c, Element a);

struct Monomial {
  unsigned mu = 0;
  unsigned nu = 0;

  unsigned exp(Var v) const { return v == Var::mu ? mu : nu; }
  void raise(Var v, unsigned n) { (v == Var::mu ? mu : nu) += n; }
  Monomial operator+(const Monomial& o) const { return {mu + o.mu, nu + o.nu}; }
  auto operator<=>(const Monomial&) const = default;
};

// Polynomial in mu, nu with Element coefficients. Canonical: no zero
// Elements stored.
class FormalPoly {
 public:
  FormalPoly() = default;
  static FormalPoly constant(Element e);

  void add(const Monomial& m, const Element& e);
  void scale(const Rational& c);
  // Multiplies every term by the given monomial.
  void shift(const Monomial& m);
  bool is_zero() const { return terms_.empty(); }
  bool uses(Var v) const;
  bool uses_only(Var v) const { return !uses(v == Var::mu ? Var::nu : Var::mu); }
  const std::map<Monomial, Element>& terms() const { return terms_; }

  FormalPoly& operator+=(const FormalPoly& other);
  FormalPoly& operator-=(const FormalPoly& other);
  bool operator==(const FormalPoly& other) const = default;

 private:
  std::map<Monomial, Element> terms_;
};

FormalPoly operator+(FormalPoly a, const FormalPoly& b);
FormalPoly operator-(FormalPoly a, const FormalPoly& b);
FormalPoly operator*(const Rational& c, FormalPoly a);

// Renames every src power to dst. p must not already use dst unless
// src == dst.
FormalPoly rename_var(const FormalPoly& p, Var src, Var dst);

// --- formal_core operations -------------------------------------------------

Element linear_combine(std::span<const std::pair<Rational, Element>> parts);

// d^n applied to e; d-powers that reach a generator's torsion order drop.
Element apply_partial(const Basis& basis, const Element& e, unsigned n);
FormalPoly apply_partial(const Basis& basis, const FormalPoly& p, unsigned n);

// src^n  ->  (-dst - d)^n expanded binomially, d acting via apply_partial.
// p must use only src.
FormalPoly shift_negate(const Basis& basis, const FormalPoly& p, Var src, Var dst);

// src^n -> (a + b)^n expanded binomially; Element coefficients untouched.
// p must use only src.
FormalPoly substitute_sum(const FormalPoly& p, Var src, Var a, Var b);

// Drops every term with a positive power of v.
FormalPoly drop_positive_powers(const FormalPoly& p, Var v);

}  // namespace vrb
