#include "vrb/formal.hpp"

namespace vrb {

const char* var_name(Var v) { return v == Var::mu ? "mu" : "nu"; }

Basis::Basis(std::vector<GeneratorInfo> gens) : gens_(std::move(gens)) {
  for (GenId id = 0; id < gens_.size(); ++id) {
    auto [it, inserted] = index_.emplace(gens_[id].name, id);
    if (!inserted)
      throw ValidationError("duplicate generator name '" + gens_[id].name + "'");
    if (gens_[id].torsion_order && *gens_[id].torsion_order == 0)
      throw ValidationError("torsion order must be positive for '" +
                            gens_[id].name + "'");
  }
}

std::optional<GenId> Basis::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GenId Basis::require(std::string_view name) const {
  auto id = find(name);
  if (!id) throw ValidationError("unknown generator '" + std::string(name) + "'");
  return *id;
}

bool Basis::operator==(const Basis& other) const {
  if (gens_.size() != other.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name != other.gens_[i].name ||
        gens_[i].parity != other.gens_[i].parity ||
        gens_[i].torsion_order != other.gens_[i].torsion_order)
      return false;
  }
  return true;
}

// --- DeltaPoly --------------------------------------------------------------

DeltaPoly DeltaPoly::monomial(unsigned del_power, Rational coeff) {
  DeltaPoly p;
  p.add(del_power, coeff);
  return p;
}

void DeltaPoly::add(unsigned del_power, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = coeffs_.find(del_power);
  if (it == coeffs_.end()) {
    coeffs_.emplace(del_power, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) coeffs_.erase(it);
}

void DeltaPoly::scale(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return;
  }
  for (auto& [_, r] : coeffs_) r *= c;
}

DeltaPoly& DeltaPoly::operator+=(const DeltaPoly& other) {
  for (const auto& [p, r] : other.coeffs_) add(p, r);
  return *this;
}

// --- Element ----------------------------------------------------------------

Element Element::generator(GenId id) {
  Element e;
  e.add(id, 0, 1);
  return e;
}

void Element::add(GenId id, unsigned del_power, const Rational& coeff) {
  if (coeff == 0) return;
  auto& poly = terms_[id];
  poly.add(del_power, coeff);
  if (poly.is_zero()) terms_.erase(id);
}

void Element::add(GenId id, const DeltaPoly& p) {
  for (const auto& [power, coeff] : p.coeffs()) add(id, power, coeff);
}

void Element::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [_, p] : terms_) p.scale(c);
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [id, p] : other.terms_) add(id, p);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  Element neg = other;
  neg.scale(-1);
  return *this += neg;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(const Rational& c, Element a) {
  a.scale(c);
  return a;
}

// --- FormalPoly -------------------------------------------------------------

FormalPoly FormalPoly::constant(Element e) {
  FormalPoly p;
  p.add({}, e);
  return p;
}

void FormalPoly::add(const Monomial& m, const Element& e) {
  if (e.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, e);
    return;
  }
  it->second += e;
  if (it->second.is_zero()) terms_.erase(it);
}

void FormalPoly::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [_, e] : terms_) e.scale(c);
}

void FormalPoly::shift(const Monomial& m) {
  if (m == Monomial{}) return;
  std::map<Monomial, Element> shifted;
  for (auto& [mono, e] : terms_) shifted.emplace(mono + m, std::move(e));
  terms_ = std::move(shifted);
}

bool FormalPoly::uses(Var v) const {
  for (const auto& [m, _] : terms_)
    if (m.exp(v) > 0) return true;
  return false;
}

FormalPoly& FormalPoly::operator+=(const FormalPoly& other) {
  for (const auto& [m, e] : other.terms_) add(m, e);
  return *this;
}

FormalPoly& FormalPoly::operator-=(const FormalPoly& other) {
  FormalPoly neg = other;
  neg.scale(-1);
  return *this += neg;
}

FormalPoly operator+(FormalPoly a, const FormalPoly& b) { return a += b; }
FormalPoly operator-(FormalPoly a, const FormalPoly& b) { return a -= b; }
FormalPoly operator*(const Rational& c, FormalPoly a) {
  a.scale(c);
  return a;
}

FormalPoly rename_var(const FormalPoly& p, Var src, Var dst) {
  if (src == dst) return p;
  if (p.uses(dst))
    throw ValidationError(std::string("rename target '") + var_name(dst) +
                          "' already in use");
  FormalPoly out;
  for (const auto& [m, e] : p.terms()) {
    Monomial moved;
    moved.raise(dst, m.exp(src));
    out.add(moved, e);
  }
  return out;
}

// --- operations -------------------------------------------------------------

Element linear_combine(std::span<const std::pair<Rational, Element>> parts) {
  Element out;
  for (const auto& [c, e] : parts) out += c * e;
  return out;
}

Element apply_partial(const Basis& basis, const Element& e, unsigned n) {
  if (n == 0) return e;
  Element out;
  for (const auto& [id, poly] : e.terms()) {
    const auto& torsion = basis.info(id).torsion_order;
    for (const auto& [power, coeff] : poly.coeffs()) {
      unsigned raised = power + n;
      if (torsion && raised >= *torsion) continue;
      out.add(id, raised, coeff);
    }
  }
  return out;
}

FormalPoly apply_partial(const Basis& basis, const FormalPoly& p, unsigned n) {
  FormalPoly out;
  for (const auto& [m, e] : p.terms()) out.add(m, apply_partial(basis, e, n));
  return out;
}

static void require_single_var(const FormalPoly& p, Var src, const char* op) {
  Var other = src == Var::mu ? Var::nu : Var::mu;
  if (p.uses(other))
    throw ValidationError(std::string(op) + ": argument uses variable '" +
                          var_name(other) + "', expected only '" +
                          var_name(src) + "'");
}

FormalPoly shift_negate(const Basis& basis, const FormalPoly& p, Var src,
                        Var dst) {
  require_single_var(p, src, "shift_negate");
  FormalPoly out;
  for (const auto& [m, e] : p.terms()) {
    unsigned n = m.exp(src);
    Rational sign = (n % 2 == 0) ? 1 : -1;
    for (unsigned i = 0; i <= n; ++i) {
      Element part = apply_partial(basis, e, i);
      part.scale(sign * binomial(n, i));
      Monomial mono;
      mono.raise(dst, n - i);
      out.add(mono, part);
    }
  }
  return out;
}

FormalPoly substitute_sum(const FormalPoly& p, Var src, Var a, Var b) {
  require_single_var(p, src, "substitute_sum");
  FormalPoly out;
  for (const auto& [m, e] : p.terms()) {
    unsigned n = m.exp(src);
    for (unsigned i = 0; i <= n; ++i) {
      Monomial mono;
      mono.raise(a, i);
      mono.raise(b, n - i);
      out.add(mono, binomial(n, i) * e);
    }
  }
  return out;
}

FormalPoly drop_positive_powers(const FormalPoly& p, Var v) {
  FormalPoly out;
  for (const auto& [m, e] : p.terms())
    if (m.exp(v) == 0) out.add(m, e);
  return out;
}

}  // namespace vrb
