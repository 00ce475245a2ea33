#include "vrb/algebra.hpp"

namespace vrb {

void Pairing::set(GenId i, GenId j, FormalPoly value) {
  if (value.is_zero())
    table_.erase({i, j});
  else
    table_.insert_or_assign({i, j}, std::move(value));
}

const FormalPoly& Pairing::at(GenId i, GenId j) const {
  static const FormalPoly zero;
  auto it = table_.find({i, j});
  return it == table_.end() ? zero : it->second;
}

bool Pairing::has(GenId i, GenId j) const { return table_.contains({i, j}); }

int parity_of(const Basis& basis, const Element& e) {
  int parity = -1;
  for (const auto& [id, _] : e.terms()) {
    int p = basis.info(id).parity;
    if (parity == -1)
      parity = p;
    else if (parity != p)
      throw ValidationError("element is not parity-homogeneous");
  }
  return parity == -1 ? 0 : parity;
}

int parity_of(const Basis& basis, const FormalPoly& p) {
  int parity = -1;
  for (const auto& [_, e] : p.terms()) {
    int q = parity_of(basis, e);
    if (e.is_zero()) continue;
    if (parity == -1)
      parity = q;
    else if (parity != q)
      throw ValidationError("polynomial is not parity-homogeneous");
  }
  return parity == -1 ? 0 : parity;
}

Rational parity_sign(const Basis& basis, const Element& a, const Element& b) {
  return parity_of(basis, a) * parity_of(basis, b) ? -1 : 1;
}

Rational parity_sign_gens(const Basis& basis, GenId a, GenId b) {
  return basis.info(a).parity * basis.info(b).parity ? -1 : 1;
}

// (d + var) applied once: d on Element coefficients plus a var shift.
static FormalPoly sesq_step(const Basis& basis, const FormalPoly& p, Var var) {
  FormalPoly out = apply_partial(basis, p, 1);
  FormalPoly shifted = p;
  Monomial m;
  m.raise(var, 1);
  shifted.shift(m);
  out += shifted;
  return out;
}

static FormalPoly neg_var_power(const FormalPoly& p, Var var, unsigned m) {
  FormalPoly out = p;
  if (m % 2) out.scale(-1);
  Monomial mono;
  mono.raise(var, m);
  out.shift(mono);
  return out;
}

FormalPoly eval_pairing(const Basis& basis, const Pairing& table,
                        const Element& a, const Element& b, Var var) {
  FormalPoly out;
  for (const auto& [gi, pa] : a.terms()) {
    for (const auto& [m, ca] : pa.coeffs()) {
      for (const auto& [gj, pb] : b.terms()) {
        for (const auto& [n, cb] : pb.coeffs()) {
          const FormalPoly& base = table.at(gi, gj);
          if (base.is_zero()) continue;
          FormalPoly v = rename_var(base, Var::mu, var);
          for (unsigned k = 0; k < n; ++k) v = sesq_step(basis, v, var);
          v = neg_var_power(v, var, m);
          v.scale(ca * cb);
          out += v;
        }
      }
    }
  }
  return out;
}

FormalPoly eval_pairing_left_first(const Basis& basis, const Pairing& table,
                                   const Element& a, const Element& b,
                                   Var var) {
  FormalPoly out;
  for (const auto& [gi, pa] : a.terms()) {
    for (const auto& [m, ca] : pa.coeffs()) {
      for (const auto& [gj, pb] : b.terms()) {
        for (const auto& [n, cb] : pb.coeffs()) {
          const FormalPoly& base = table.at(gi, gj);
          if (base.is_zero()) continue;
          FormalPoly v = neg_var_power(rename_var(base, Var::mu, var), var, m);
          for (unsigned k = 0; k < n; ++k) v = sesq_step(basis, v, var);
          v.scale(ca * cb);
          out += v;
        }
      }
    }
  }
  return out;
}

FormalPoly eval_pairing_nested(const Basis& basis, const Pairing& table,
                               const FormalPoly& a, const FormalPoly& b,
                               Var var) {
  if (a.uses(var) || b.uses(var))
    throw ValidationError(std::string("eval_pairing_nested: argument already "
                                      "uses variable '") +
                          var_name(var) + "'");
  FormalPoly out;
  for (const auto& [ma, ea] : a.terms()) {
    for (const auto& [mb, eb] : b.terms()) {
      FormalPoly v = eval_pairing(basis, table, ea, eb, var);
      v.shift(ma + mb);
      out += v;
    }
  }
  return out;
}

FormalPoly eval_pairing_shifted(const Basis& basis, const Pairing& table,
                                const FormalPoly& inner, const Element& c) {
  if (inner.uses(Var::nu))
    throw ValidationError("eval_pairing_shifted: inner value must live in V[mu]");
  FormalPoly out;
  for (const auto& [m, e] : inner.terms()) {
    FormalPoly v = eval_pairing(basis, table, e, c, Var::nu);
    v = substitute_sum(v, Var::nu, Var::nu, Var::mu);
    v.shift(m);
    out += v;
  }
  return out;
}

AlgebraSpec complete_and_validate(AlgebraSpec spec, bool strict_torsion) {
  const Basis& basis = spec.basis;

  if (spec.vacuum) {
    const GeneratorInfo& vac = basis.info(*spec.vacuum);
    if (vac.parity != 0)
      throw ValidationError("vacuum '" + vac.name + "' must be even");
    if (vac.torsion_order)
      throw ValidationError("vacuum '" + vac.name + "' must be free");
  }

  Pairing cleaned;
  for (const auto& [key, value] : spec.bracket.entries()) {
    auto [i, j] = key;
    if (i >= basis.size() || j >= basis.size())
      throw ValidationError("bracket entry references unknown generator id");
    if (value.uses(Var::nu))
      throw ValidationError("bracket entry for (" + basis.info(i).name + ", " +
                            basis.info(j).name + ") uses a second variable");
    // Torsion reduction of the stored Elements.
    FormalPoly reduced;
    for (const auto& [m, e] : value.terms()) {
      Element r;
      for (const auto& [id, poly] : e.terms()) {
        const auto& torsion = basis.info(id).torsion_order;
        for (const auto& [power, coeff] : poly.coeffs()) {
          if (torsion && power >= *torsion) continue;
          r.add(id, power, coeff);
        }
      }
      reduced.add(m, r);
    }
    if (strict_torsion && reduced != value)
      throw ValidationError("bracket entry for (" + basis.info(i).name + ", " +
                            basis.info(j).name +
                            ") contains a torsion-killed term");
    // Parity consistency with the generator pair.
    int expected = (basis.info(i).parity + basis.info(j).parity) % 2;
    if (!reduced.is_zero() && parity_of(basis, reduced) != expected)
      throw ValidationError("bracket entry for (" + basis.info(i).name + ", " +
                            basis.info(j).name + ") has inconsistent parity");
    cleaned.set(i, j, std::move(reduced));
  }

  // Skew completion: fill in each missing reverse entry.
  Pairing completed = cleaned;
  for (const auto& [key, value] : cleaned.entries()) {
    auto [i, j] = key;
    if (i == j || cleaned.has(j, i)) continue;
    FormalPoly reverse = shift_negate(basis, value, Var::mu, Var::mu);
    reverse.scale(parity_sign_gens(basis, i, j));
    completed.set(j, i, std::move(reverse));
  }

  spec.bracket = std::move(completed);
  return spec;
}

}  // namespace vrb
