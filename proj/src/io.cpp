#include "vrb/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace vrb {

using nlohmann::json;

namespace {

json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

Rational coeff_field(const json& term, const std::string& where) {
  const json& c = field(term, "coeff", where);
  if (!c.is_string())
    throw ParseError("'coeff' must be a rational string \"p/q\" in " + where);
  return parse_rational(c.get<std::string>());
}

unsigned uint_field(const json& obj, const char* key, const std::string& where,
                    unsigned fallback, bool required) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required)
      throw ParseError("missing key '" + std::string(key) + "' in " + where);
    return fallback;
  }
  if (!it->is_number_integer() || it->get<long long>() < 0)
    throw ParseError("'" + std::string(key) + "' must be a non-negative "
                     "integer in " + where);
  return static_cast<unsigned>(it->get<long long>());
}

}  // namespace

AlgebraSpec algebra_from_json(const json& doc, bool strict_torsion) {
  AlgebraSpec spec;
  spec.name = doc.value("name", "");

  std::vector<GeneratorInfo> gens;
  for (const json& g : field(doc, "generators", "algebra file")) {
    GeneratorInfo info;
    info.name = field(g, "name", "generator").get<std::string>();
    info.parity = static_cast<int>(
        uint_field(g, "parity", "generator '" + info.name + "'", 0, false));
    if (info.parity != 0 && info.parity != 1)
      throw ParseError("parity of '" + info.name + "' must be 0 or 1");
    if (g.contains("torsion_order"))
      info.torsion_order =
          uint_field(g, "torsion_order", "generator '" + info.name + "'", 0,
                     true);
    gens.push_back(std::move(info));
  }
  spec.basis = Basis(std::move(gens));

  if (doc.contains("vacuum") && !doc["vacuum"].is_null())
    spec.vacuum = spec.basis.require(doc["vacuum"].get<std::string>());

  std::set<std::pair<GenId, GenId>> seen;
  for (const json& entry : doc.value("brackets", json::array())) {
    std::string where = "bracket entry";
    GenId left = spec.basis.require(field(entry, "left", where).get<std::string>());
    GenId right =
        spec.basis.require(field(entry, "right", where).get<std::string>());
    where = "bracket (" + spec.basis.info(left).name + ", " +
            spec.basis.info(right).name + ")";
    if (!seen.insert({left, right}).second)
      throw ParseError("duplicate " + where);
    FormalPoly value;
    for (const json& term : field(entry, "terms", where)) {
      Rational c = coeff_field(term, where);
      unsigned var_power = uint_field(term, "var_power", where, 0, false);
      unsigned del_power = uint_field(term, "del_power", where, 0, false);
      GenId gen = spec.basis.require(field(term, "gen", where).get<std::string>());
      Element e;
      e.add(gen, del_power, c);
      Monomial m;
      m.raise(Var::mu, var_power);
      value.add(m, e);
    }
    spec.bracket.set(left, right, std::move(value));
  }

  return complete_and_validate(std::move(spec), strict_torsion);
}

AlgebraSpec parse_algebra(const std::filesystem::path& path,
                          bool strict_torsion) {
  return algebra_from_json(load_file(path), strict_torsion);
}

OperatorSpec operator_from_json(const json& doc, const AlgebraSpec& alg) {
  OperatorSpec op;
  op.name = doc.value("name", "");
  const json& w = field(doc, "weight", "operator file");
  if (!w.is_string())
    throw ParseError("'weight' must be a rational string \"p/q\"");
  op.weight = parse_rational(w.get<std::string>());

  std::set<GenId> seen;
  for (const json& entry : doc.value("action", json::array())) {
    GenId gen =
        alg.basis.require(field(entry, "gen", "action entry").get<std::string>());
    std::string where = "action of '" + alg.basis.info(gen).name + "'";
    if (!seen.insert(gen).second) throw ParseError("duplicate " + where);
    Element image;
    for (const json& term : field(entry, "image", where)) {
      Rational c = coeff_field(term, where);
      unsigned del_power = uint_field(term, "del_power", where, 0, false);
      GenId target =
          alg.basis.require(field(term, "gen", where).get<std::string>());
      image.add(target, del_power, c);
    }
    op.action.set(gen, std::move(image));
  }
  return op;
}

OperatorSpec parse_operator(const std::filesystem::path& path,
                            const AlgebraSpec& alg) {
  return operator_from_json(load_file(path), alg);
}

json algebra_to_json(const AlgebraSpec& alg) {
  json doc;
  doc["name"] = alg.name;
  doc["generators"] = json::array();
  for (const GeneratorInfo& g : alg.basis.generators()) {
    json item{{"name", g.name}, {"parity", g.parity}};
    if (g.torsion_order) item["torsion_order"] = *g.torsion_order;
    doc["generators"].push_back(std::move(item));
  }
  if (alg.vacuum) doc["vacuum"] = alg.basis.info(*alg.vacuum).name;
  doc["brackets"] = json::array();
  for (const auto& [key, value] : alg.bracket.entries()) {
    json entry{{"left", alg.basis.info(key.first).name},
               {"right", alg.basis.info(key.second).name},
               {"terms", json::array()}};
    for (const auto& [mono, e] : value.terms()) {
      for (const auto& [gen, poly] : e.terms()) {
        for (const auto& [del_power, coeff] : poly.coeffs()) {
          entry["terms"].push_back(json{{"coeff", to_string(coeff)},
                                        {"var_power", mono.mu},
                                        {"del_power", del_power},
                                        {"gen", alg.basis.info(gen).name}});
        }
      }
    }
    doc["brackets"].push_back(std::move(entry));
  }
  return doc;
}

void write_algebra(const std::filesystem::path& path, const AlgebraSpec& alg) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << algebra_to_json(alg).dump(2) << "\n";
}

std::string poly_to_string(const Basis& basis, const FormalPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, e] : p.terms()) {
    for (const auto& [gen, poly] : e.terms()) {
      for (const auto& [del_power, coeff] : poly.coeffs()) {
        if (!first) out << " + ";
        first = false;
        out << "(" << coeff << ")";
        if (mono.mu) out << " mu" << (mono.mu > 1 ? "^" + std::to_string(mono.mu) : "");
        if (mono.nu) out << " nu" << (mono.nu > 1 ? "^" + std::to_string(mono.nu) : "");
        if (del_power) out << " d^" << del_power;
        out << " " << basis.info(gen).name;
      }
    }
  }
  return out.str();
}

json poly_to_json(const Basis& basis, const FormalPoly& p) {
  json terms = json::array();
  for (const auto& [mono, e] : p.terms()) {
    for (const auto& [gen, poly] : e.terms()) {
      for (const auto& [del_power, coeff] : poly.coeffs()) {
        terms.push_back(json{{"coeff", to_string(coeff)},
                             {"mu_power", mono.mu},
                             {"nu_power", mono.nu},
                             {"del_power", del_power},
                             {"gen", basis.info(gen).name}});
      }
    }
  }
  return terms;
}

json report_to_json(const Basis& basis, const CheckReport& report) {
  json witnesses = json::array();
  for (const Witness& w : report.witnesses)
    witnesses.push_back(json{{"args", w.args},
                             {"residual", poly_to_json(basis, w.residual)}});
  json out{{"check_name", report.check_name},
           {"passed", report.passed},
           {"witnesses", std::move(witnesses)},
           {"stats", json{{"tuples_checked", report.tuples_checked}}}};
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

std::string report_to_text(const Basis& basis, const CheckReport& report) {
  std::ostringstream out;
  out << (report.passed ? "[PASS] " : "[FAIL] ") << report.check_name << ": "
      << report.tuples_checked << " tuples checked";
  if (!report.witnesses.empty())
    out << ", " << report.witnesses.size() << " witness(es)";
  if (!report.note.empty()) out << " (" << report.note << ")";
  out << "\n";
  for (const Witness& w : report.witnesses) {
    out << "  witness (";
    for (std::size_t i = 0; i < w.args.size(); ++i)
      out << (i ? ", " : "") << w.args[i];
    out << "): residual = " << poly_to_string(basis, w.residual) << "\n";
  }
  return out.str();
}

json scalar_solution_to_json(const ScalarSolution& sol) {
  json roots = json::array();
  for (const Rational& r : sol.roots) roots.push_back(to_string(r));
  return json{{"kind", sol.kind == ScalarKind::coboundary ? "coboundary" : "rb"},
              {"weight", to_string(sol.weight)},
              {"roots", std::move(roots)},
              {"irrational", sol.irrational}};
}

std::string scalar_solution_to_text(const ScalarSolution& sol) {
  std::ostringstream out;
  out << (sol.kind == ScalarKind::coboundary ? "coboundary" : "rb")
      << " quadratic at weight " << sol.weight << ": ";
  if (sol.irrational) {
    out << "no rational roots (irrational)";
  } else {
    out << "roots";
    for (const Rational& r : sol.roots) out << " " << r;
  }
  out << "\n";
  return out.str();
}

}  // namespace vrb
