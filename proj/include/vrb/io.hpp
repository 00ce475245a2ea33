#pragma once

#include "vrb/algebra.hpp"
#include "vrb/cohomology.hpp"
#include "vrb/report.hpp"
#include "vrb/rota_baxter.hpp"

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <string>

namespace vrb {

AlgebraSpec parse_algebra(const std::filesystem::path& path,
                          bool strict_torsion = true);
AlgebraSpec algebra_from_json(const nlohmann::json& doc,
                              bool strict_torsion = true);

OperatorSpec parse_operator(const std::filesystem::path& path,
                            const AlgebraSpec& alg);
OperatorSpec operator_from_json(const nlohmann::json& doc,
                                const AlgebraSpec& alg);

nlohmann::json algebra_to_json(const AlgebraSpec& alg);
void write_algebra(const std::filesystem::path& path, const AlgebraSpec& alg);

std::string poly_to_string(const Basis& basis, const FormalPoly& p);
nlohmann::json poly_to_json(const Basis& basis, const FormalPoly& p);

nlohmann::json report_to_json(const Basis& basis, const CheckReport& report);
std::string report_to_text(const Basis& basis, const CheckReport& report);

nlohmann::json scalar_solution_to_json(const ScalarSolution& sol);
std::string scalar_solution_to_text(const ScalarSolution& sol);

}  // namespace vrb
