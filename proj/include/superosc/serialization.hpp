#pragma once

#include <filesystem>
#include <json.hpp>

#include "superosc/analysis.hpp"
#include "superosc/synthesis.hpp"

namespace superosc {

// JSON schemas:
//   Polynomial    {"coeffs": [a0, a1, ...]}
//   Envelope      {"family": "sinc_power", "m": 4} | {"family": "bump"}
//   SuperoscSpec  {"poly": {...}, "env": {...}, "D": 1.0, "interval": {"a": 0.1}}

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Envelope& env);
Envelope envelope_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SuperoscSpec& spec);
SuperoscSpec spec_from_json(const nlohmann::json& j);

SuperoscSpec load_spec(const std::filesystem::path& path);
void save_spec(const SuperoscSpec& spec, const std::filesystem::path& path);

nlohmann::json to_json(const ErrorReport& r);
nlohmann::json to_json(const SweepResult& r);
nlohmann::json to_json(const LocalFrequencyResult& r);
nlohmann::json to_json(const AmplitudePeak& r);
nlohmann::json to_json(const DominanceReport& r);
nlohmann::json to_json(const ParsevalReport& r);
nlohmann::json to_json(const AdmissibilityReport& r);

}  // namespace superosc
