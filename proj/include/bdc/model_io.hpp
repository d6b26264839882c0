#pragma once

// Model definition documents (JSON). Field names are documented in
// docs/model_schema.md; unknown keys are rejected.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "bdc/model.hpp"

namespace bdc {

CoefficientSpec coefficient_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json coefficient_to_json(const CoefficientSpec& spec);

ModelParams model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const ModelParams& params);

/// Parses JSON text; syntax errors become ParseError with "line L, column C".
nlohmann::json parse_json_text(const std::string& text, const std::string& source);

std::string read_text_file(const std::filesystem::path& path);

ModelParams load_model_file(const std::filesystem::path& path);

}  // namespace bdc
