#pragma once

// Deterministic JSON/CSV writing: sorted keys, floats with 17 significant digits.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

namespace bdc {

/// "%.17g"; non-finite values render as null.
std::string format_double(double v);

void write_json(std::ostream& os, const nlohmann::json& value, int indent = 2);
std::string to_json_text(const nlohmann::json& value, int indent = 2);

std::uint64_t fnv1a64(std::string_view bytes);

/// 16 hex digits of the FNV-1a hash of the compact, key-sorted dump.
std::string digest(const nlohmann::json& value);

}  // namespace bdc
