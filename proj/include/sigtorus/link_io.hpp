#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>
#include "sigtorus/clink.hpp"

namespace sigtorus {

/// Parse a link document. Throws SchemaError, SymmetryViolation or DimensionMismatch.
ColoredLink parse_link(const nlohmann::json& doc);
ColoredLink load_link(const std::filesystem::path& path);

nlohmann::json to_json(const ColoredLink& link);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const RationalFunction& f);

LaurentPoly parse_laurent(const nlohmann::json& doc, std::size_t nvars);
RationalFunction parse_rational_function(const nlohmann::json& doc, std::size_t nvars);

}  // namespace sigtorus
