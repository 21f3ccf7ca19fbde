#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "semisplit/amalgam.hpp"

namespace semisplit {

/// Parse an amalgam descriptor (see docs/formats.md). Throws ParseError or a validation error.
AmalgamPtr load_amalgam(const nlohmann::json& doc);
AmalgamPtr load_amalgam_file(const std::filesystem::path& path);

/// Accepts a descriptor path, or a fixture name such as "FIX-S" looked up as <dir>/<name>.json.
AmalgamPtr resolve_fixture(const std::string& name_or_path, const std::filesystem::path& dir);

/// Directory of the fixtures shipped with the source tree (overridable with SEMISPLIT_FIXTURES).
std::filesystem::path default_fixture_dir();

}  // namespace semisplit
