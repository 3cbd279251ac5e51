#pragma once

#include "borel/theorems.hpp"

#include <json.hpp>

#include <string>

namespace borel::cli {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json to_json(const VerificationReport& report);

/// Inverse of to_json. Throws std::runtime_error on schema violations.
VerificationReport report_from_json(const Json& doc);

std::string to_markdown(const VerificationReport& report);

}  // namespace borel::cli
