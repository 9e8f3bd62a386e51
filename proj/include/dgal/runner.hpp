#pragma once

#include <string>

#include <json.hpp>

namespace dgal {

inline constexpr const char* kToolVersion = "dgal 0.1.0";

// Executes one problem object ({"task": ..., ...}) and returns the
// certificate object.  Domain failures surface as dgal::Error; schema
// problems as nlohmann exceptions or std::invalid_argument.
nlohmann::ordered_json run_task(const nlohmann::json& problem);

// Independent re-check of an emitted certificate through the module verify
// operations.
bool verify_certificate(const nlohmann::json& cert);

}  // namespace dgal
