#pragma once

#include <json.hpp>

#include <string>

#include "schurlc/harness.hpp"
#include "schurlc/rsk.hpp"

namespace schurlc {

inline constexpr const char* kToolVersion = "1.0.0";

// Schema: {statement, params, verdicts:[{k, status, witness?}], elapsed_ms,
// tool_version}. Big integers serialize as decimal strings.
nlohmann::json report_to_json(const VerdictReport& report);
std::string report_to_csv(const VerdictReport& report);
std::string report_to_text(const VerdictReport& report);

nlohmann::json table_to_json(const CountTable& table);
std::string table_to_csv(const CountTable& table);
std::string table_to_text(const CountTable& table);

}  // namespace schurlc
