#pragma once

#include <ostream>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spivey/identities.hpp"

namespace spivey {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// One report as a JSON object. Timing is included only on request so that
/// report files stay byte-identical between runs.
nlohmann::ordered_json report_to_json(const VerificationReport& report, bool with_timing);

/// {tool_version, config_echo, cells, failures}.
nlohmann::ordered_json report_document(const std::vector<VerificationReport>& reports,
                                       const nlohmann::ordered_json& config_echo, bool with_timing);

std::size_t count_failures(const std::vector<VerificationReport>& reports);

/// "checked C cells, F failures"
std::string summary_line(const std::vector<VerificationReport>& reports);

}  // namespace spivey
