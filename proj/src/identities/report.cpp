#include "spivey/report_io.hpp"

#include <algorithm>
#include <string>

namespace spivey {

nlohmann::ordered_json report_to_json(const VerificationReport& report, bool with_timing) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  const auto& p = report.params;
  if (p.rv) params["rv"] = *p.rv;
  if (p.n) params["n"] = *p.n;
  if (p.l) params["l"] = *p.l;
  if (p.j) params["j"] = *p.j;
  if (p.k) params["k"] = *p.k;
  if (p.r) params["r"] = *p.r;

  nlohmann::ordered_json out;
  out["identity_id"] = std::string(identity_name(report.identity));
  out["params"] = std::move(params);
  out["lhs"] = report.lhs;
  out["rhs"] = report.rhs;
  out["equal"] = report.equal;
  if (with_timing) out["elapsed_ns"] = report.elapsed.count();
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

nlohmann::ordered_json report_document(const std::vector<VerificationReport>& reports,
                                       const nlohmann::ordered_json& config_echo, bool with_timing) {
  nlohmann::ordered_json doc;
  doc["tool_version"] = std::string(kToolVersion);
  doc["config_echo"] = config_echo;
  auto cells = nlohmann::ordered_json::array();
  for (const auto& r : reports) cells.push_back(report_to_json(r, with_timing));
  doc["cells"] = std::move(cells);
  doc["failures"] = count_failures(reports);
  return doc;
}

std::size_t count_failures(const std::vector<VerificationReport>& reports) {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.equal; }));
}

std::string summary_line(const std::vector<VerificationReport>& reports) {
  return "checked " + std::to_string(reports.size()) + " cells, " + std::to_string(count_failures(reports)) +
         " failures";
}

}  // namespace spivey
