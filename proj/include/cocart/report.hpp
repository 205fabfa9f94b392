#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cocart {

// One line of a command report. `holds` is the mathematical verdict where one
// applies (a negative verdict is still a successful run); entries without a
// verdict are informational.
struct ReportEntry {
  std::string label;
  std::optional<bool> holds;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> data;
};

struct Report {
  std::string command;
  std::string subject;
  std::vector<ReportEntry> entries;
  std::vector<std::string> limits_hit;
  double elapsed_seconds = 0.0;
  std::optional<std::string> output_bundle;  // canonical bundle text, when a command emits one

  bool hit_limit() const noexcept { return !limits_hit.empty(); }
};

std::string render_report_text(const Report& r);
std::string render_report_json(const Report& r);

} // namespace cocart
