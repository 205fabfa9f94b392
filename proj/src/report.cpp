#include "cocart/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace cocart {

std::string render_report_text(const Report& r) {
  std::ostringstream os;
  os << "== " << r.command;
  if (!r.subject.empty()) os << " : " << r.subject;
  os << " ==\n";
  for (const auto& e : r.entries) {
    if (e.holds.has_value())
      os << (*e.holds ? "  [holds] " : "  [fails] ");
    else
      os << "  [info]  ";
    os << e.label;
    if (!e.detail.empty()) os << " -- " << e.detail;
    os << '\n';
    for (const auto& [k, v] : e.data) os << "           " << k << " = " << v << '\n';
  }
  for (const auto& l : r.limits_hit) os << "  [limit] " << l << '\n';
  os << std::fixed << std::setprecision(3) << "  elapsed: " << r.elapsed_seconds << "s\n";
  return os.str();
}

std::string render_report_json(const Report& r) {
  nlohmann::ordered_json doc;
  doc["command"] = r.command;
  doc["subject"] = r.subject;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json je;
    je["label"] = e.label;
    if (e.holds.has_value())
      je["holds"] = *e.holds;
    else
      je["holds"] = nullptr;
    je["detail"] = e.detail;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    for (const auto& [k, v] : e.data) data[k] = v;
    je["data"] = std::move(data);
    entries.push_back(std::move(je));
  }
  doc["entries"] = std::move(entries);
  doc["limits_hit"] = r.limits_hit;
  doc["elapsed_seconds"] = r.elapsed_seconds;
  if (r.output_bundle) doc["output_bundle"] = nlohmann::ordered_json::parse(*r.output_bundle);
  return doc.dump(2) + "\n";
}

} // namespace cocart
