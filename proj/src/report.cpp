#include "report.hpp"

#include <sstream>

#include "json.hpp"

namespace catv {

void Report::add(std::string label, std::string instance, bool pass, std::string detail) {
  lines.push_back({std::move(label), std::move(instance), pass, std::move(detail)});
}

void Report::append(const Report& other) {
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

int Report::failures() const {
  int n = 0;
  for (const auto& l : lines)
    if (!l.pass) ++n;
  return n;
}

std::string Report::render(ReportFormat fmt) const {
  std::ostringstream os;
  if (fmt == ReportFormat::text) {
    for (const auto& l : lines) {
      os << (l.pass ? "PASS" : "FAIL") << " [" << l.label << "] " << l.instance;
      if (!l.detail.empty()) os << ": " << l.detail;
      os << "\n";
    }
    os << checks() << " checks, " << failures() << " failures\n";
  } else {
    for (const auto& l : lines) {
      nlohmann::json j;
      j["label"] = l.label;
      j["instance"] = l.instance;
      j["pass"] = l.pass;
      if (!l.detail.empty()) j["detail"] = l.detail;
      os << j.dump() << "\n";
    }
    nlohmann::json s;
    s["checks"] = checks();
    s["failures"] = failures();
    os << s.dump() << "\n";
  }
  return os.str();
}

}  // namespace catv
