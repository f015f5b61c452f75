#include "pbw/report.hpp"

#include <sstream>
#include <stdexcept>

namespace pbw {

namespace {
const char* const kReserved[] = {"suite", "parameters", "checks_run", "violations", "status"};

bool reserved(const std::string& key) {
  for (const char* r : kReserved)
    if (key == r) return true;
  return false;
}
}  // namespace

void Report::absorb(const Report& other) {
  checks_run += other.checks_run;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  j["suite"] = r.suite;
  j["parameters"] = r.parameters;
  j["checks_run"] = r.checks_run;
  j["status"] = r.status();
  j["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"location", v.location}, {"expected", v.expected}, {"actual", v.actual}});
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.parameters = j.at("parameters");
  r.checks_run = j.at("checks_run").get<std::size_t>();
  for (const auto& v : j.at("violations"))
    r.violations.push_back(
        {v.at("location").get<std::string>(), v.at("expected").get<std::string>(), v.at("actual").get<std::string>()});
  for (const auto& [k, v] : j.items())
    if (!reserved(k)) r.extra[k] = v;
  if (j.at("status").get<std::string>() != r.status())
    throw std::invalid_argument("report status inconsistent with its violations");
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.suite << ": " << r.status() << " (" << r.checks_run << " checks, " << r.violations.size()
     << " violations)\n";
  os << "  parameters: " << r.parameters.dump() << "\n";
  for (const auto& [k, v] : r.extra.items()) {
    if (v.is_array() && v.size() > 8) {
      os << "  " << k << ": [" << v.size() << " entries]\n";
      continue;
    }
    os << "  " << k << ": " << v.dump() << "\n";
  }
  std::size_t shown = 0;
  for (const auto& v : r.violations) {
    if (++shown > 20) {
      os << "  ... " << (r.violations.size() - 20) << " more\n";
      break;
    }
    os << "  violation at " << v.location << ": expected " << v.expected << ", got " << v.actual << "\n";
  }
  return os.str();
}

}  // namespace pbw
