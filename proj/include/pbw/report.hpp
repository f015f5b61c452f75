#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pbw {

struct Violation {
  std::string location;
  std::string expected;
  std::string actual;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of one verification suite. The status is derived: pass iff there
/// are no violations.
struct Report {
  std::string suite;
  nlohmann::json parameters = nlohmann::json::object();
  std::size_t checks_run = 0;
  std::vector<Violation> violations;
  // Suite-specific fields, merged into the top level of the JSON form.
  nlohmann::json extra = nlohmann::json::object();

  bool passed() const { return violations.empty(); }
  std::string status() const { return passed() ? "pass" : "fail"; }

  void check(bool ok, std::string location, std::string expected, std::string actual) {
    ++checks_run;
    if (!ok) violations.push_back({std::move(location), std::move(expected), std::move(actual)});
  }
  // Appends the checks and violations of another report.
  void absorb(const Report& other);

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

// Multi-line human-readable summary.
std::string to_text(const Report& r);

}  // namespace pbw
