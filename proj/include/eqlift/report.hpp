#pragma once

#include <string>
#include <vector>

namespace eqlift {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Ordered list of named checks. Validators return these instead of throwing.
struct ValidationReport {
  std::vector<CheckResult> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const auto* c = find(name);
    return c != nullptr && c->passed;
  }
  void append(const ValidationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace eqlift
