#pragma once

#include <string>
#include <vector>

namespace qwalk {

struct Violation {
  std::string rule;
  std::string location;
  double magnitude = 0.0;
};

/// Outcome of a check. Violations are data, not exceptions.
class ValidationReport {
 public:
  bool passed() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  void add(std::string rule, std::string location, double magnitude) {
    violations_.push_back({std::move(rule), std::move(location), magnitude});
  }

  // Records a violation when value exceeds bound; returns whether it held.
  bool expect_le(const std::string& rule, const std::string& location, double value,
                 double bound) {
    if (value <= bound) return true;
    add(rule, location, value);
    return false;
  }

  void merge(const ValidationReport& other) {
    violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
  }

  bool has_rule(const std::string& rule) const {
    for (const auto& v : violations_)
      if (v.rule == rule) return true;
    return false;
  }

 private:
  std::vector<Violation> violations_;
};

}  // namespace qwalk
