#pragma once
// Accumulator for structural checks: counts every expectation and keeps
// the failing ones with a short description.

#include <sstream>
#include <string>
#include <vector>

namespace forkalg {

struct CheckReport {
  long cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond) failures.push_back(what);
  }

  void merge(const CheckReport& o) {
    cases += o.cases;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }

  // "name: 123 checks passed" or a list of the first few failures.
  std::string summary(const std::string& name, size_t max_listed = 8) const {
    std::ostringstream os;
    if (ok()) {
      os << name << ": " << cases << " checks passed";
      return os.str();
    }
    os << name << ": " << failures.size() << " of " << cases << " checks FAILED";
    for (size_t i = 0; i < failures.size() && i < max_listed; ++i)
      os << "\n  " << failures[i];
    if (failures.size() > max_listed)
      os << "\n  ... " << (failures.size() - max_listed) << " more";
    return os.str();
  }
};

}  // namespace forkalg
