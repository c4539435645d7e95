#ifndef LCG_REPORT_HPP
#define LCG_REPORT_HPP

// Named pass/fail checks produced by the theorem verifiers.

#include <ostream>
#include <string>
#include <vector>

namespace lcg {

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void append(const Report &other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool passed() const {
    for (const auto &c : checks)
      if (!c.passed)
        return false;
    return true;
  }
  const Check *find(const std::string &name) const {
    for (const auto &c : checks)
      if (c.name == name)
        return &c;
    return nullptr;
  }
};

inline std::ostream &operator<<(std::ostream &os, const Report &r) {
  for (const auto &c : r.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty())
      os << " : " << c.detail;
    os << '\n';
  }
  return os;
}

} // namespace lcg

#endif // LCG_REPORT_HPP
