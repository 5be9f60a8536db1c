#pragma once
#include <string>
#include <vector>

namespace braided {

struct CheckFailure {
  std::string identity;  // semantic tag, e.g. "assoc", "counit-left", "yd-compat"
  std::string detail;
};

struct CheckReport {
  std::string subject;
  std::vector<CheckFailure> failures;
  bool ok() const { return failures.empty(); }
  void fail(const std::string& identity, const std::string& detail = "") {
    failures.push_back({identity, detail});
  }
  void require(bool cond, const std::string& identity, const std::string& detail = "") {
    if (!cond) fail(identity, detail);
  }
  void merge(const CheckReport& other) {
    for (const auto& f : other.failures)
      failures.push_back({other.subject.empty() ? f.identity : other.subject + ":" + f.identity,
                          f.detail});
  }
  std::string str() const {
    std::string out = subject + (ok() ? ": ok" : ": FAILED");
    for (const auto& f : failures) {
      out += "\n  " + f.identity;
      if (!f.detail.empty()) out += ": " + f.detail;
    }
    return out;
  }
};

}  // namespace braided
