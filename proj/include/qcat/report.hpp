#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

namespace qcat {

/// Outcome of an exhaustive axiom check: every violated instance, in scan order.
struct Report {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
  void append(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

enum class LawStatus { pass, fail, skipped };

inline const char* to_string(LawStatus s) {
  switch (s) {
    case LawStatus::pass:
      return "pass";
    case LawStatus::fail:
      return "fail";
    case LawStatus::skipped:
      return "skipped";
  }
  return "?";
}

struct LawEntry {
  std::string law;
  std::string fixture;
  LawStatus status = LawStatus::pass;
  std::string counterexample;  // empty unless status == fail (or a skip reason)
};

/// Entries of one law suite run. Sorted by (law, fixture) before emission so
/// that output is independent of evaluation order.
struct LawReport {
  std::string suite;
  std::vector<LawEntry> entries;

  void pass(std::string law, std::string fixture) {
    entries.push_back({std::move(law), std::move(fixture), LawStatus::pass, {}});
  }
  void fail(std::string law, std::string fixture, std::string counterexample) {
    entries.push_back({std::move(law), std::move(fixture), LawStatus::fail, std::move(counterexample)});
  }
  void skip(std::string law, std::string fixture, std::string reason) {
    entries.push_back({std::move(law), std::move(fixture), LawStatus::skipped, std::move(reason)});
  }
  /// Records a pass, or a failure with `counterexample` when `holds` is false.
  void check(bool holds, std::string law, std::string fixture, std::string counterexample) {
    if (holds)
      pass(std::move(law), std::move(fixture));
    else
      fail(std::move(law), std::move(fixture), std::move(counterexample));
  }
  void merge(const LawReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                  [](const LawEntry& e) { return e.status == LawStatus::fail; }));
  }
  bool ok() const { return failures() == 0; }
  void sort() {
    std::stable_sort(entries.begin(), entries.end(), [](const LawEntry& a, const LawEntry& b) {
      return std::tie(a.law, a.fixture) < std::tie(b.law, b.fixture);
    });
  }
};

}  // namespace qcat
