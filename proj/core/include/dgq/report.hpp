#pragma once

#include <string>
#include <vector>

namespace dgq {

/// Outcome of one verification. `witness` is empty on success and names the
/// first failing item otherwise; `note` records what the check does and does
/// not certify.
struct CheckReport {
  std::string check;
  bool passed = true;
  std::string witness;
  std::string note;
  std::vector<CheckReport> parts;

  static CheckReport pass(std::string check, std::string note = {}) {
    return CheckReport{std::move(check), true, {}, std::move(note), {}};
  }
  static CheckReport fail(std::string check, std::string witness, std::string note = {}) {
    return CheckReport{std::move(check), false, std::move(witness), std::move(note), {}};
  }
  std::string status() const { return passed ? "pass" : "fail"; }
};

}  // namespace dgq
