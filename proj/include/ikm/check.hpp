#pragma once

#include <string>

namespace ikm {

enum class CheckStatus { Pass, Fail, Flagged, NotApplicable };

/// Outcome of a single verification predicate. `worst` is the extremal
/// measured quantity the predicate was judged on (margin, deviation, ...),
/// so a failing check always carries the number that failed it.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  double worst = 0.0;
  std::string detail;

  bool passed() const { return status == CheckStatus::Pass; }
};

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Flagged: return "flagged";
    case CheckStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

}  // namespace ikm
