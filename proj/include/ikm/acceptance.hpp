#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace ikm {

struct AcceptanceOutcome {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every acceptance criterion whose name contains `filter` (empty
/// matches all). `threads` parallelizes independent criteria; results are
/// identical for any thread count.
std::vector<AcceptanceOutcome> acceptance_suite(const std::string& filter,
                                                const std::filesystem::path& out_dir,
                                                unsigned threads = 1);

/// One line per criterion; returns the process exit code (nonzero iff any
/// executed criterion failed).
int report_outcomes(const std::vector<AcceptanceOutcome>& outcomes, std::ostream& os);

}  // namespace ikm
