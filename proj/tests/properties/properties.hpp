#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace parabolica::testing {

struct PropertyResult {
  std::string name;
  int trials = 0;
  int skipped = 0;
  int failures = 0;
  std::string first_failure;
  double seconds = 0.0;

  bool pass() const { return failures == 0 && trials > skipped; }
};

std::vector<PropertyResult> run_properties(std::uint64_t seed);

}  // namespace parabolica::testing
