#pragma once

#include <string>
#include <vector>

namespace fibcong::selftest {

struct Case {
  std::string name;
  bool pass;
  std::string detail;  // filled on failure
};

/// Known-answer suite: hand-checked values for every operation family,
/// including the raw integer sums behind the smallest theorem instances.
std::vector<Case> run();

}  // namespace fibcong::selftest
