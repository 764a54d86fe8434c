#pragma once

#include <string>
#include <vector>

namespace shiftedq {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // short summary, or the first failure found
};

// The cross-validation suite.  quick = true shrinks the ranges for an
// interactive run; quick = false runs the full gate.
std::vector<CheckResult> run_acceptance(bool quick);

}  // namespace shiftedq
