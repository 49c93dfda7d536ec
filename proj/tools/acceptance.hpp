#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace solvable::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  /// Extra lines that do not affect pass/fail (substitute parameters, alternative boundary conditions).
  std::vector<std::string> notes;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

/// "criterion N PASS|FAIL title: detail [t s]" plus indented "note:" lines.
void print(std::ostream& out, const CriterionResult& r);

}  // namespace solvable::acceptance
