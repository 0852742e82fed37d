#pragma once

#include <string>
#include <vector>

namespace z2lab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::string witness_dir = "witnesses";
  uint64_t seed = 0;
  int jobs = 1;
};

// The acceptance criteria, one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt);

std::string format_criterion_line(const CriterionResult& r);

}  // namespace z2lab
