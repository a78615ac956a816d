#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gel/errors.hpp"

namespace gel {

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;  // one line of evidence or the failure reason
  double seconds = 0.0;
};

struct VerifyOptions {
  SearchLimits limits;
  int jobs = 1;
  std::uint64_t seed = 1;
};

// In report order.
std::vector<std::string> criterion_ids();

// Unknown id throws std::invalid_argument. Exceptions raised while a
// criterion runs are caught and reported as its failure.
CriterionResult run_criterion(const std::string& id,
                              const VerifyOptions& opt = {});

std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opt = {});

}  // namespace gel
