#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphflag/flagvec.hpp"

namespace graphflag {

struct AcceptanceOptions {
  // Factors used by the conversion criteria; altering them is a mutation check.
  ComponentFactors factors;
  std::uint64_t seed = 20240611;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 13;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

// Runs a single criterion by id (1..kCriterionCount).
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

}  // namespace graphflag
