#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "copsrobbers/game.hpp"

namespace copsrobbers {

// Outcome of one named property suite. Violations are data; a suite only
// throws for resource exhaustion (BudgetExceeded).
struct SuiteResult {
  std::string name;
  int checks = 0;
  int violations = 0;
  std::vector<std::string> messages;  // first few violations
  Json details = Json::object();

  bool passed() const { return violations == 0; }
};

// "module.property" names, one or more per library module.
std::vector<std::string> suite_names();

// `effort` scales instance counts (1 is the default quick run).
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int effort = 1);

Json to_json(const SuiteResult& r);

}  // namespace copsrobbers
