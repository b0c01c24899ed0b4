#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "utlab/report.hpp"

namespace utlab {

enum class Suite { Small, Paper, Long };

/// "small", "paper" or "long".
Suite parse_suite(const std::string& name);

/// Holds is a pass, Fails a fail, Undecided a budget or missing-data stop,
/// Error an exception escaping the check.
struct CriterionResult {
  int id = 0;
  std::string title;
  Verdict outcome = Verdict::Undecided;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriteria = 12;

std::vector<int> suite_criteria(Suite s);

/// Runs one acceptance criterion (1..12). The seed drives every random
/// sample.
CriterionResult run_criterion(int id, std::uint64_t seed = 1);

/// Runs the suite in order, calling on_result after each criterion.
std::vector<CriterionResult> run_suite(Suite s, std::uint64_t seed = 1,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS", "FAIL", "UNDECIDED" or "ERROR".
std::string outcome_tag(Verdict v);

}  // namespace utlab
