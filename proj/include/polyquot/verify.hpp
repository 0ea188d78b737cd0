#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyquot/coset_enumeration.hpp"
#include "polyquot/marked_group.hpp"

namespace polyquot {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool optional = false;  // failure does not fail the suite
  bool resource_bound = false;  // failed because a limit was hit
  bool skipped = false;
  std::string expected;
  std::string actual;
  double seconds = 0;
};

struct VerifyOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t subgroup_order_bound = kDefaultSubgroupOrderBound;
  bool stretch = false;
  std::size_t stretch_max_cosets = 6'000'000;
  /// Restrict to the criteria touching this classification case.
  std::optional<int> only_case;
};

/// Runs the acceptance criteria in order, reporting each as it finishes.
std::vector<CriterionResult> run_acceptance(
    const VerifyOptions& options,
    const std::function<void(const CriterionResult&)>& on_result = {});

bool suite_passed(const std::vector<CriterionResult>& results);
std::string format_result(const CriterionResult& r);

}  // namespace polyquot
