// Runs every acceptance criterion, including the optional large enumeration,
// and prints one line per criterion.
#include <cstdio>
#include <iostream>

#include "polyquot/verify.hpp"

int main() {
  polyquot::VerifyOptions opts;
  opts.stretch = true;
  auto results = polyquot::run_acceptance(opts, [](const polyquot::CriterionResult& r) {
    std::cout << polyquot::format_result(r) << std::endl;
  });
  bool ok = polyquot::suite_passed(results);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed;
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return ok ? 0 : 1;
}
