#ifndef RIESZ_TESTS_ACCEPTANCE_HPP
#define RIESZ_TESTS_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace riesz::acceptance {

struct Outcome {
  int id = 0;
  std::string suite;
  std::string description;
  bool passed = false;
  std::string detail;  // worst observed deviation or first failure
};

/// Suite names in criterion order.
const std::vector<std::string>& suite_names();

/// Runs one named suite; throws std::invalid_argument for unknown names.
Outcome run_suite(const std::string& name);

std::vector<Outcome> run_all();

/// "PASS  [ 7] kite  ...  (detail)"
std::string format_outcome(const Outcome& outcome);

}  // namespace riesz::acceptance

#endif  // RIESZ_TESTS_ACCEPTANCE_HPP
