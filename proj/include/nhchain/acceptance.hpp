#pragma once
// End-to-end validation suite; also backs the `validate` CLI subcommand.

#include <string>
#include <vector>

namespace nhchain {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured values
  double seconds = 0.0;
};

// quick caps chain sizes at N = 100 (skips the N = 400 sweep leg).
std::vector<CriterionResult> run_acceptance(bool quick, unsigned seed = 12345);

std::string acceptance_report(const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace nhchain
