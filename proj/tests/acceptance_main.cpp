// Standalone acceptance gate: one pass/fail line per criterion, nonzero
// exit when any fails.  --quick trims problem sizes.
#include "nhchain/acceptance.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  bool quick = false;
  unsigned seed = 12345;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
    else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::stoul(argv[++i]);
  }
  const auto results = nhchain::run_acceptance(quick, seed);
  std::cout << nhchain::acceptance_report(results);
  return nhchain::all_passed(results) ? 0 : 1;
}
