// Runs the full verification table over every desk-scale instance and
// prints one pass/fail line per row. Exits nonzero when any row fails.

#include <cstdio>
#include <iostream>

#include "evcom/verify.hpp"

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  evcom::VerifyOptions options;
  options.max_n = 7;
  const auto rows = evcom::verify_paper(options);
  const int failed = evcom::print_rows(std::cout, rows);
  return failed == 0 ? 0 : 1;
}
