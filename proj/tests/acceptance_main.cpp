// Acceptance suite runner: one pass/fail line per criterion, nonzero exit on
// any failure.

#include "minq/acceptance.hpp"

#include <iostream>

int main() {
  int failures = minq::acceptance::run_and_print(std::cout);
  return failures == 0 ? 0 : 1;
}
