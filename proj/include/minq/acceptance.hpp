#pragma once

#include "minq/quiver.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace minq::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CriterionResult> run_all();

// Prints one pass/fail line per criterion; returns the number of failures.
int run_and_print(std::ostream& os);

// Every minuscule (family, rank <= max_rank, weight), deterministic order.
void for_each_minuscule_system(int max_rank,
                               const std::function<void(const RootSystemId&, int)>& fn);

// The 11-dimensional two-pic D6 spinor Schubert variety with coheight
// multiset {0,0,1,1,1,2,2,3,3,4,5}; unique in the enumeration.
Quiver d6_spinor_example();

}  // namespace minq::acceptance
