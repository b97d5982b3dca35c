#pragma once

#include "minq/root_system.hpp"

#include <vector>

namespace minq {

// A candidate reduced writing w = s_{b_1} ... s_{b_r} of a minimal-length
// coset representative for the minuscule weight `weight_index`. The letters
// are listed left to right, so b_r acts first on -w(varpi) walks.
struct CosetWord {
  RootSystemId system;
  int weight_index = 1;
  std::vector<int> letters;
};

struct WordValidation {
  bool valid = false;
  int position = 0;  // 1-based index of the failing letter when invalid

  static WordValidation ok() { return {true, 0}; }
  static WordValidation invalid_at(int pos) { return {false, pos}; }
};

// Walks mu = w_{k+1}(-varpi) from the right; every letter must pair to -1.
WordValidation validate_coset_word(const CosetWord& word);

// w(-varpi) = -varpi + sum of the letters as roots.
WeightVec word_weight(const CosetWord& word);

// {beta : <beta^vee, w(-varpi)> = -1}: the simple reflections that move the
// coset up in the Bruhat order. For nonempty words this is the hole-color set.
std::vector<int> walk_descent_colors(const CosetWord& word);

// Greedy word for the full G/P quiver: repeatedly prepend the smallest beta
// with <beta^vee, mu> = -1 starting from mu = -varpi.
CosetWord longest_coset_word(const RootSystemId& sys, int weight_index);

}  // namespace minq
