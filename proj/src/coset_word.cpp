#include "minq/coset_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace minq {

static void check_word_frame(const CosetWord& word) {
  require_minuscule(word.system, word.weight_index);
  for (std::size_t k = 0; k < word.letters.size(); ++k) {
    int b = word.letters[k];
    if (b < 1 || b > word.system.rank)
      throw std::invalid_argument("letter " + std::to_string(b) + " at position " +
                                  std::to_string(k + 1) + " out of range for " +
                                  to_string(word.system));
  }
}

WordValidation validate_coset_word(const CosetWord& word) {
  check_word_frame(word);
  WeightVec mu = -fundamental_weight(word.system, word.weight_index);
  for (int k = static_cast<int>(word.letters.size()); k >= 1; --k) {
    int b = word.letters[k - 1];
    if (mu(b - 1) != -1) return WordValidation::invalid_at(k);
    mu = reflect_weight(word.system, b, mu);
  }
  return WordValidation::ok();
}

WeightVec word_weight(const CosetWord& word) {
  check_word_frame(word);
  WeightVec mu = -fundamental_weight(word.system, word.weight_index);
  for (int b : word.letters) mu += simple_root_as_weight(word.system, b);
  return mu;
}

std::vector<int> walk_descent_colors(const CosetWord& word) {
  WeightVec mu = word_weight(word);
  std::vector<int> out;
  for (int b = 1; b <= word.system.rank; ++b)
    if (mu(b - 1) == -1) out.push_back(b);
  return out;
}

CosetWord longest_coset_word(const RootSystemId& sys, int weight_index) {
  require_minuscule(sys, weight_index);
  WeightVec mu = -fundamental_weight(sys, weight_index);
  std::vector<int> reversed;
  for (;;) {
    int pick = 0;
    for (int b = 1; b <= sys.rank; ++b)
      if (mu(b - 1) == -1) {
        pick = b;
        break;
      }
    if (pick == 0) break;
    reversed.push_back(pick);
    mu = reflect_weight(sys, pick, mu);
  }
  CosetWord word{sys, weight_index, {reversed.rbegin(), reversed.rend()}};
  if (!validate_coset_word(word).valid)
    throw std::logic_error("longest_coset_word produced an invalid word");
  std::size_t expected = 0;
  for (const auto& root : positive_roots(sys))
    if (root(weight_index - 1) == 1) ++expected;
  if (word.letters.size() != expected)
    throw std::logic_error("longest_coset_word length does not match dim G/P");
  return word;
}

}  // namespace minq
