#include "minq/coset_word.hpp"
#include "minq/root_system.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace minq;

TEST_CASE("pairing on the Bourbaki diagrams") {
  CHECK(pairing({Family::A, 4}, 2, 3) == -1);
  CHECK(pairing({Family::D, 6}, 5, 6) == 0);
  CHECK(pairing({Family::D, 6}, 4, 6) == -1);
  CHECK(pairing({Family::E, 6}, 2, 4) == -1);
  CHECK(pairing({Family::E, 6}, 2, 3) == 0);
  CHECK(pairing({Family::E, 8}, 7, 8) == -1);
  CHECK(pairing({Family::A, 4}, 3, 3) == 2);
  CHECK_THROWS_AS(pairing({Family::A, 4}, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(pairing({Family::A, 4}, 1, 5), std::out_of_range);

  oracles::for_each_system(8, [](const RootSystemId& sys, int) {
    for (int i = 1; i <= sys.rank; ++i)
      for (int j = 1; j <= sys.rank; ++j) CHECK(pairing(sys, i, j) == pairing(sys, j, i));
  });
}

TEST_CASE("minuscule weights table") {
  CHECK(minuscule_weights({Family::A, 5}) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(minuscule_weights({Family::D, 6}) == std::vector<int>{1, 5, 6});
  CHECK(minuscule_weights({Family::E, 6}) == std::vector<int>{1, 6});
  CHECK(minuscule_weights({Family::E, 7}) == std::vector<int>{7});
  CHECK(minuscule_weights({Family::E, 8}).empty());
}

TEST_CASE("family parsing rejects non-simply-laced input with a hint") {
  CHECK(parse_system("a", 4) == RootSystemId{Family::A, 4});
  CHECK_THROWS_WITH_AS(parse_system("B", 5), doctest::Contains("D6"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_system("C", 3), doctest::Contains("A5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_system("E", 9), std::invalid_argument);
  CHECK_THROWS_AS(parse_system("D", 3), std::invalid_argument);
}

TEST_CASE("reflection on the weight lattice") {
  RootSystemId a3{Family::A, 3};
  // s_i(w_i) = w_i - alpha_i.
  for (int i = 1; i <= 3; ++i) {
    WeightVec w = fundamental_weight(a3, i);
    CHECK(reflect_weight(a3, i, w) == WeightVec(w - simple_root_as_weight(a3, i)));
  }
  // Vectors on the fixed hyperplane do not move.
  WeightVec mu = fundamental_weight(a3, 1) + 3 * fundamental_weight(a3, 3);
  CHECK(reflect_weight(a3, 2, mu) == mu);

  // Involution, all systems up to rank 7.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4);
  oracles::for_each_system(7, [&](const RootSystemId& sys, int) {
    WeightVec v(sys.rank);
    for (int i = 0; i < sys.rank; ++i) v(i) = coeff(rng);
    for (int i = 1; i <= sys.rank; ++i)
      CHECK(reflect_weight(sys, i, reflect_weight(sys, i, v)) == v);
  });
}

TEST_CASE("positive root counts") {
  CHECK(positive_roots({Family::A, 4}).size() == 10);
  CHECK(positive_roots({Family::D, 5}).size() == 20);
  CHECK(positive_roots({Family::E, 6}).size() == 36);
  CHECK(positive_roots({Family::E, 7}).size() == 63);
  CHECK(positive_roots({Family::E, 8}).size() == 120);
}

TEST_CASE("coset word validation") {
  RootSystemId a3{Family::A, 3};
  CHECK(validate_coset_word({a3, 2, {2, 1, 3, 2}}).valid);

  // Independent re-walk with the explicit A3 Cartan rows.
  {
    int cartan[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    std::vector<int> word{2, 1, 3, 2};
    int mu[3] = {0, -1, 0};  // -w_2
    for (int k = 3; k >= 0; --k) {
      int b = word[k];
      CHECK(mu[b - 1] == -1);
      for (int j = 0; j < 3; ++j) mu[j] += cartan[j][b - 1];
    }
  }

  auto bad = validate_coset_word({a3, 2, {2, 2}});
  CHECK_FALSE(bad.valid);
  CHECK(bad.position == 1);
  bad = validate_coset_word({a3, 2, {1}});
  CHECK_FALSE(bad.valid);
  CHECK(bad.position == 1);
  bad = validate_coset_word({a3, 2, {3, 3, 2}});
  CHECK_FALSE(bad.valid);
  CHECK(bad.position == 1);

  CHECK(validate_coset_word({a3, 2, {}}).valid);  // the point
  CHECK_THROWS_AS(validate_coset_word({a3, 2, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_coset_word({a3, 4, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_coset_word({{Family::E, 8}, 1, {}}), std::invalid_argument);
}

TEST_CASE("longest coset words") {
  CHECK(longest_coset_word({Family::A, 3}, 2).letters.size() == 4);
  CHECK(longest_coset_word({Family::A, 1}, 1).letters == std::vector<int>{1});
  CHECK(longest_coset_word({Family::E, 6}, 1).letters.size() == 16);

  oracles::for_each_system(7, [](const RootSystemId& sys, int w) {
    auto word = longest_coset_word(sys, w);
    CHECK(validate_coset_word(word).valid);
    CHECK(static_cast<int>(word.letters.size()) == oracles::minuscule_dimension(sys, w));
  });

  CHECK_THROWS_AS(longest_coset_word({Family::E, 6}, 2), std::invalid_argument);
}

TEST_CASE("minusculity of the weight walk") {
  // Every prefix truncation of a valid word keeps all coroot pairings in
  // {-1, 0, 1}.
  auto walk_stays_minuscule = [](const CosetWord& word) {
    WeightVec mu = -fundamental_weight(word.system, word.weight_index);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
      mu = reflect_weight(word.system, *it, mu);
      for (int i = 0; i < word.system.rank; ++i) {
        CHECK(mu(i) >= -1);
        CHECK(mu(i) <= 1);
      }
    }
  };
  oracles::for_each_system(6, [&](const RootSystemId& sys, int w) {
    walk_stays_minuscule(longest_coset_word(sys, w));
  });
  // Also over the antichain-derived subwords.
  oracles::for_each_system(5, [&](const RootSystemId& sys, int w) {
    for (const auto& q : minq::enumerate_schubert(sys, w)) walk_stays_minuscule(q.word());
  });
}
