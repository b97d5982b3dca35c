#include "minq/models.hpp"

#include "minq/acceptance.hpp"
#include "minq/chow.hpp"
#include "minq/stringy.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

using namespace minq;

namespace {

const RootSystemId kA3{Family::A, 3};

Quiver gr24() { return Quiver::ambient_quiver(kA3, 2); }

std::multiset<int> pic_heights(const Quiver& q) {
  std::multiset<int> hs;
  for (int p : q.pics()) hs.insert(q.height(p));
  return hs;
}

// The unique A4 weight-2 subquiver with pics of heights {2, 3}.
Quiver skew_example() {
  std::vector<Quiver> found;
  for (const auto& q : enumerate_schubert({Family::A, 4}, 2))
    if (q.pics().size() == 2 && pic_heights(q) == std::multiset<int>{2, 3})
      found.push_back(q);
  REQUIRE(found.size() == 1);
  return found.front();
}

}  // namespace

TEST_CASE("decompose with a single block") {
  Quiver q = gr24();
  Decomposition d = decompose(q, {{q.pics()}});
  CHECK(d.block_count() == 1);
  CHECK(d.blocks[0].vertices == std::vector<int>{1, 2, 3, 4});
  CHECK(d.blocks[0].max_vertex == 4);
  CHECK(d.blocks[0].height == 3);
  CHECK(d.f == std::vector<int>{2});
  CHECK(d.f_height(1) == -1);
  CHECK(relative_canonical(d) == std::vector<int>{4});
  CHECK(discrepancies(q, d) == std::vector<int>{0, 1, 1, 2});
  CHECK_THROWS_AS(decompose(q, {{}}), std::invalid_argument);
}

TEST_CASE("two-pic subquiver of the A3 grid") {
  Quiver sub = schubert_from_antichain(gr24(), {1});
  REQUIRE(sub.pics() == std::vector<int>{1, 2});

  Decomposition d = decompose(sub, partition_from_order({1, 2}));
  CHECK(d.block_count() == 2);
  CHECK(d.blocks[0].vertices == std::vector<int>{1});
  CHECK(d.blocks[1].vertices == std::vector<int>{2, 3});
  CHECK(d.f == std::vector<int>{2, 3});
  CHECK(relative_canonical(d) == std::vector<int>{0, 3});

  // Equal pic heights: both orders are minimal, the swap is a flop.
  CHECK(is_minimal_order(sub, {1, 2}));
  CHECK(is_minimal_order(sub, {2, 1}));
  CHECK(classify_swap(sub, {1, 2}, 1) == SwapClass::Flop);
  FlopGraph g = flop_graph(sub);
  CHECK(g.nodes.size() == 2);
  CHECK(g.edges.size() == 1);
  CHECK(g.connected);
}

TEST_CASE("minimal orders") {
  CHECK(enumerate_minimal_orders(gr24()) == std::vector<std::vector<int>>{{1}});

  Quiver skew = skew_example();
  auto minimal = enumerate_minimal_orders(skew);
  REQUIRE(minimal.size() == 1);
  // The lower pic must come first; the non-final block then contracts with
  // coefficient 2 - 3 = -1.
  int low = skew.height(skew.pics()[0]) == 2 ? skew.pics()[0] : skew.pics()[1];
  CHECK(minimal.front().front() == low);
  Decomposition d = decompose(skew, partition_from_order(minimal.front()));
  CHECK(relative_canonical(d).front() == -1);

  // The height-sorted order is always minimal, and along any minimal order
  // the relative anticanonical coefficients are nonpositive except on the
  // final block, where the coefficient is h(w_n) + 1.
  oracles::for_each_system(6, [](const RootSystemId& sys, int w) {
    for (const auto& q : enumerate_schubert(sys, w)) {
      if (q.empty()) continue;
      std::vector<int> sorted = q.pics();
      std::stable_sort(sorted.begin(), sorted.end(),
                       [&](int a, int b) { return q.height(a) < q.height(b); });
      CHECK(is_minimal_order(q, sorted));
      for (const auto& order : enumerate_minimal_orders(q)) {
        Decomposition d = decompose(q, partition_from_order(order));
        auto coeffs = relative_canonical(d);
        for (std::size_t b = 0; b + 1 < coeffs.size(); ++b) CHECK(coeffs[b] <= 0);
        CHECK(coeffs.back() == d.blocks.back().height + 1);
      }
    }
  });
}

TEST_CASE("canonical partition groups pics by height") {
  Quiver skew = skew_example();
  auto cp = canonical_partition(skew);
  REQUIRE(cp.blocks.size() == 2);
  CHECK(skew.height(cp.blocks[0][0]) == 2);
  CHECK(skew.height(cp.blocks[1][0]) == 3);

  Quiver sub = schubert_from_antichain(gr24(), {1});
  CHECK(canonical_partition(sub).blocks == std::vector<std::vector<int>>{{1, 2}});
}

TEST_CASE("swap classification") {
  // Flip: consecutive f-linked blocks with increasing heights.
  Quiver skew = skew_example();
  auto minimal = enumerate_minimal_orders(skew).front();
  CHECK(classify_swap(skew, minimal, 1) == SwapClass::Flip);

  // Isomorphism: a skipped f-link. The A6 weight-3 enumeration contains
  // three-pic quivers with an independent pair.
  bool found_iso = false;
  for (const auto& q : enumerate_schubert({Family::A, 6}, 3)) {
    for (const auto& order : all_pic_orders(q)) {
      if (order.size() < 2) continue;
      for (int k = 1; k < static_cast<int>(order.size()); ++k)
        if (classify_swap(q, order, k) == SwapClass::Isomorphism) found_iso = true;
    }
    if (found_iso) break;
  }
  CHECK(found_iso);
}

TEST_CASE("non-smallness witness") {
  Quiver skew = skew_example();
  auto minimal = enumerate_minimal_orders(skew).front();
  CHECK_FALSE(non_small_witness(skew, minimal).has_value());

  std::vector<int> bad{minimal[1], minimal[0]};
  auto w = non_small_witness(skew, bad);
  REQUIRE(w.has_value());
  CHECK(skew.height(w->pic) == 3);
  CHECK(skew.height(w->f_pic) == 2);
  CHECK(skew.height(w->join_vertex) == 1);
  CHECK(w->codim == 4);
  CHECK(w->fiber_lb == 2);
}

TEST_CASE("smoothness of the variety") {
  CHECK(is_variety_smooth(gr24()));
  oracles::for_each_system(6, [](const RootSystemId& sys, int w) {
    Quiver amb = Quiver::ambient_quiver(sys, w);
    CHECK(is_variety_smooth(amb));
    // Homogeneity criterion: smooth exactly when there is no hole.
    for (const auto& q : enumerate_schubert(sys, w))
      CHECK(is_variety_smooth(q) == q.holes().empty());
  });

  // A-type single-pic quivers are all smooth.
  for (const auto& q : enumerate_schubert({Family::A, 5}, 3))
    if (q.pics().size() == 1) CHECK(is_variety_smooth(q));
}

TEST_CASE("quadric middle cases") {
  // D4 weight 1: the unique non-factorial quiver has one hole, two pics.
  auto d4 = enumerate_schubert({Family::D, 4}, 1);
  CHECK(d4.size() == 8);
  std::vector<Quiver> two_pics;
  for (const auto& q : d4)
    if (q.pics().size() == 2) two_pics.push_back(q);
  REQUIRE(two_pics.size() == 1);
  CHECK(two_pics.front().size() == 4);
  CHECK(two_pics.front().holes().size() == 1);
  CHECK_FALSE(is_variety_smooth(two_pics.front()));

  // D5 weight 1: one-pic one-hole quivers exist and are singular.
  bool found = false;
  for (const auto& q : enumerate_schubert({Family::D, 5}, 1))
    if (q.pics().size() == 1 && q.holes().size() == 1) {
      CHECK_FALSE(is_variety_smooth(q));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("smooth models and IH-small existence") {
  Quiver sub = schubert_from_antichain(gr24(), {1});
  CHECK(is_smooth_model(sub, {1, 2}));
  auto ih = has_ih_small_resolution(sub);
  CHECK(ih.admits);
  CHECK(ih.witness == std::vector<int>{1, 2});

  // Every A-family quiver admits an IH-small resolution.
  for (int n = 1; n <= 5; ++n)
    for (int w = 1; w <= n; ++w)
      for (const auto& q : enumerate_schubert({Family::A, n}, w))
        CHECK(has_ih_small_resolution(q).admits);

  // Single-pic quivers whose pic is minuscule are their own witness.
  oracles::for_each_system(6, [](const RootSystemId& sys, int w) {
    for (const auto& q : enumerate_schubert(sys, w))
      if (is_variety_smooth(q)) CHECK(has_ih_small_resolution(q).admits);
  });

  // The point.
  Quiver point = schubert_from_antichain(gr24(), {4});
  CHECK(is_variety_smooth(point));
  CHECK(has_ih_small_resolution(point).admits);
  CHECK(has_ih_small_resolution(point).witness == std::vector<int>{});
}

TEST_CASE("the D6 spinor reference example") {
  Quiver q = acceptance::d6_spinor_example();
  CHECK(q.size() == 11);
  CHECK(q.pics().size() == 2);
  CHECK(pic_heights(q) == std::multiset<int>{6, 6});

  // Both pic orders are minimal; the canonical model is the variety itself.
  auto minimal = enumerate_minimal_orders(q);
  CHECK(minimal.size() == 2);
  CHECK(canonical_partition(q).blocks.size() == 1);

  for (const auto& order : minimal) {
    Decomposition d = decompose(q, partition_from_order(order));
    CHECK(d.blocks[0].vertices.size() + d.blocks[1].vertices.size() == 11);
    CHECK_FALSE(is_smooth_model(q, order));
  }
  CHECK_FALSE(has_ih_small_resolution(q).admits);

  // Single-block decomposition discrepancies, sorted.
  Decomposition whole = decompose(q, {{q.pics()}});
  auto disc = discrepancies(q, whole);
  std::sort(disc.begin(), disc.end());
  CHECK(disc == std::vector<int>{0, 0, 1, 1, 1, 2, 2, 3, 3, 4, 5});

  // -K of the Bott-Samelson tower over this quiver, as a multiset.
  auto kbs = canonical_bs(q);
  std::vector<int> kvec(kbs.data(), kbs.data() + kbs.size());
  std::sort(kvec.rbegin(), kvec.rend());
  CHECK(kvec == std::vector<int>{7, 7, 6, 6, 6, 5, 5, 4, 4, 3, 2});

  FlopGraph g = flop_graph(q);
  CHECK(g.connected);
  bool two_nodes_one_flop = g.nodes.size() == 2 && g.edges.size() == 1;
  bool merged = g.nodes.size() == 1 && g.edges.empty();
  CHECK((two_nodes_one_flop || merged));
}

TEST_CASE("A-type codimension identity") {
  RootSystemId a3{Family::A, 3};
  Quiver amb = Quiver::ambient_quiver(a3, 2);
  auto all = enumerate_schubert(a3, 2);

  // Reflexive pairs are trivial.
  for (const auto& q : all) {
    auto r = a_type_codim_identity(amb, q, q);
    CHECK(r.ok);
    CHECK(r.gamma == 0);
    CHECK(r.qterm == 0);
  }

  // One hole of depth one: Gamma = a_1 + b_1 and q = 1.
  Quiver sub = schubert_from_antichain(amb, {1});
  Quiver point = schubert_from_antichain(amb, {4});
  REQUIRE(a_type_pair_admissible(sub, point));
  auto r = a_type_codim_identity(amb, sub, point);
  CHECK(r.gamma == 2);
  CHECK(r.qterm == 1);
  CHECK(r.ok);

  // Exhaustive over Gr(3,6).
  RootSystemId a5{Family::A, 5};
  Quiver amb36 = Quiver::ambient_quiver(a5, 3);
  auto all36 = enumerate_schubert(a5, 3);
  int pairs = 0;
  for (const auto& q : all36)
    for (const auto& s : all36) {
      if (!bruhat_leq(s, q) || !a_type_pair_admissible(q, s)) continue;
      ++pairs;
      CHECK(a_type_codim_identity(amb36, q, s).ok);
    }
  CHECK(pairs > all36.size());  // strictly more than the reflexive pairs

  // Family guard.
  Quiver damb = Quiver::ambient_quiver({Family::D, 4}, 4);
  CHECK_THROWS_AS(a_type_codim_identity(damb, damb, damb), std::invalid_argument);
}

TEST_CASE("exceptional-family IH-small verdicts by dimension") {
  // Reference tabulations list the admitting varieties by their position in
  // the dimension-sorted enumeration. Per-dimension admit counts pin the
  // verdicts much more tightly than the totals.
  auto per_dim = [](const RootSystemId& sys, int w, const std::vector<int>& listed) {
    auto all = enumerate_schubert(sys, w);
    std::map<int, int> mine, tabulated;
    for (const auto& q : all) {
      mine[q.size()] += has_ih_small_resolution(q).admits;
      tabulated[q.size()] = 0;
    }
    for (int pos : listed) tabulated[all[pos - 1].size()]++;
    tabulated[0]++;  // the point always admits
    return std::pair{mine, tabulated};
  };

  auto [e7_mine, e7_tab] = per_dim({Family::E, 7}, 7,
                                   {1, 24, 27, 28, 31, 34, 37, 40, 44, 46, 48, 49, 50, 51,
                                    52, 53, 54, 55});
  CHECK(e7_mine == e7_tab);

  // E6: identical except in dimension 12, where the tabulation admits one
  // variety but both candidates fail the factor-smoothness criterion (one is
  // locally factorial and singular, the other's unique minimal order keeps a
  // singular 11-dimensional factor). See also the selftest CLI case.
  auto [e6_mine, e6_tab] = per_dim({Family::E, 6}, 1,
                                   {1, 6, 7, 9, 11, 13, 17, 19, 20, 21, 22, 23, 24, 25, 26});
  CHECK(e6_mine[12] == 0);
  CHECK(e6_tab[12] == 1);
  e6_tab[12] = 0;
  CHECK(e6_mine == e6_tab);
}

TEST_CASE("spinor mirror symmetry") {
  // The two spinor weights of D_n are exchanged by a diagram automorphism,
  // so their enumerations carry identical invariant profiles.
  for (int n = 4; n <= 7; ++n) {
    auto profile = [&](int w) {
      std::vector<std::tuple<int, int, int, bool>> rows;
      for (const auto& q : enumerate_schubert({Family::D, n}, w))
        rows.emplace_back(q.size(), static_cast<int>(q.pics().size()),
                          static_cast<int>(q.holes().size()),
                          has_ih_small_resolution(q).admits);
      std::sort(rows.begin(), rows.end());
      return rows;
    };
    CHECK(profile(n - 1) == profile(n));
  }
}

TEST_CASE("minimality formulations agree up to isomorphism swaps") {
  long per_order_disagreements = 0;
  oracles::for_each_system(6, [&](const RootSystemId& sys, int w) {
    for (const auto& q : enumerate_schubert(sys, w)) {
      if (q.pics().size() < 2) continue;
      auto orders = all_pic_orders(q);
      std::map<std::vector<int>, int> idx;
      for (std::size_t i = 0; i < orders.size(); ++i) idx[orders[i]] = static_cast<int>(i);

      // Isomorphism-swap classes over all orders.
      std::vector<int> dsu(orders.size());
      for (std::size_t i = 0; i < orders.size(); ++i) dsu[i] = static_cast<int>(i);
      std::function<int(int)> root = [&](int x) {
        while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
        return x;
      };
      for (std::size_t i = 0; i < orders.size(); ++i)
        for (int k = 1; k < static_cast<int>(orders[i].size()); ++k)
          if (classify_swap(q, orders[i], k) == SwapClass::Isomorphism) {
            auto swapped = orders[i];
            std::swap(swapped[k - 1], swapped[k]);
            dsu[root(static_cast<int>(i))] = root(idx.at(swapped));
          }

      std::map<int, std::vector<int>> classes;
      for (std::size_t i = 0; i < orders.size(); ++i)
        classes[root(static_cast<int>(i))].push_back(static_cast<int>(i));

      for (const auto& [rep, members] : classes) {
        bool adjacency_on_class = true;
        for (int m : members) {
          auto diag = minimal_order_diagnostics(q, orders[m]);
          // The f-map verdict is a class invariant.
          CHECK(diag.by_f_map ==
                minimal_order_diagnostics(q, orders[members.front()]).by_f_map);
          if (diag.by_f_map) CHECK(diag.by_adjacency);
          if (diag.by_adjacency != diag.by_f_map) ++per_order_disagreements;
          adjacency_on_class = adjacency_on_class && diag.by_adjacency;
        }
        // Quantified over the class, the two formulations coincide.
        CHECK(adjacency_on_class ==
              minimal_order_diagnostics(q, orders[members.front()]).by_f_map);
      }
    }
  });
  // The adjacency reading is weaker on single orders; the divergence is real
  // (first visible in Gr(3,7), where an f-link can skip an unrelated middle
  // block) and reported here rather than hidden.
  WARN_MESSAGE(per_order_disagreements == 0,
               "per-order disagreements between the two minimality formulations: ",
               per_order_disagreements);
}
