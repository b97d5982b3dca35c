#include "minq/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace minq {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  return "?";
}

std::string to_string(const RootSystemId& sys) {
  return to_string(sys.family) + std::to_string(sys.rank);
}

static void check_system(const RootSystemId& sys) {
  switch (sys.family) {
    case Family::A:
      if (sys.rank < 1) throw std::invalid_argument("family A requires rank >= 1");
      return;
    case Family::D:
      if (sys.rank < 4) throw std::invalid_argument("family D requires rank >= 4");
      return;
    case Family::E:
      if (sys.rank < 6 || sys.rank > 8)
        throw std::invalid_argument("family E requires rank in {6, 7, 8}");
      return;
  }
  throw std::invalid_argument("unknown family");
}

RootSystemId parse_system(const std::string& family, int rank) {
  std::string f = family;
  std::transform(f.begin(), f.end(), f.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (f == "A" || f == "D" || f == "E") {
    RootSystemId sys{f == "A" ? Family::A : f == "D" ? Family::D : Family::E, rank};
    check_system(sys);
    return sys;
  }
  if (f == "B")
    throw std::invalid_argument(
        "B" + std::to_string(rank) + " is not simply laced; its minuscule variety equals the D" +
        std::to_string(rank + 1) + " spinor variety (weight " + std::to_string(rank + 1) + ")");
  if (f == "C")
    throw std::invalid_argument(
        "C" + std::to_string(rank) + " is not simply laced; its minuscule variety equals A" +
        std::to_string(2 * rank - 1) + " projective space (weight 1)");
  throw std::invalid_argument("unknown family '" + family + "' (expected A, D or E)");
}

static void check_index(const RootSystemId& sys, int i) {
  if (i < 1 || i > sys.rank)
    throw std::out_of_range("simple-root index " + std::to_string(i) + " out of range for " +
                            to_string(sys));
}

bool dynkin_adjacent(const RootSystemId& sys, int i, int j) {
  check_system(sys);
  check_index(sys, i);
  check_index(sys, j);
  if (i == j) return false;
  int a = std::min(i, j), b = std::max(i, j);
  switch (sys.family) {
    case Family::A:
      return b == a + 1;
    case Family::D:
      // Chain 1..n-2, both n-1 and n attached to n-2.
      if (b == sys.rank) return a == sys.rank - 2;
      return b == a + 1;
    case Family::E:
      // Chain 1-3-4-5-6(-7(-8)), node 2 attached to node 4.
      if (a == 1) return b == 3;
      if (a == 2) return b == 4;
      return b == a + 1 && b >= 4;
  }
  return false;
}

int pairing(const RootSystemId& sys, int i, int j) {
  if (i == j) {
    check_system(sys);
    check_index(sys, i);
    return 2;
  }
  return dynkin_adjacent(sys, i, j) ? -1 : 0;
}

Eigen::MatrixXi cartan_matrix(const RootSystemId& sys) {
  check_system(sys);
  Eigen::MatrixXi c = Eigen::MatrixXi::Zero(sys.rank, sys.rank);
  for (int i = 1; i <= sys.rank; ++i)
    for (int j = 1; j <= sys.rank; ++j) c(i - 1, j - 1) = pairing(sys, i, j);
  return c;
}

std::vector<int> minuscule_weights(const RootSystemId& sys) {
  check_system(sys);
  switch (sys.family) {
    case Family::A: {
      std::vector<int> all(sys.rank);
      for (int i = 0; i < sys.rank; ++i) all[i] = i + 1;
      return all;
    }
    case Family::D:
      return {1, sys.rank - 1, sys.rank};
    case Family::E:
      if (sys.rank == 6) return {1, 6};
      if (sys.rank == 7) return {7};
      return {};
  }
  return {};
}

bool is_minuscule(const RootSystemId& sys, int weight_index) {
  auto ws = minuscule_weights(sys);
  return std::find(ws.begin(), ws.end(), weight_index) != ws.end();
}

void require_minuscule(const RootSystemId& sys, int weight_index) {
  check_system(sys);
  if (weight_index < 1 || weight_index > sys.rank)
    throw std::invalid_argument("weight index " + std::to_string(weight_index) +
                                " out of range for " + to_string(sys));
  if (!is_minuscule(sys, weight_index))
    throw std::invalid_argument("weight " + std::to_string(weight_index) +
                                " is not minuscule for " + to_string(sys));
}

WeightVec fundamental_weight(const RootSystemId& sys, int i) {
  check_system(sys);
  check_index(sys, i);
  WeightVec v = WeightVec::Zero(sys.rank);
  v(i - 1) = 1;
  return v;
}

WeightVec simple_root_as_weight(const RootSystemId& sys, int i) {
  check_system(sys);
  check_index(sys, i);
  WeightVec v = WeightVec::Zero(sys.rank);
  for (int j = 1; j <= sys.rank; ++j) v(j - 1) = pairing(sys, j, i);
  return v;
}

int pair_coroot_weight(const RootSystemId& sys, int i, const WeightVec& mu) {
  check_index(sys, i);
  return mu(i - 1);
}

WeightVec reflect_weight(const RootSystemId& sys, int i, const WeightVec& mu) {
  return mu - mu(i - 1) * simple_root_as_weight(sys, i);
}

int pair_coroot_root(const RootSystemId& sys, int i, const RootVec& v) {
  check_index(sys, i);
  int s = 0;
  for (int j = 1; j <= sys.rank; ++j)
    if (v(j - 1) != 0) s += pairing(sys, i, j) * v(j - 1);
  return s;
}

RootVec reflect_root(const RootSystemId& sys, int i, const RootVec& v) {
  RootVec w = v;
  w(i - 1) -= pair_coroot_root(sys, i, v);
  return w;
}

int root_pairing(const RootSystemId& sys, const RootVec& a, const RootVec& b) {
  int s = 0;
  for (int i = 1; i <= sys.rank; ++i)
    if (a(i - 1) != 0) s += a(i - 1) * pair_coroot_root(sys, i, b);
  return s;
}

std::vector<RootVec> positive_roots(const RootSystemId& sys) {
  check_system(sys);
  auto key = [&](const RootVec& v) {
    std::vector<int> k(v.data(), v.data() + v.size());
    return k;
  };
  std::set<std::vector<int>> seen;
  std::vector<RootVec> out, frontier;
  for (int i = 1; i <= sys.rank; ++i) {
    RootVec v = RootVec::Zero(sys.rank);
    v(i - 1) = 1;
    seen.insert(key(v));
    frontier.push_back(v);
  }
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const auto& v : frontier) {
      out.push_back(v);
      for (int i = 1; i <= sys.rank; ++i) {
        // Simply laced: v + alpha_i is a root exactly when the pairing is -1.
        if (pair_coroot_root(sys, i, v) == -1) {
          RootVec w = v;
          w(i - 1) += 1;
          if (seen.insert(key(w)).second) next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const RootVec& a, const RootVec& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
  });
  return out;
}

}  // namespace minq
