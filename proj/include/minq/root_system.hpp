#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace minq {

// Simply-laced Dynkin data, Bourbaki node numbering. All simple-root and
// weight indices in the public API are 1-based.

enum class Family { A, D, E };

std::string to_string(Family f);

struct RootSystemId {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const RootSystemId&, const RootSystemId&) = default;
};

std::string to_string(const RootSystemId& sys);

// Accepts "A"/"D"/"E" (any case). "B"/"C" are rejected with a message naming
// the isomorphic simply-laced minuscule target.
RootSystemId parse_system(const std::string& family, int rank);

// Vectors in the fundamental-weight basis.
using WeightVec = Eigen::VectorXi;
// Vectors in the simple-root basis.
using RootVec = Eigen::VectorXi;

bool dynkin_adjacent(const RootSystemId& sys, int i, int j);

// <alpha_i^vee, alpha_j>: 2, -1 or 0.
int pairing(const RootSystemId& sys, int i, int j);

Eigen::MatrixXi cartan_matrix(const RootSystemId& sys);

std::vector<int> minuscule_weights(const RootSystemId& sys);
bool is_minuscule(const RootSystemId& sys, int weight_index);
// Throws std::invalid_argument when the weight is not minuscule for sys.
void require_minuscule(const RootSystemId& sys, int weight_index);

WeightVec fundamental_weight(const RootSystemId& sys, int i);
// alpha_i written in the fundamental basis (i-th column of the Cartan matrix).
WeightVec simple_root_as_weight(const RootSystemId& sys, int i);

// <alpha_i^vee, mu> is a coordinate read in the fundamental basis.
int pair_coroot_weight(const RootSystemId& sys, int i, const WeightVec& mu);
WeightVec reflect_weight(const RootSystemId& sys, int i, const WeightVec& mu);

int pair_coroot_root(const RootSystemId& sys, int i, const RootVec& v);
RootVec reflect_root(const RootSystemId& sys, int i, const RootVec& v);

// <a^vee, b> for roots; coroot coordinates equal root coordinates here.
int root_pairing(const RootSystemId& sys, const RootVec& a, const RootVec& b);

// All positive roots, generated by closure from the simple roots; sorted
// lexicographically on coordinates.
std::vector<RootVec> positive_roots(const RootSystemId& sys);

}  // namespace minq
