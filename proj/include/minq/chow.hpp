#pragma once

#include "minq/quiver.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace minq {

// Additive Chow-group combinatorics of the Bott-Samelson tower over the
// canonical word of a quiver. The xi basis is indexed by the canonical
// vertices; all arithmetic is exact integer linear algebra.

// alpha_k = s_{b_1} ... s_{b_{k-1}}(b_k); r distinct positive roots.
std::vector<RootVec> alpha_sequence(const Quiver& q);

struct IntersectionTables {
  Eigen::MatrixXi c_dot_xi;  // [C_i] . xi_j
  Eigen::MatrixXi c_dot_t;   // [C_i] . T_j
  Eigen::MatrixXi t_in_xi;   // row i: T_i in the xi basis
};

IntersectionTables intersection_tables(const Quiver& q);

// Y_i = C_i - C_{s(i)}; the subtracted index is 0 when s(i) does not exist.
struct CurveYInC {
  int c_index = 0;
  int minus_c_index = 0;
};

std::vector<CurveYInC> curve_Y_in_C(const Quiver& q);

// Coordinates of the line bundle L_i in the xi basis.
Eigen::VectorXi line_bundle_xi_coords(const Quiver& q, int i);
// All of them, row i-1 = L_i.
Eigen::MatrixXi line_bundles_xi(const Quiver& q);

// -K of the Bott-Samelson variety in the xi basis; entry k equals both
// sum_{i>=k} <alpha_k^vee, alpha_i> and h(k) + 1 (checked).
Eigen::VectorXi canonical_bs(const Quiver& q);

// Generators xi_i * (sum_{j<=i} <alpha_j^vee, alpha_i> xi_j) of the Chow ring
// relations, exported as coefficient rows for documentation; no ring
// arithmetic is provided.
Eigen::MatrixXi chow_ring_relations(const Quiver& q);

struct WeilReport {
  std::vector<int> weil_basis;          // pics, canonical ids
  std::vector<int> picard_coeffs;       // L(w) = sum D_i over pics
  std::vector<int> anticanonical_coeffs;  // -K coefficient h(i) + 1 per pic
  bool locally_factorial = false;
  bool gorenstein = false;
  std::optional<int> gorenstein_index;  // h(w) + 1 when Gorenstein and nonempty
};

WeilReport weil_report(const Quiver& q);

}  // namespace minq
