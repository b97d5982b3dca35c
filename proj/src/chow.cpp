#include "minq/chow.hpp"

#include <algorithm>
#include <stdexcept>

namespace minq {

std::vector<RootVec> alpha_sequence(const Quiver& q) {
  const auto& sys = q.system();
  const auto& letters = q.letters();
  int r = q.size();
  std::vector<RootVec> alphas;
  alphas.reserve(r);
  for (int k = 1; k <= r; ++k) {
    RootVec v = RootVec::Zero(sys.rank);
    v(letters[k - 1] - 1) = 1;
    for (int j = k - 1; j >= 1; --j) v = reflect_root(sys, letters[j - 1], v);
    alphas.push_back(std::move(v));
  }
  return alphas;
}

IntersectionTables intersection_tables(const Quiver& q) {
  const auto& sys = q.system();
  const auto& letters = q.letters();
  int r = q.size();
  auto alphas = alpha_sequence(q);
  IntersectionTables t;
  t.c_dot_xi = Eigen::MatrixXi::Zero(r, r);
  t.c_dot_t = Eigen::MatrixXi::Zero(r, r);
  t.t_in_xi = Eigen::MatrixXi::Zero(r, r);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      int beta = pairing(sys, letters[i - 1], letters[j - 1]);
      if (i < j) t.c_dot_xi(i - 1, j - 1) = beta;
      if (i == j) t.c_dot_xi(i - 1, j - 1) = 1;
      if (i <= j) t.c_dot_t(i - 1, j - 1) = beta;
      if (j <= i) t.t_in_xi(i - 1, j - 1) = root_pairing(sys, alphas[j - 1], alphas[i - 1]);
    }
  return t;
}

std::vector<CurveYInC> curve_Y_in_C(const Quiver& q) {
  std::vector<CurveYInC> out;
  out.reserve(q.size());
  for (int i = 1; i <= q.size(); ++i) out.push_back({i, q.successor(i)});
  return out;
}

Eigen::VectorXi line_bundle_xi_coords(const Quiver& q, int i) {
  if (i < 1 || i > q.size()) throw std::invalid_argument("line bundle index out of range");
  const auto& sys = q.system();
  const auto& letters = q.letters();
  auto alphas = alpha_sequence(q);
  Eigen::VectorXi l = Eigen::VectorXi::Zero(q.size());
  l(i - 1) = 1;
  for (int k = 1; k < i; ++k) {
    int coeff = letters[k - 1] == letters[i - 1] ? 1 : 0;
    for (int j = k + 1; j <= i; ++j)
      if (letters[j - 1] == letters[i - 1])
        coeff += root_pairing(sys, alphas[k - 1], alphas[j - 1]);
    l(k - 1) = coeff;
  }
  return l;
}

Eigen::MatrixXi line_bundles_xi(const Quiver& q) {
  int r = q.size();
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(r, r);
  for (int i = 1; i <= r; ++i) m.row(i - 1) = line_bundle_xi_coords(q, i).transpose();
  return m;
}

Eigen::VectorXi canonical_bs(const Quiver& q) {
  const auto& sys = q.system();
  int r = q.size();
  auto alphas = alpha_sequence(q);
  Eigen::VectorXi k_coeffs = Eigen::VectorXi::Zero(r);
  for (int k = 1; k <= r; ++k) {
    int s = 0;
    for (int i = k; i <= r; ++i) s += root_pairing(sys, alphas[k - 1], alphas[i - 1]);
    if (s != q.height(k) + 1)
      throw std::logic_error("anticanonical coefficient differs from h(k)+1");
    k_coeffs(k - 1) = s;
  }
  return k_coeffs;
}

Eigen::MatrixXi chow_ring_relations(const Quiver& q) {
  const auto& sys = q.system();
  int r = q.size();
  auto alphas = alpha_sequence(q);
  Eigen::MatrixXi rel = Eigen::MatrixXi::Zero(r, r);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= i; ++j)
      rel(i - 1, j - 1) = root_pairing(sys, alphas[j - 1], alphas[i - 1]);
  return rel;
}

WeilReport weil_report(const Quiver& q) {
  WeilReport w;
  w.weil_basis = q.pics();
  w.picard_coeffs.assign(w.weil_basis.size(), 1);
  for (int p : w.weil_basis) w.anticanonical_coeffs.push_back(q.height(p) + 1);
  if (q.empty()) {
    // The point: trivially factorial and Gorenstein, no divisor theory.
    w.locally_factorial = true;
    w.gorenstein = true;
    return w;
  }
  w.locally_factorial = w.weil_basis.size() == 1;
  int hmin = q.height(w.weil_basis.front());
  bool all_equal = true;
  for (int p : w.weil_basis) {
    hmin = std::min(hmin, q.height(p));
    if (q.height(p) != q.height(w.weil_basis.front())) all_equal = false;
  }
  w.gorenstein = all_equal;
  if (all_equal) w.gorenstein_index = hmin + 1;
  return w;
}

}  // namespace minq
