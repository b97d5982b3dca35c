#include "minq/report.hpp"

#include <algorithm>
#include <sstream>

namespace minq {

namespace {

Json int_vector(const std::vector<int>& v) {
  Json j = Json::array();
  for (int x : v) j.push_back(x);
  return j;
}

Json eigen_vector(const Eigen::VectorXi& v) {
  Json j = Json::array();
  for (int i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

Json eigen_matrix(const Eigen::MatrixXi& m) {
  Json j = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    j.push_back(row);
  }
  return j;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  if (v.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json invariants_json(const Quiver& q) {
  Json j;
  j["quiver"] = q.to_json();
  j["dimension"] = q.dimension();
  j["heights"] = int_vector(q.heights());
  j["pics"] = int_vector(q.pics());
  j["holes"] = int_vector(q.holes());
  j["virtual_hole_colors"] = int_vector(q.virtual_hole_colors());
  j["stabilizer_excluded_roots"] = int_vector(q.stabilizer_excluded_roots());
  j["support"] = int_vector(q.support());

  WeilReport w = weil_report(q);
  Json wj;
  wj["basis"] = "weil divisors D_i indexed by pics";
  wj["weil_basis"] = int_vector(w.weil_basis);
  wj["picard_coeffs"] = int_vector(w.picard_coeffs);
  wj["anticanonical_coeffs"] = int_vector(w.anticanonical_coeffs);
  wj["locally_factorial"] = w.locally_factorial;
  wj["gorenstein"] = w.gorenstein;
  if (w.gorenstein_index)
    wj["gorenstein_index"] = *w.gorenstein_index;
  else
    wj["gorenstein_index"] = nullptr;
  j["weil"] = wj;

  Json cj;
  cj["basis"] = "xi_1..xi_r over the canonical word";
  Json alphas = Json::array();
  for (const auto& a : alpha_sequence(q)) alphas.push_back(eigen_vector(a));
  cj["alpha_sequence"] = alphas;
  auto tables = intersection_tables(q);
  cj["c_dot_xi"] = eigen_matrix(tables.c_dot_xi);
  cj["c_dot_t"] = eigen_matrix(tables.c_dot_t);
  cj["t_in_xi"] = eigen_matrix(tables.t_in_xi);
  Json ys = Json::array();
  for (const auto& y : curve_Y_in_C(q)) {
    Json e;
    e["c"] = y.c_index;
    e["minus_c"] = y.minus_c_index == 0 ? Json(nullptr) : Json(y.minus_c_index);
    ys.push_back(e);
  }
  cj["y_in_c"] = ys;
  cj["line_bundles_xi"] = eigen_matrix(line_bundles_xi(q));
  cj["anticanonical_xi"] = eigen_vector(canonical_bs(q));
  cj["ring_relations"] = eigen_matrix(chow_ring_relations(q));
  j["chow"] = cj;
  return j;
}

Json models_json(const Quiver& q) {
  Json j;
  auto minimal = enumerate_minimal_orders(q);
  Json morders = Json::array();
  for (const auto& o : minimal) morders.push_back(int_vector(o));
  j["minimal_orders"] = morders;

  auto cp = canonical_partition(q);
  Json cpj = Json::array();
  for (const auto& b : cp.blocks) cpj.push_back(int_vector(b));
  j["canonical_partition"] = cpj;
  {
    Decomposition d = decompose(q, cp);
    Json blocks = Json::array();
    for (int b = 1; b <= d.block_count(); ++b) {
      Json bj;
      bj["vertices"] = int_vector(d.blocks[b - 1].vertices);
      bj["pics"] = int_vector(d.blocks[b - 1].pics);
      bj["max"] = d.blocks[b - 1].max_vertex;
      bj["height"] = d.blocks[b - 1].height;
      bj["f"] = d.f[b - 1] == d.block_count() + 1 ? Json(nullptr) : Json(d.f[b - 1]);
      blocks.push_back(bj);
    }
    Json cm;
    cm["blocks"] = blocks;
    cm["anticanonical_coeffs"] = int_vector(relative_canonical(d));
    j["canonical_model"] = cm;
  }

  Json orders = Json::array();
  for (const auto& o : minimal) {
    Decomposition d = decompose(q, partition_from_order(o));
    Json oj;
    oj["order"] = int_vector(o);
    Json blocks = Json::array();
    for (int b = 1; b <= d.block_count(); ++b) {
      Json bj;
      bj["pic"] = d.blocks[b - 1].pics.front();
      bj["vertices"] = int_vector(d.blocks[b - 1].vertices);
      bj["max"] = d.blocks[b - 1].max_vertex;
      bj["height"] = d.blocks[b - 1].height;
      bj["f"] = d.f[b - 1] == d.block_count() + 1 ? Json(nullptr) : Json(d.f[b - 1]);
      blocks.push_back(bj);
    }
    oj["blocks"] = blocks;
    Json swaps = Json::array();
    for (int k = 1; k < static_cast<int>(o.size()); ++k)
      swaps.push_back(to_string(classify_swap(q, o, k)));
    oj["swaps"] = swaps;
    oj["relative_anticanonical"] = int_vector(relative_canonical(d));
    oj["discrepancies"] = int_vector(discrepancies(q, d));
    oj["smooth_model"] = is_smooth_model(q, o);
    orders.push_back(oj);
  }
  j["orders"] = orders;

  FlopGraph g = flop_graph(q);
  Json gj;
  Json nodes = Json::array();
  for (const auto& cls : g.nodes) {
    Json node = Json::array();
    for (const auto& o : cls) node.push_back(int_vector(o));
    nodes.push_back(node);
  }
  gj["nodes"] = nodes;
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  gj["edges"] = edges;
  gj["connected"] = g.connected;
  j["flop_graph"] = gj;

  j["smooth"] = is_variety_smooth(q);
  auto ih = has_ih_small_resolution(q);
  j["ih_small"] = ih.admits;
  j["ih_small_witness"] = ih.witness ? Json(int_vector(*ih.witness)) : Json(nullptr);
  int smooth_models = 0;
  for (const auto& o : minimal)
    if (is_smooth_model(q, o)) ++smooth_models;
  j["smooth_model_count"] = smooth_models;
  return j;
}

Json stringy_json(const Quiver& q) {
  Json j;
  auto c = crepant_obstruction(q);
  j["gorenstein"] = c.gorenstein;
  if (c.gorenstein) {
    j["coheights"] = int_vector(coheights(q));
    j["stringy_euler"] = rational_to_string(*c.e_st);
    j["obstructed"] = *c.obstructed;
  } else {
    j["coheights"] = nullptr;
    j["stringy_euler"] = nullptr;
    j["obstructed"] = nullptr;
  }
  return j;
}

Json full_report_json(const Quiver& q) {
  Json j;
  j["quiver"] = q.to_json();
  j["invariants"] = invariants_json(q);
  j["models"] = models_json(q);
  j["stringy"] = stringy_json(q);
  return j;
}

std::string quiver_table(const Quiver& q) {
  std::ostringstream os;
  os << to_string(q.system()) << " weight " << q.weight_index() << "  dimension "
     << q.dimension() << "\n";
  os << "vertex  color  height  pic  hole\n";
  for (int v = 1; v <= q.size(); ++v) {
    bool pic = std::find(q.pics().begin(), q.pics().end(), v) != q.pics().end();
    bool hole = std::find(q.holes().begin(), q.holes().end(), v) != q.holes().end();
    os << "  " << v << "\ta" << q.color(v) << "\t" << q.height(v) << "\t"
       << (pic ? "*" : "-") << "\t" << (hole ? "*" : "-") << "\n";
  }
  os << "arrows:";
  for (auto [a, b] : q.arrows()) os << " " << a << "->" << b;
  os << "\n";
  os << "pics: " << join_ints(q.pics()) << "\n";
  os << "holes: " << join_ints(q.holes()) << "\n";
  os << "virtual hole colors: " << join_ints(q.virtual_hole_colors()) << "\n";
  return os.str();
}

std::string invariants_table(const Quiver& q) {
  std::ostringstream os;
  os << quiver_table(q);
  WeilReport w = weil_report(q);
  os << "weil basis (pics): " << join_ints(w.weil_basis) << "\n";
  os << "L(w) coefficients: " << join_ints(w.picard_coeffs) << "\n";
  os << "-K coefficients: " << join_ints(w.anticanonical_coeffs) << "\n";
  os << "locally factorial: " << yn(w.locally_factorial) << "\n";
  os << "gorenstein: " << yn(w.gorenstein);
  if (w.gorenstein_index) os << " (index " << *w.gorenstein_index << ")";
  os << "\n";
  auto kbs = canonical_bs(q);
  os << "-K (Bott-Samelson, xi basis): ";
  for (int i = 0; i < kbs.size(); ++i) os << (i ? "," : "") << kbs(i);
  os << "\n";
  return os.str();
}

std::string models_table(const Quiver& q) {
  std::ostringstream os;
  auto minimal = enumerate_minimal_orders(q);
  os << "minimal orders: " << minimal.size() << "\n";
  for (const auto& o : minimal) {
    Decomposition d = decompose(q, partition_from_order(o));
    os << "  order " << join_ints(o) << "  heights";
    for (const auto& b : d.blocks) os << " " << b.height;
    os << "  swaps";
    if (o.size() <= 1) os << " -";
    for (int k = 1; k < static_cast<int>(o.size()); ++k)
      os << " " << to_string(classify_swap(q, o, k));
    os << "  discrepancies " << join_ints(discrepancies(q, d));
    os << (is_smooth_model(q, o) ? "  smooth" : "") << "\n";
  }
  auto cp = canonical_partition(q);
  os << "canonical partition:";
  for (const auto& b : cp.blocks) os << " {" << join_ints(b) << "}";
  os << "\n";
  FlopGraph g = flop_graph(q);
  os << "flop graph: " << g.nodes.size() << " node(s), " << g.edges.size()
     << " edge(s), " << (g.connected ? "connected" : "disconnected") << "\n";
  os << "smooth: " << yn(is_variety_smooth(q)) << "\n";
  auto ih = has_ih_small_resolution(q);
  os << "ih-small resolution: " << yn(ih.admits);
  if (ih.witness && !ih.witness->empty()) os << " (order " << join_ints(*ih.witness) << ")";
  os << "\n";
  return os.str();
}

std::string stringy_table(const Quiver& q) {
  std::ostringstream os;
  auto c = crepant_obstruction(q);
  os << "gorenstein: " << yn(c.gorenstein) << "\n";
  if (c.gorenstein) {
    os << "coheights: " << join_ints(coheights(q)) << "\n";
    os << "stringy euler number: " << rational_to_string(*c.e_st) << "\n";
    os << "crepant obstruction: " << yn(*c.obstructed) << "\n";
  } else {
    os << "stringy euler number: undefined (non-Gorenstein)\n";
  }
  return os.str();
}

Json smooth_json(const Quiver& q) {
  Json j;
  j["smooth"] = is_variety_smooth(q);
  j["pics"] = int_vector(q.pics());
  j["holes"] = int_vector(q.holes());
  if (!q.empty() && q.pics().size() == 1) {
    j["pic_color"] = q.color(q.pics().front());
    j["minuscule_nodes_of_support"] =
        int_vector(minuscule_nodes_of_subdiagram(q.system(), q.support()));
  }
  auto ih = has_ih_small_resolution(q);
  j["ih_small"] = ih.admits;
  j["ih_small_witness"] = ih.witness ? Json(int_vector(*ih.witness)) : Json(nullptr);
  return j;
}

std::string smooth_table(const Quiver& q) {
  std::ostringstream os;
  os << "smooth: " << yn(is_variety_smooth(q)) << "\n";
  os << "pics: " << join_ints(q.pics()) << "  holes: " << join_ints(q.holes()) << "\n";
  if (!q.empty() && q.pics().size() == 1) {
    os << "pic color: a" << q.color(q.pics().front()) << ", minuscule support nodes: "
       << join_ints(minuscule_nodes_of_subdiagram(q.system(), q.support())) << "\n";
  }
  auto ih = has_ih_small_resolution(q);
  os << "ih-small resolution: " << yn(ih.admits);
  if (ih.witness && !ih.witness->empty()) os << " (order " << join_ints(*ih.witness) << ")";
  os << "\n";
  return os.str();
}

std::vector<ListRow> list_rows(const std::vector<Quiver>& quivers) {
  std::vector<ListRow> rows;
  int id = 0;
  for (const auto& q : quivers) {
    ListRow row;
    row.id = ++id;
    row.dim = q.dimension();
    row.n_pics = static_cast<int>(q.pics().size());
    for (int p : q.pics()) row.pic_heights.push_back(q.height(p));
    std::sort(row.pic_heights.rbegin(), row.pic_heights.rend());
    WeilReport w = weil_report(q);
    row.factorial = w.locally_factorial;
    row.gorenstein = w.gorenstein;
    row.smooth = is_variety_smooth(q);
    row.ih_small = has_ih_small_resolution(q).admits;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string list_table(const RootSystemId& sys, int weight,
                       const std::vector<Quiver>& quivers) {
  std::ostringstream os;
  os << to_string(sys) << " weight " << weight << ": " << quivers.size()
     << " Schubert quivers\n";
  os << "id\tdim\tpics\theights\tfactorial\tgorenstein\tsmooth\tih_small\n";
  for (const auto& row : list_rows(quivers)) {
    os << row.id << "\t" << row.dim << "\t" << row.n_pics << "\t"
       << join_ints(row.pic_heights) << "\t" << yn(row.factorial) << "\t"
       << yn(row.gorenstein) << "\t" << yn(row.smooth) << "\t" << yn(row.ih_small)
       << "\n";
  }
  return os.str();
}

Json list_json(const RootSystemId& sys, int weight, const std::vector<Quiver>& quivers) {
  Json j;
  j["family"] = to_string(sys.family);
  j["rank"] = sys.rank;
  j["weight"] = weight;
  j["count"] = quivers.size();
  Json rows = Json::array();
  auto metas = list_rows(quivers);
  for (std::size_t i = 0; i < quivers.size(); ++i) {
    Json row;
    row["id"] = metas[i].id;
    row["dim"] = metas[i].dim;
    row["pics"] = metas[i].n_pics;
    row["pic_heights"] = int_vector(metas[i].pic_heights);
    row["factorial"] = metas[i].factorial;
    row["gorenstein"] = metas[i].gorenstein;
    row["smooth"] = metas[i].smooth;
    row["ih_small"] = metas[i].ih_small;
    row["quiver"] = quivers[i].to_json();
    rows.push_back(row);
  }
  j["quivers"] = rows;
  return j;
}

ClassifySummary classify_summary(const std::vector<Quiver>& quivers) {
  ClassifySummary s;
  s.total = static_cast<int>(quivers.size());
  for (const auto& row : list_rows(quivers)) {
    s.smooth += row.smooth;
    s.factorial += row.factorial;
    s.gorenstein += row.gorenstein;
    s.ih_small += row.ih_small;
  }
  return s;
}

std::string classify_table(const RootSystemId& sys, int weight, const ClassifySummary& s) {
  std::ostringstream os;
  os << to_string(sys) << " weight " << weight << ": " << s.total
     << " Schubert varieties\n";
  os << "smooth: " << s.smooth << " of " << s.total << "\n";
  os << "locally factorial: " << s.factorial << " of " << s.total << "\n";
  os << "gorenstein: " << s.gorenstein << " of " << s.total << "\n";
  os << "ih-small resolution exists: " << s.ih_small << " of " << s.total << "\n";
  return os.str();
}

Json classify_json(const RootSystemId& sys, int weight, const ClassifySummary& s) {
  Json j;
  j["family"] = to_string(sys.family);
  j["rank"] = sys.rank;
  j["weight"] = weight;
  j["total"] = s.total;
  j["smooth"] = s.smooth;
  j["locally_factorial"] = s.factorial;
  j["gorenstein"] = s.gorenstein;
  j["ih_small"] = s.ih_small;
  return j;
}

}  // namespace minq
