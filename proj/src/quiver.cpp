#include "minq/quiver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace minq {

namespace {

std::vector<int> successors_of(const std::vector<int>& letters) {
  int r = static_cast<int>(letters.size());
  std::vector<int> succ(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (letters[j] == letters[i]) {
        succ[i] = j + 1;
        break;
      }
  return succ;
}

std::vector<std::pair<int, int>> arrows_of(const RootSystemId& sys,
                                           const std::vector<int>& letters) {
  int r = static_cast<int>(letters.size());
  auto succ = successors_of(letters);
  std::vector<std::pair<int, int>> arrows;
  for (int i = 1; i <= r; ++i) {
    int stop = succ[i - 1] == 0 ? r + 1 : succ[i - 1];
    for (int j = i + 1; j < stop; ++j)
      if (pairing(sys, letters[j - 1], letters[i - 1]) != 0) arrows.emplace_back(i, j);
  }
  return arrows;
}

// Greedy topological order: among the vertices whose predecessors are all
// placed, take the one with the smallest color. Distinct available vertices
// never share a color (same-color vertices are comparable), so this is a
// total rule; the index tie-break only guards degenerate input.
std::vector<int> canonical_order(const std::vector<int>& letters,
                                 const std::vector<std::pair<int, int>>& arrows) {
  int r = static_cast<int>(letters.size());
  std::vector<int> indeg(r, 0);
  std::vector<std::vector<int>> out(r);
  for (auto [a, b] : arrows) {
    ++indeg[b - 1];
    out[a - 1].push_back(b);
  }
  std::vector<int> order;
  order.reserve(r);
  std::vector<char> placed(r, 0);
  for (int step = 0; step < r; ++step) {
    int best = 0;
    for (int v = 1; v <= r; ++v) {
      if (placed[v - 1] || indeg[v - 1] > 0) continue;
      if (best == 0 || letters[v - 1] < letters[best - 1]) best = v;
    }
    if (best == 0) throw std::logic_error("cycle in quiver arrows");
    placed[best - 1] = 1;
    order.push_back(best);
    for (int t : out[best - 1]) --indeg[t - 1];
  }
  return order;
}

}  // namespace

Quiver Quiver::build(const RootSystemId& sys, int weight_index, std::vector<int> letters,
                     std::optional<std::vector<int>> ambient_ids, bool coset_validated) {
  Quiver q;
  q.system_ = sys;
  q.weight_index_ = weight_index;
  int r = static_cast<int>(letters.size());

  auto raw_arrows = arrows_of(sys, letters);
  auto order = canonical_order(letters, raw_arrows);  // order[new-1] = old id
  std::vector<int> new_id(r + 1, 0);
  for (int n = 1; n <= r; ++n) new_id[order[n - 1]] = n;

  q.colors_.resize(r);
  for (int n = 1; n <= r; ++n) q.colors_[n - 1] = letters[order[n - 1] - 1];
  if (ambient_ids) {
    q.has_ambient_ = true;
    q.ambient_ids_.resize(r);
    for (int n = 1; n <= r; ++n) q.ambient_ids_[n - 1] = (*ambient_ids)[order[n - 1] - 1];
    q.ambient_id_set_ = q.ambient_ids_;
    std::sort(q.ambient_id_set_.begin(), q.ambient_id_set_.end());
  }

  q.arrows_ = arrows_of(sys, q.colors_);
  // The canonical word is commutation-equivalent to the input, so the arrow
  // set must be the relabelled one.
  std::vector<std::pair<int, int>> relabelled;
  relabelled.reserve(raw_arrows.size());
  for (auto [a, b] : raw_arrows) {
    int x = new_id[a], y = new_id[b];
    relabelled.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(relabelled.begin(), relabelled.end());
  if (relabelled != q.arrows_)
    throw std::logic_error("canonical reordering changed the quiver");

  q.word_ = CosetWord{sys, weight_index, q.colors_};
  q.annotate();
  q.check_axioms(coset_validated);
  if (r > 0) {
    auto rec = heights_by_recursion(q);
    if (rec != q.heights_)
      throw std::logic_error("height recursion disagrees with longest-path heights");
  }
  return q;
}

Quiver Quiver::from_word(const CosetWord& word) {
  auto v = validate_coset_word(word);
  if (!v.valid)
    throw std::invalid_argument("invalid coset word: InvalidAt(" +
                                std::to_string(v.position) + ")");
  return build(word.system, word.weight_index, word.letters, std::nullopt, true);
}

Quiver Quiver::ambient_quiver(const RootSystemId& sys, int weight_index) {
  auto word = longest_coset_word(sys, weight_index);
  std::vector<int> ids(word.letters.size());
  std::iota(ids.begin(), ids.end(), 1);
  Quiver q = build(sys, weight_index, word.letters, std::nullopt, true);
  // The canonical numbering is the ambient reference frame.
  q.has_ambient_ = true;
  q.ambient_ids_.resize(q.size());
  std::iota(q.ambient_ids_.begin(), q.ambient_ids_.end(), 1);
  q.ambient_id_set_ = q.ambient_ids_;
  return q;
}

Quiver Quiver::from_letters(const RootSystemId& sys, std::vector<int> letters) {
  for (int b : letters)
    if (b < 1 || b > sys.rank) throw std::invalid_argument("letter out of range");
  int weight = letters.empty() ? 0 : letters.back();
  Quiver q = build(sys, weight, std::move(letters), std::nullopt, false);
  // The sink color plays the role of the weight for the sub-root-system.
  if (!q.empty()) q.weight_index_ = q.colors_.back();
  return q;
}

void Quiver::annotate() {
  int r = size();
  succ_ = successors_of(colors_);
  pred_.assign(r, 0);
  for (int i = 1; i <= r; ++i)
    if (succ_[i - 1] != 0) pred_[succ_[i - 1] - 1] = i;

  reach_.assign(r, std::vector<char>(r, 0));
  std::vector<std::vector<int>> out(r);
  std::vector<int> indeg(r, 0);
  for (auto [a, b] : arrows_) {
    out[a - 1].push_back(b);
    ++indeg[b - 1];
  }
  // Canonical order is topological; sweep backwards.
  for (int v = r; v >= 1; --v) {
    reach_[v - 1][v - 1] = 1;
    for (int t : out[v - 1])
      for (int w = 1; w <= r; ++w)
        if (reach_[t - 1][w - 1]) reach_[v - 1][w - 1] = 1;
  }

  heights_.assign(r, 0);
  for (int v = r; v >= 1; --v) {
    int h = 1;
    for (int t : out[v - 1]) h = std::max(h, heights_[t - 1] + 1);
    heights_[v - 1] = h;
  }

  pics_.clear();
  for (int v = 1; v <= r; ++v)
    if (indeg[v - 1] == 0) pics_.push_back(v);

  holes_.clear();
  for (int v = 1; v <= r; ++v) {
    if (pred_[v - 1] != 0) continue;
    int below = 0;
    for (int u = 1; u <= r; ++u)
      if (u != v && reach_[u - 1][v - 1] &&
          pairing(system_, colors_[v - 1], colors_[u - 1]) != 0)
        ++below;
    if (below == 2) holes_.push_back(v);
  }

  virtual_hole_colors_.clear();
  std::vector<char> in_support(system_.rank + 1, 0);
  for (int c : colors_) in_support[c] = 1;
  for (int b = 1; b <= system_.rank; ++b) {
    if (in_support[b]) continue;
    bool touches = false;
    for (int c = 1; c <= system_.rank && !touches; ++c)
      if (in_support[c] && dynkin_adjacent(system_, b, c)) touches = true;
    if (touches) virtual_hole_colors_.push_back(b);
  }
}

void Quiver::check_axioms(bool coset_validated) const {
  int r = size();
  if (r == 0) return;
  std::vector<int> outdeg(r, 0);
  for (auto [a, b] : arrows_) {
    ++outdeg[a - 1];
    if (pairing(system_, colors_[a - 1], colors_[b - 1]) != -1)
      throw std::logic_error("arrow with pairing != -1");
  }
  for (int v = 1; v <= r; ++v) {
    bool has_succ = succ_[v - 1] != 0;
    if (v == r) {
      if (outdeg[v - 1] != 0) throw std::logic_error("arrow leaving the last vertex");
    } else if (!has_succ) {
      if (outdeg[v - 1] != 1)
        throw std::logic_error("vertex without successor must have one arrow");
    } else {
      if (outdeg[v - 1] != 2)
        throw std::logic_error("vertex with successor must have two arrows");
    }
    if (!reach_[v - 1][r - 1]) throw std::logic_error("vertex not connected to the sink");
  }
  if (coset_validated && colors_[r - 1] != weight_index_)
    throw std::logic_error("last letter color differs from the weight");
}

std::vector<int> Quiver::stabilizer_excluded_roots() const {
  std::vector<int> out;
  for (int h : holes_) out.push_back(colors_[h - 1]);
  out.insert(out.end(), virtual_hole_colors_.begin(), virtual_hole_colors_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> Quiver::support() const {
  std::vector<int> s = colors_;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

VertexAnnotations annotate(const Quiver& q) {
  return {q.heights(), q.pics(), q.holes(), q.virtual_hole_colors()};
}

std::vector<std::pair<int, int>> word_arrows(const RootSystemId& sys,
                                             const std::vector<int>& letters) {
  return arrows_of(sys, letters);
}

Quiver build_quiver(const CosetWord& word) { return Quiver::from_word(word); }

Quiver ambient_quiver(const RootSystemId& sys, int weight_index) {
  return Quiver::ambient_quiver(sys, weight_index);
}

std::vector<int> heights_by_longest_path(const Quiver& q) {
  int r = q.size();
  std::vector<std::vector<int>> out(r);
  for (auto [a, b] : q.arrows()) out[a - 1].push_back(b);
  std::vector<int> h(r, 0);
  for (int v = r; v >= 1; --v) {
    int best = 1;
    for (int t : out[v - 1]) best = std::max(best, h[t - 1] + 1);
    h[v - 1] = best;
  }
  return h;
}

// Recursion of the two height cases: a vertex without successor stacks on its
// unique arrow target; a vertex i with s(i) climbs the ladder of paired
// targets until the two colors split, giving h(i) = 2n + 2 + h(s(i)).
std::vector<int> heights_by_recursion(const Quiver& q) {
  int r = q.size();
  std::vector<std::vector<int>> out(r);
  for (auto [a, b] : q.arrows()) out[a - 1].push_back(b);
  std::vector<int> memo(r, 0);
  auto rec = [&](auto&& self, int v) -> int {
    if (memo[v - 1] != 0) return memo[v - 1];
    int result;
    if (out[v - 1].empty()) {
      result = 1;
    } else if (out[v - 1].size() == 1) {
      result = self(self, out[v - 1][0]) + 1;
    } else {
      int a = out[v - 1][0], b = out[v - 1][1];
      int n = 0;
      while (q.color(a) == q.color(b)) {
        int lower = std::min(a, b);
        if (out[lower - 1].size() != 2) throw std::logic_error("broken height ladder");
        a = out[lower - 1][0];
        b = out[lower - 1][1];
        ++n;
      }
      result = 2 * n + 2 + self(self, q.successor(v));
    }
    memo[v - 1] = result;
    return result;
  };
  std::vector<int> h(r);
  for (int v = 1; v <= r; ++v) h[v - 1] = rec(rec, v);
  return h;
}

bool is_antichain(const Quiver& ambient, const std::vector<int>& vertices) {
  for (int v : vertices)
    if (v < 1 || v > ambient.size()) throw std::invalid_argument("vertex id out of range");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      int a = vertices[i], b = vertices[j];
      if (a == b || ambient.leq(a, b) || ambient.leq(b, a)) return false;
    }
  return true;
}

Quiver schubert_from_antichain(const Quiver& ambient, const std::vector<int>& antichain) {
  if (!is_antichain(ambient, antichain))
    throw std::invalid_argument("not an antichain of the ambient quiver");
  int r = ambient.size();
  std::vector<char> removed(r + 1, 0);
  for (int a : antichain)
    for (int v = 1; v <= r; ++v)
      if (ambient.leq(v, a)) removed[v] = 1;
  std::vector<int> letters, ids;
  for (int v = 1; v <= r; ++v)
    if (!removed[v]) {
      letters.push_back(ambient.color(v));
      ids.push_back(v);
    }
  CosetWord word{ambient.system(), ambient.weight_index(), letters};
  auto check = validate_coset_word(word);
  if (!check.valid) throw std::logic_error("antichain subword failed validation");
  return Quiver::build(ambient.system(), ambient.weight_index(), std::move(letters),
                       std::move(ids), true);
}

namespace {

template <typename Fn>
void for_each_antichain(const Quiver& ambient, Fn&& fn) {
  std::vector<int> current;
  auto rec = [&](auto&& self, int next) -> void {
    fn(current);
    for (int v = next; v <= ambient.size(); ++v) {
      bool ok = true;
      for (int u : current)
        if (ambient.leq(u, v) || ambient.leq(v, u)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
}

}  // namespace

std::vector<Quiver> enumerate_schubert(const RootSystemId& sys, int weight_index) {
  Quiver ambient = Quiver::ambient_quiver(sys, weight_index);
  std::vector<Quiver> out;
  for_each_antichain(ambient, [&](const std::vector<int>& a) {
    out.push_back(schubert_from_antichain(ambient, a));
  });
  std::sort(out.begin(), out.end(), [](const Quiver& a, const Quiver& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.ambient_id_set() < b.ambient_id_set();
  });
  return out;
}

std::uint64_t count_schubert(const RootSystemId& sys, int weight_index) {
  Quiver ambient = Quiver::ambient_quiver(sys, weight_index);
  std::uint64_t n = 0;
  for_each_antichain(ambient, [&](const std::vector<int>&) { ++n; });
  return n;
}

bool bruhat_leq(const Quiver& a, const Quiver& b) {
  if (!(a.system() == b.system()) || a.weight_index() != b.weight_index() ||
      !a.has_ambient() || !b.has_ambient())
    throw std::invalid_argument("bruhat_leq requires quivers embedded in the same ambient");
  return std::includes(b.ambient_id_set().begin(), b.ambient_id_set().end(),
                       a.ambient_id_set().begin(), a.ambient_id_set().end());
}

std::vector<std::pair<int, int>> hole_antichain_map(const Quiver& ambient, const Quiver& q) {
  if (!q.has_ambient())
    throw std::invalid_argument("hole_antichain_map requires an ambient-embedded quiver");
  std::vector<char> kept(ambient.size() + 1, 0);
  for (int id : q.ambient_id_set()) kept[id] = 1;
  std::vector<std::pair<int, int>> out;
  for (int hole : q.holes()) {
    int ambient_id = q.ambient_ids()[hole - 1];
    int element = ambient.predecessor(ambient_id);
    if (element == 0 || kept[element])
      throw std::logic_error("hole has no removed ambient predecessor");
    out.emplace_back(hole, element);
  }
  return out;
}

int dimension(const Quiver& q) { return q.size(); }

int codimension_in(const Quiver& super, const Quiver& sub) {
  if (!bruhat_leq(sub, super))
    throw std::invalid_argument("codimension_in requires sub <= super in the Bruhat order");
  return super.size() - sub.size();
}

nlohmann::ordered_json Quiver::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = to_string(system_.family);
  j["rank"] = system_.rank;
  j["weight"] = weight_index_;
  j["vertices"] = nlohmann::ordered_json::array();
  for (int v = 1; v <= size(); ++v)
    j["vertices"].push_back({{"id", v}, {"color", colors_[v - 1]}});
  j["arrows"] = nlohmann::ordered_json::array();
  for (auto [a, b] : arrows_) j["arrows"].push_back({a, b});
  return j;
}

Quiver Quiver::from_json(const nlohmann::json& j) {
  RootSystemId sys = parse_system(j.at("family").get<std::string>(), j.at("rank").get<int>());
  int weight = j.at("weight").get<int>();
  std::vector<int> letters(j.at("vertices").size(), 0);
  for (const auto& v : j.at("vertices")) {
    int id = v.at("id").get<int>();
    if (id < 1 || id > static_cast<int>(letters.size()))
      throw std::invalid_argument("vertex id out of range in JSON quiver");
    letters[id - 1] = v.at("color").get<int>();
  }
  Quiver q = from_word(CosetWord{sys, weight, letters});
  if (q.letters() != letters)
    throw std::invalid_argument("JSON quiver is not in canonical vertex order");
  std::vector<std::pair<int, int>> arrows;
  for (const auto& a : j.at("arrows"))
    arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
  std::sort(arrows.begin(), arrows.end());
  if (arrows != q.arrows_) throw std::invalid_argument("JSON arrows do not match the word");
  return q;
}

std::string Quiver::to_dot() const {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int v = 1; v <= size(); ++v)
    os << "  " << v << " [label=\"" << v << ":α" << colors_[v - 1] << "\"];\n";
  for (auto [a, b] : arrows_) os << "  " << a << " -> " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace minq
