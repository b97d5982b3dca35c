#pragma once

#include "minq/coset_word.hpp"
#include "minq/root_system.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minq {

// Colored quiver of a reduced writing. Vertices are numbered 1..r in the
// canonical order (greedy topological sort, smallest color first); arrows
// (i, j) always have i < j. Instances are immutable; heights, pics and holes
// are computed once at construction.
class Quiver {
 public:
  // Validates the word, then canonicalizes. Throws std::invalid_argument on
  // an invalid word (message carries the failing position).
  static Quiver from_word(const CosetWord& word);

  // Quiver of the full homogeneous space G/P_varpi.
  static Quiver ambient_quiver(const RootSystemId& sys, int weight_index);

  // Builds from raw letters checking only the structural quiver axioms, not
  // the coset walk. Used for subquivers arising as decomposition factors,
  // whose words are minuscule for a sub-root-system.
  static Quiver from_letters(const RootSystemId& sys, std::vector<int> letters);

  const RootSystemId& system() const { return system_; }
  int weight_index() const { return weight_index_; }

  int size() const { return static_cast<int>(colors_.size()); }
  bool empty() const { return colors_.empty(); }
  int dimension() const { return size(); }

  int color(int v) const { return colors_[v - 1]; }
  const std::vector<int>& letters() const { return colors_; }
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }

  // Successor/predecessor of a vertex within the word (0 when absent).
  int successor(int v) const { return succ_[v - 1]; }
  int predecessor(int v) const { return pred_[v - 1]; }

  // a <= b in the partial order generated by the arrows.
  bool leq(int a, int b) const { return reach_[a - 1][b - 1] != 0; }

  int height(int v) const { return heights_[v - 1]; }
  const std::vector<int>& heights() const { return heights_; }
  const std::vector<int>& pics() const { return pics_; }
  const std::vector<int>& holes() const { return holes_; }
  const std::vector<int>& virtual_hole_colors() const { return virtual_hole_colors_; }

  // Colors of holes and virtual holes; the stabilizer of X(w) is the
  // parabolic on the complementary simple roots.
  std::vector<int> stabilizer_excluded_roots() const;

  // Distinct colors, sorted.
  std::vector<int> support() const;

  const CosetWord& word() const { return word_; }

  // Ambient vertex id per canonical vertex, when this quiver was carved out
  // of an ambient quiver; empty otherwise.
  const std::vector<int>& ambient_ids() const { return ambient_ids_; }
  // The same ids as a sorted set.
  const std::vector<int>& ambient_id_set() const { return ambient_id_set_; }
  bool has_ambient() const { return has_ambient_; }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.system_ == b.system_ && a.weight_index_ == b.weight_index_ &&
           a.colors_ == b.colors_;
  }

  nlohmann::ordered_json to_json() const;
  static Quiver from_json(const nlohmann::json& j);
  std::string to_dot() const;

 private:
  friend Quiver schubert_from_antichain(const Quiver&, const std::vector<int>&);

  Quiver() = default;
  static Quiver build(const RootSystemId& sys, int weight_index, std::vector<int> letters,
                      std::optional<std::vector<int>> ambient_ids, bool coset_validated);
  void annotate();
  void check_axioms(bool coset_validated) const;

  RootSystemId system_;
  int weight_index_ = 0;
  CosetWord word_;
  std::vector<int> colors_;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<int> succ_, pred_;
  std::vector<std::vector<char>> reach_;
  std::vector<int> heights_;
  std::vector<int> pics_;
  std::vector<int> holes_;
  std::vector<int> virtual_hole_colors_;
  std::vector<int> ambient_ids_;
  std::vector<int> ambient_id_set_;
  bool has_ambient_ = false;
};

// Annotation bundle (copies of the cached quiver data).
struct VertexAnnotations {
  std::vector<int> heights;
  std::vector<int> pics;
  std::vector<int> holes;
  std::vector<int> virtual_hole_colors;
};

VertexAnnotations annotate(const Quiver& q);

// Arrow rule applied to a raw letter sequence (1-based positions).
std::vector<std::pair<int, int>> word_arrows(const RootSystemId& sys,
                                             const std::vector<int>& letters);

Quiver build_quiver(const CosetWord& word);
Quiver ambient_quiver(const RootSystemId& sys, int weight_index);

// Heights recomputed two ways, exposed for consistency tests.
std::vector<int> heights_by_longest_path(const Quiver& q);
std::vector<int> heights_by_recursion(const Quiver& q);

bool is_antichain(const Quiver& ambient, const std::vector<int>& vertices);

// Subquiver on the vertices not below any element of the antichain A;
// A = {} gives the ambient quiver back, A = {r} the empty quiver.
Quiver schubert_from_antichain(const Quiver& ambient, const std::vector<int>& antichain);

// One quiver per antichain of the ambient quiver, sorted by dimension
// descending then lexicographic ambient vertex set.
std::vector<Quiver> enumerate_schubert(const RootSystemId& sys, int weight_index);

// Number of antichains of the ambient quiver, without materializing.
std::uint64_t count_schubert(const RootSystemId& sys, int weight_index);

// Inclusion of ambient vertex sets. Both quivers must carry ambient data for
// the same ambient.
bool bruhat_leq(const Quiver& a, const Quiver& b);

// The defining antichain of a carved subquiver is recovered hole by hole:
// each hole is the ambient successor of the antichain element of its color.
// Returns (canonical hole id in q, ambient id of the antichain element).
std::vector<std::pair<int, int>> hole_antichain_map(const Quiver& ambient, const Quiver& q);

int dimension(const Quiver& q);
// Codimension of sub inside super; requires bruhat_leq(sub, super).
int codimension_in(const Quiver& super, const Quiver& sub);

}  // namespace minq
