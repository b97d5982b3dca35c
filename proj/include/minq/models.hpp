#pragma once

#include "minq/quiver.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace minq {

// Ordered partition of the pics; each A_i is a nonempty pic set and the
// blocks cover the pics exactly once.
struct PicPartition {
  std::vector<std::vector<int>> blocks;
};

// One connected factor Q_{w_i}; vertices and heights refer to the host
// quiver, the factor quiver carries its own canonical numbering.
struct DecompBlock {
  std::vector<int> vertices;  // host vertex ids, ascending
  std::vector<int> pics;      // host ids of the pics of this factor
  int max_vertex = 0;         // host id of the unique maximal vertex
  int height = 0;             // h(w_i) = max host height over the factor
  Quiver factor;              // the factor as a quiver in its own right
};

// Factors listed in morphism order; disconnected construction blocks are
// split into consecutive connected factors. f maps a factor to the factor
// holding the minimal block maximum above its own; n+1 is the sentinel with
// height -1.
struct Decomposition {
  std::vector<DecompBlock> blocks;
  std::vector<int> f;

  int block_count() const { return static_cast<int>(blocks.size()); }
  int f_height(int i) const {
    return f[i - 1] == block_count() + 1 ? -1 : blocks[f[i - 1] - 1].height;
  }
};

Decomposition decompose(const Quiver& q, const PicPartition& partition);

// Singleton partition induced by a pic order.
PicPartition partition_from_order(const std::vector<int>& order);

// The f-map criterion h(w_k) <= h(w_{f(k)}) for every non-final block; this
// is the minimal-model test.
bool is_minimal_order(const Quiver& q, const std::vector<int>& order);

// Both stated formulations. The adjacency form only constrains consecutive
// f-linked blocks and is weaker on single orders; the two agree across each
// isomorphism-swap class (see flop_graph).
struct MinimalityDiagnostics {
  bool by_f_map = false;
  bool by_adjacency = false;
};

MinimalityDiagnostics minimal_order_diagnostics(const Quiver& q,
                                                const std::vector<int>& order);

// All pic orders, lexicographic on canonical pic ids.
std::vector<std::vector<int>> all_pic_orders(const Quiver& q);
// The orders passing is_minimal_order; never empty (sorting the pics by
// nondecreasing height always qualifies).
std::vector<std::vector<int>> enumerate_minimal_orders(const Quiver& q);

// Blocks of pics grouped by strictly increasing height; the decomposition of
// this partition is the relative canonical model.
PicPartition canonical_partition(const Quiver& q);

// -K coefficients c_i = h(w_i) - h(w_{f(i)}) per block.
std::vector<int> relative_canonical(const Decomposition& d);

// Per-vertex discrepancy h(w_block(k)) - h(k); throws on a negative value.
std::vector<int> discrepancies(const Quiver& q, const Decomposition& d);

enum class SwapClass { Isomorphism, Flip, Flop };

std::string to_string(SwapClass c);

// Classifies the exchange of blocks k and k+1 of a pic order.
SwapClass classify_swap(const Quiver& q, const std::vector<int>& order, int k);

// Minimal orders grouped into isomorphism-swap classes (nodes) joined by
// flop swaps (edges).
struct FlopGraph {
  std::vector<std::vector<std::vector<int>>> nodes;  // each: sorted member orders
  std::vector<std::pair<int, int>> edges;            // 1-based node indices
  bool connected = false;
};

FlopGraph flop_graph(const Quiver& q);

// Unique pic whose color is a minuscule node of the sub-Dynkin diagram
// spanned by the quiver's colors.
bool is_variety_smooth(const Quiver& q);

// Minuscule nodes of the induced sub-diagram on `support` (each node judged
// within its connected component).
std::vector<int> minuscule_nodes_of_subdiagram(const RootSystemId& sys,
                                               const std::vector<int>& support);

// Every factor of the order's decomposition is a smooth-variety quiver.
bool is_smooth_model(const Quiver& q, const std::vector<int>& order);

struct IhSmallResult {
  bool admits = false;
  std::optional<std::vector<int>> witness;
};

// Searches the minimal orders for a smooth model.
IhSmallResult has_ih_small_resolution(const Quiver& q);

struct NonSmallWitness {
  int pic = 0;          // the violating pic i
  int f_pic = 0;        // the pic of the block f points to
  int join_vertex = 0;  // smallest vertex above both
  int codim = 0;        // h(i) - h(j) + h(f(i)) - h(j) + 1
  int fiber_lb = 0;     // h(i) - h(j)
};

// Witness that a non-minimal order cannot be IH-small; absent when the order
// is minimal. Checks codim <= 2 * fiber_lb.
std::optional<NonSmallWitness> non_small_witness(const Quiver& q,
                                                 const std::vector<int>& order);

struct ATypeCodim {
  long long gamma = 0;
  long long qterm = 0;
  bool ok = false;
};

// The A-type codimension identity Gamma(w', w) + q(w', w) = |Q_w| - |Q_{w'}|
// for a nested pair with compatible stabilizers inside an A-family ambient.
ATypeCodim a_type_codim_identity(const Quiver& ambient, const Quiver& q,
                                 const Quiver& sub);

// Whether the pair (sub, q) qualifies for the identity: nested, and every
// simple reflection moving sub up also moves q up (stability of X(w') under
// the stabilizer of X(w)).
bool a_type_pair_admissible(const Quiver& q, const Quiver& sub);

}  // namespace minq
