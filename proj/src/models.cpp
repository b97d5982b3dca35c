#include "minq/models.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace minq {

namespace {

void check_partition(const Quiver& q, const PicPartition& partition) {
  std::vector<int> seen;
  for (const auto& block : partition.blocks) {
    if (block.empty()) throw std::invalid_argument("empty pic block");
    for (int p : block) seen.push_back(p);
  }
  std::vector<int> pics = q.pics();
  std::sort(seen.begin(), seen.end());
  std::sort(pics.begin(), pics.end());
  if (seen != pics) throw std::invalid_argument("blocks do not partition the pics");
}

}  // namespace

PicPartition partition_from_order(const std::vector<int>& order) {
  PicPartition p;
  for (int pic : order) p.blocks.push_back({pic});
  return p;
}

Decomposition decompose(const Quiver& q, const PicPartition& partition) {
  check_partition(q, partition);
  int n_blocks = static_cast<int>(partition.blocks.size());

  // A vertex lives in the last block owning a pic below it.
  std::vector<int> block_of(q.size() + 1, 0);
  for (int v = 1; v <= q.size(); ++v) {
    for (int b = 1; b <= n_blocks; ++b)
      for (int p : partition.blocks[b - 1])
        if (q.leq(p, v)) block_of[v] = b;
    if (block_of[v] == 0) throw std::logic_error("vertex above no pic");
  }

  Decomposition d;
  for (int b = 1; b <= n_blocks; ++b) {
    std::vector<int> members;
    for (int v = 1; v <= q.size(); ++v)
      if (block_of[v] == b) members.push_back(v);
    if (members.empty()) throw std::logic_error("empty decomposition block");

    // Connected components of the block under its own recomputed arrows.
    std::vector<int> letters;
    for (int v : members) letters.push_back(q.color(v));
    auto local_arrows = word_arrows(q.system(), letters);
    int m = static_cast<int>(members.size());
    std::vector<int> comp(m);
    std::iota(comp.begin(), comp.end(), 0);
    auto root_of = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (auto [a, c] : local_arrows) comp[root_of(a - 1)] = root_of(c - 1);
    std::map<int, std::vector<int>> groups;  // keyed by smallest local index
    for (int i = 0; i < m; ++i) groups[root_of(i)].push_back(i);
    std::vector<std::vector<int>> comps;
    for (auto& [root, locals] : groups) comps.push_back(locals);
    std::sort(comps.begin(), comps.end(),
              [&](const auto& a, const auto& c) { return members[a[0]] < members[c[0]]; });

    std::vector<int> block_pics = partition.blocks[b - 1];
    std::sort(block_pics.begin(), block_pics.end());

    std::vector<int> seen_pics;
    for (const auto& locals : comps) {
      std::vector<int> verts, comp_letters, comp_pics;
      for (int i : locals) {
        verts.push_back(members[i]);
        comp_letters.push_back(letters[i]);
      }
      auto comp_arrows = word_arrows(q.system(), comp_letters);
      std::vector<int> outdeg(locals.size(), 0), indeg(locals.size(), 0);
      for (auto [a, c] : comp_arrows) {
        ++outdeg[a - 1];
        ++indeg[c - 1];
      }
      int sink = 0;
      for (std::size_t i = 0; i < locals.size(); ++i) {
        if (outdeg[i] == 0) {
          if (sink != 0) throw std::logic_error("decomposition factor has two maxima");
          sink = static_cast<int>(i) + 1;
        }
        if (indeg[i] == 0) comp_pics.push_back(verts[i]);
      }
      if (sink == 0) throw std::logic_error("decomposition factor has no maximum");
      int height = 0;
      for (int v : verts) height = std::max(height, q.height(v));
      for (int p : comp_pics) seen_pics.push_back(p);
      d.blocks.push_back(DecompBlock{verts, comp_pics, verts[sink - 1], height,
                                     Quiver::from_letters(q.system(), comp_letters)});
    }
    std::sort(seen_pics.begin(), seen_pics.end());
    if (seen_pics != block_pics)
      throw std::logic_error("factor pics differ from the block's pic set");
  }

  int n = d.block_count();
  d.f.assign(n, 0);
  for (int b = 1; b <= n; ++b) {
    int mb = d.blocks[b - 1].max_vertex;
    std::vector<int> candidates;
    for (int c = 1; c <= n; ++c) {
      int mc = d.blocks[c - 1].max_vertex;
      if (mc != mb && q.leq(mb, mc)) candidates.push_back(c);
    }
    if (candidates.empty()) {
      if (b != n) throw std::logic_error("sentinel block is not last");
      d.f[b - 1] = n + 1;
      continue;
    }
    int chosen = 0;
    for (int c : candidates) {
      bool minimal = true;
      for (int other : candidates)
        if (other != c &&
            q.leq(d.blocks[other - 1].max_vertex, d.blocks[c - 1].max_vertex))
          minimal = false;
      if (minimal) {
        if (chosen != 0) throw std::logic_error("f-map target is not unique");
        chosen = c;
      }
    }
    if (chosen <= b) throw std::logic_error("f-map points to an earlier block");
    d.f[b - 1] = chosen;
  }
  return d;
}

MinimalityDiagnostics minimal_order_diagnostics(const Quiver& q,
                                                const std::vector<int>& order) {
  Decomposition d = decompose(q, partition_from_order(order));
  if (d.block_count() != static_cast<int>(order.size()))
    throw std::logic_error("single-pic block split into components");
  MinimalityDiagnostics diag{true, true};
  for (int b = 1; b < d.block_count(); ++b) {
    int h = d.blocks[b - 1].height;
    if (h > d.f_height(b)) diag.by_f_map = false;
    if (d.f[b - 1] == b + 1 && h > d.blocks[b].height) diag.by_adjacency = false;
  }
  return diag;
}

bool is_minimal_order(const Quiver& q, const std::vector<int>& order) {
  return minimal_order_diagnostics(q, order).by_f_map;
}

std::vector<std::vector<int>> all_pic_orders(const Quiver& q) {
  std::vector<int> pics = q.pics();
  std::sort(pics.begin(), pics.end());
  std::vector<std::vector<int>> orders;
  if (pics.empty()) {
    orders.push_back({});
    return orders;
  }
  do orders.push_back(pics);
  while (std::next_permutation(pics.begin(), pics.end()));
  return orders;
}

std::vector<std::vector<int>> enumerate_minimal_orders(const Quiver& q) {
  std::vector<std::vector<int>> out;
  for (const auto& order : all_pic_orders(q))
    if (order.empty() || is_minimal_order(q, order)) out.push_back(order);
  if (out.empty()) throw std::logic_error("no minimal order found");
  return out;
}

PicPartition canonical_partition(const Quiver& q) {
  std::vector<int> pics = q.pics();
  std::sort(pics.begin(), pics.end(), [&](int a, int b) {
    if (q.height(a) != q.height(b)) return q.height(a) < q.height(b);
    return a < b;
  });
  PicPartition p;
  for (int pic : pics) {
    if (!p.blocks.empty() && q.height(p.blocks.back().front()) == q.height(pic))
      p.blocks.back().push_back(pic);
    else
      p.blocks.push_back({pic});
  }
  return p;
}

std::vector<int> relative_canonical(const Decomposition& d) {
  std::vector<int> c;
  for (int b = 1; b <= d.block_count(); ++b)
    c.push_back(d.blocks[b - 1].height - d.f_height(b));
  return c;
}

std::vector<int> discrepancies(const Quiver& q, const Decomposition& d) {
  std::vector<int> disc(q.size(), -1);
  for (const auto& block : d.blocks)
    for (int v : block.vertices) disc[v - 1] = block.height - q.height(v);
  for (int v = 1; v <= q.size(); ++v)
    if (disc[v - 1] < 0) throw std::logic_error("negative discrepancy");
  return disc;
}

std::string to_string(SwapClass c) {
  switch (c) {
    case SwapClass::Isomorphism: return "isomorphism";
    case SwapClass::Flip: return "flip";
    case SwapClass::Flop: return "flop";
  }
  return "?";
}

SwapClass classify_swap(const Quiver& q, const std::vector<int>& order, int k) {
  int n = static_cast<int>(order.size());
  if (k < 1 || k >= n) throw std::invalid_argument("swap position out of range");
  Decomposition d = decompose(q, partition_from_order(order));
  if (d.f[k - 1] != k + 1) return SwapClass::Isomorphism;
  return d.blocks[k - 1].height == d.blocks[k].height ? SwapClass::Flop : SwapClass::Flip;
}

FlopGraph flop_graph(const Quiver& q) {
  auto orders = enumerate_minimal_orders(q);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < orders.size(); ++i) index[orders[i]] = static_cast<int>(i);

  std::vector<int> dsu(orders.size());
  std::iota(dsu.begin(), dsu.end(), 0);
  auto root_of = [&](int x) {
    while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
    return x;
  };

  std::vector<std::pair<int, int>> flop_pairs;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const auto& order = orders[i];
    for (int k = 1; k < static_cast<int>(order.size()); ++k) {
      SwapClass cls = classify_swap(q, order, k);
      if (cls == SwapClass::Flip) continue;
      auto swapped = order;
      std::swap(swapped[k - 1], swapped[k]);
      auto it = index.find(swapped);
      if (it == index.end())
        throw std::logic_error("swap of a minimal order left the minimal set");
      if (cls == SwapClass::Isomorphism)
        dsu[root_of(static_cast<int>(i))] = root_of(it->second);
      else
        flop_pairs.emplace_back(static_cast<int>(i), it->second);
    }
  }

  std::map<int, std::vector<std::vector<int>>> classes;
  for (std::size_t i = 0; i < orders.size(); ++i)
    classes[root_of(static_cast<int>(i))].push_back(orders[i]);

  FlopGraph g;
  std::map<int, int> node_of_root;
  std::vector<std::pair<std::vector<int>, int>> reps;
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    reps.push_back({members.front(), root});
  }
  std::sort(reps.begin(), reps.end());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    node_of_root[reps[i].second] = static_cast<int>(i) + 1;
    g.nodes.push_back(classes[reps[i].second]);
  }

  std::set<std::pair<int, int>> edge_set;
  for (auto [a, b] : flop_pairs) {
    int na = node_of_root[root_of(a)], nb = node_of_root[root_of(b)];
    if (na == nb) throw std::logic_error("flop swap within one isomorphism class");
    edge_set.insert({std::min(na, nb), std::max(na, nb)});
  }
  g.edges.assign(edge_set.begin(), edge_set.end());

  std::vector<char> visited(g.nodes.size() + 1, 0);
  std::vector<int> stack{1};
  visited[1] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [a, b] : g.edges) {
      int other = a == v ? b : b == v ? a : 0;
      if (other != 0 && !visited[other]) {
        visited[other] = 1;
        stack.push_back(other);
      }
    }
  }
  g.connected = std::all_of(visited.begin() + 1, visited.end(), [](char c) { return c != 0; });
  return g;
}

std::vector<int> minuscule_nodes_of_subdiagram(const RootSystemId& sys,
                                               const std::vector<int>& support) {
  std::vector<int> nodes = support;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::map<int, std::vector<int>> adj;
  for (int a : nodes)
    for (int b : nodes)
      if (a != b && dynkin_adjacent(sys, a, b)) adj[a].push_back(b);

  std::vector<int> result;
  std::set<int> remaining(nodes.begin(), nodes.end());
  while (!remaining.empty()) {
    // Extract one connected component.
    std::vector<int> comp{*remaining.begin()};
    remaining.erase(remaining.begin());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int nb : adj[comp[i]])
        if (remaining.erase(nb)) comp.push_back(nb);
    std::sort(comp.begin(), comp.end());

    auto degree = [&](int v) {
      int d = 0;
      for (int nb : adj[v])
        if (std::binary_search(comp.begin(), comp.end(), nb)) ++d;
      return d;
    };
    std::vector<int> branch_nodes;
    for (int v : comp)
      if (degree(v) >= 3) branch_nodes.push_back(v);

    if (branch_nodes.empty()) {
      // Chain: every node is minuscule.
      result.insert(result.end(), comp.begin(), comp.end());
      continue;
    }
    if (branch_nodes.size() > 1 || degree(branch_nodes[0]) > 3)
      throw std::logic_error("support is not a sub-diagram of an ADE diagram");

    int center = branch_nodes[0];
    // Walk each branch to its tip.
    std::vector<std::pair<int, int>> branches;  // (length, tip)
    for (int nb : adj[center]) {
      if (!std::binary_search(comp.begin(), comp.end(), nb)) continue;
      int prev = center, cur = nb, len = 1;
      for (;;) {
        int next = 0;
        for (int cand : adj[cur])
          if (cand != prev && std::binary_search(comp.begin(), comp.end(), cand)) next = cand;
        if (next == 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      branches.push_back({len, cur});
    }
    std::sort(branches.rbegin(), branches.rend());
    int l1 = branches[0].first, l2 = branches[1].first, l3 = branches[2].first;
    if (l3 != 1 || l2 > 2) throw std::logic_error("support is not a sub-diagram of an ADE diagram");
    if (l2 == 1) {
      // D-shape: the long tail end and the two short tips.
      result.push_back(branches[0].second);
      result.push_back(branches[1].second);
      result.push_back(branches[2].second);
    } else if (l1 == 2) {
      // E6-shape: ends of the two long branches.
      result.push_back(branches[0].second);
      result.push_back(branches[1].second);
    } else if (l1 == 3) {
      // E7-shape: end of the longest branch.
      result.push_back(branches[0].second);
    }
    // E8-shape (l1 >= 4): nothing.
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_variety_smooth(const Quiver& q) {
  if (q.empty()) return true;
  if (q.pics().size() != 1) return false;
  int color = q.color(q.pics().front());
  auto nodes = minuscule_nodes_of_subdiagram(q.system(), q.support());
  return std::binary_search(nodes.begin(), nodes.end(), color);
}

bool is_smooth_model(const Quiver& q, const std::vector<int>& order) {
  if (q.empty()) return true;
  Decomposition d = decompose(q, partition_from_order(order));
  for (const auto& block : d.blocks)
    if (!is_variety_smooth(block.factor)) return false;
  return true;
}

IhSmallResult has_ih_small_resolution(const Quiver& q) {
  if (q.empty()) return {true, std::vector<int>{}};
  for (const auto& order : enumerate_minimal_orders(q))
    if (is_smooth_model(q, order)) return {true, order};
  return {false, std::nullopt};
}

std::optional<NonSmallWitness> non_small_witness(const Quiver& q,
                                                 const std::vector<int>& order) {
  if (q.empty()) return std::nullopt;
  Decomposition d = decompose(q, partition_from_order(order));
  for (int b = 1; b < d.block_count(); ++b) {
    if (d.blocks[b - 1].height <= d.f_height(b)) continue;
    NonSmallWitness w;
    w.pic = d.blocks[b - 1].pics.front();
    w.f_pic = d.blocks[d.f[b - 1] - 1].pics.front();
    std::vector<int> uppers;
    for (int v = 1; v <= q.size(); ++v)
      if (q.leq(w.pic, v) && q.leq(w.f_pic, v)) uppers.push_back(v);
    int join = 0;
    for (int v : uppers) {
      bool minimal = true;
      for (int u : uppers)
        if (u != v && q.leq(u, v)) minimal = false;
      if (minimal) {
        if (join != 0) throw std::logic_error("join of two pics is not unique");
        join = v;
      }
    }
    if (join == 0) throw std::logic_error("pics have no common upper bound");
    w.join_vertex = join;
    int hi = q.height(w.pic), hf = q.height(w.f_pic), hj = q.height(join);
    w.codim = hi - hj + hf - hj + 1;
    w.fiber_lb = hi - hj;
    if (w.codim > 2 * w.fiber_lb)
      throw std::logic_error("non-smallness inequality failed");
    return w;
  }
  return std::nullopt;
}

bool a_type_pair_admissible(const Quiver& q, const Quiver& sub) {
  if (!bruhat_leq(sub, q)) return false;
  auto dq = walk_descent_colors(q.word());
  auto ds = walk_descent_colors(sub.word());
  return std::includes(dq.begin(), dq.end(), ds.begin(), ds.end());
}

ATypeCodim a_type_codim_identity(const Quiver& ambient, const Quiver& q,
                                 const Quiver& sub) {
  if (ambient.system().family != Family::A)
    throw std::invalid_argument("codimension identity requires an A-family ambient");
  if (!bruhat_leq(q, ambient) || !bruhat_leq(sub, q))
    throw std::invalid_argument("quivers are not nested in the ambient");
  if (!a_type_pair_admissible(q, sub))
    throw std::invalid_argument("subquiver holes exceed the quiver's holes");

  ATypeCodim result;
  if (q.empty()) {
    result.ok = true;
    return result;
  }

  std::vector<int> holes = q.holes();
  std::sort(holes.begin(), holes.end(),
            [&](int a, int b) { return q.color(a) < q.color(b); });
  std::vector<int> pics = q.pics();
  std::sort(pics.begin(), pics.end(),
            [&](int a, int b) { return q.color(a) < q.color(b); });
  int s = static_cast<int>(holes.size());
  if (static_cast<int>(pics.size()) != s + 1)
    throw std::logic_error("A-type quiver must have one more pic than holes");
  for (int i = 0; i < s; ++i)
    if (!(q.color(pics[i]) < q.color(holes[i]) && q.color(holes[i]) < q.color(pics[i + 1])))
      throw std::logic_error("pics and holes do not alternate by color");

  std::set<int> kept(sub.ambient_id_set().begin(), sub.ambient_id_set().end());
  std::vector<long long> depth(s + 2, 0);  // c_0 = c_{s+1} = 0
  for (int v = 1; v <= q.size(); ++v) {
    if (kept.count(q.ambient_ids()[v - 1])) continue;
    for (int i = 1; i <= s; ++i)
      if (q.color(v) == q.color(holes[i - 1])) ++depth[i];
  }

  long long twice_q = 0;
  for (int i = 1; i <= s + 1; ++i) {
    long long diff = depth[i] - depth[i - 1];
    twice_q += diff * diff;
  }
  if (twice_q % 2 != 0) throw std::logic_error("odd square sum in codimension identity");
  result.qterm = twice_q / 2;
  for (int i = 1; i <= s; ++i) {
    long long a = q.height(pics[i - 1]) - q.height(holes[i - 1]);
    long long b = q.height(pics[i]) - q.height(holes[i - 1]);
    result.gamma += depth[i] * (a + b);
  }
  result.ok = result.gamma + result.qterm == q.size() - sub.size();
  return result;
}

}  // namespace minq
