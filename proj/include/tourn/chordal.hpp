#pragma once

// Chordal graph toolkit: maximum cardinality search, perfect elimination
// orderings with hole certificates, clique trees, maximum weight cliques and
// the weighted centroid bag of a clique tree.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "tourn/detail/bitset.hpp"
#include "tourn/graph.hpp"

namespace tourn {

using Weight = std::int64_t;

/// Bags plus the tree over bag indices (adjacency lists, ascending).
struct TreeDecomposition {
  std::vector<VertexList> bags;
  std::vector<VertexList> tree;
};

struct ChordalityResult {
  bool chordal = false;
  VertexList peo;   // reverse MCS order; a perfect elimination ordering iff chordal
  VertexList hole;  // induced cycle of length >= 4 when !chordal, in cycle order
};

/// Thrown by routines that need a chordal graph; carries a hole certificate.
class NonChordalError : public InvalidArgument {
 public:
  NonChordalError(const std::string& what, VertexList hole)
      : InvalidArgument(what), hole_(std::move(hole)) {}
  const VertexList& hole() const { return hole_; }

 private:
  VertexList hole_;
};

/// Maximum cardinality search. Picks, at each step, the unvisited vertex with
/// the most visited neighbours; ties go to the smallest id. Returns the visit order.
inline VertexList mcs_order(const UndirectedGraph& g) {
  const int n = g.size();
  std::vector<int> label(n, 0);
  std::vector<std::uint8_t> visited(n, 0);
  VertexList order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (int v = 0; v < n; ++v)
      if (!visited[v] && (pick < 0 || label[v] > label[pick])) pick = v;
    visited[pick] = 1;
    order.push_back(pick);
    for (int u = 0; u < n; ++u)
      if (!visited[u] && g.has_edge(pick, u)) ++label[u];
  }
  return order;
}

/// Connected components of `g` after deleting the vertices flagged in `removed`.
/// Components come out ordered by their smallest vertex; each is ascending.
inline std::vector<VertexList> components_excluding(const std::vector<VertexList>& adj,
                                                    const std::vector<std::uint8_t>& removed) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> seen(n, 0);
  std::vector<VertexList> comps;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || seen[s]) continue;
    VertexList comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex u : adj[comp[head]])
        if (!removed[u] && !seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace detail {

// Shortest path u ~> w avoiding N[v] except u and w. With u, w non-adjacent
// neighbours of v, prepending v yields an induced cycle of length >= 4.
inline std::optional<VertexList> hole_through(const UndirectedGraph& g, const std::vector<VertexList>& adj,
                                              Vertex v, Vertex u, Vertex w) {
  const int n = g.size();
  std::vector<int> parent(n, -2);
  std::vector<std::uint8_t> blocked(n, 0);
  blocked[v] = 1;
  for (Vertex x : adj[v])
    if (x != u && x != w) blocked[x] = 1;
  std::queue<Vertex> q;
  q.push(u);
  parent[u] = -1;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    if (x == w) break;
    for (Vertex y : adj[x])
      if (!blocked[y] && parent[y] == -2) {
        parent[y] = x;
        q.push(y);
      }
  }
  if (parent[w] == -2) return std::nullopt;
  VertexList path;
  for (Vertex x = w; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  VertexList cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

inline VertexList find_any_hole(const UndirectedGraph& g, const std::vector<VertexList>& adj) {
  for (int v = 0; v < g.size(); ++v)
    for (std::size_t i = 0; i < adj[v].size(); ++i)
      for (std::size_t j = i + 1; j < adj[v].size(); ++j) {
        Vertex u = adj[v][i], w = adj[v][j];
        if (g.has_edge(u, w)) continue;
        if (auto h = hole_through(g, adj, v, u, w)) return *h;
      }
  return {};
}

}  // namespace detail

/// Chordality test: the reverse MCS order is checked as a perfect elimination
/// ordering. On failure an induced cycle of length >= 4 is returned.
inline ChordalityResult is_chordal(const UndirectedGraph& g) {
  const int n = g.size();
  ChordalityResult res;
  res.peo = mcs_order(g);
  std::reverse(res.peo.begin(), res.peo.end());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[res.peo[i]] = i;
  const auto adj = g.adjacency_lists();

  for (Vertex v : res.peo) {
    Vertex parent = -1;
    for (Vertex u : adj[v])
      if (pos[u] > pos[v] && (parent < 0 || pos[u] < pos[parent])) parent = u;
    if (parent < 0) continue;
    for (Vertex u : adj[v]) {
      if (pos[u] <= pos[v] || u == parent || g.has_edge(parent, u)) continue;
      res.chordal = false;
      if (auto h = detail::hole_through(g, adj, v, parent, u))
        res.hole = std::move(*h);
      else
        res.hole = detail::find_any_hole(g, adj);
      return res;
    }
  }
  res.chordal = true;
  return res;
}

/// Checks the tree decomposition axioms. With `clique_tree` set, also checks
/// that the bags are exactly the (distinct) maximal cliques. Returns a
/// description of the first violation, or nullopt.
inline std::optional<std::string> check_tree_decomposition(const UndirectedGraph& g,
                                                           const TreeDecomposition& td,
                                                           bool clique_tree) {
  const int n = g.size();
  const int k = static_cast<int>(td.bags.size());
  if (static_cast<int>(td.tree.size()) != k) return "tree and bag counts differ";
  if (n > 0 && k == 0) return "no bags";
  std::size_t deg_sum = 0;
  for (int i = 0; i < k; ++i)
    for (int j : td.tree[i]) {
      if (j < 0 || j >= k || j == i) return "tree edge out of range";
      if (std::find(td.tree[j].begin(), td.tree[j].end(), i) == td.tree[j].end()) return "tree not symmetric";
      ++deg_sum;
    }
  if (k > 0 && deg_sum != 2 * static_cast<std::size_t>(k - 1)) return "tree has wrong edge count";
  if (k > 0) {
    std::vector<std::uint8_t> seen(k, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      for (int c : td.tree[b])
        if (!seen[c]) {
          seen[c] = 1;
          ++reached;
          stack.push_back(c);
        }
    }
    if (reached != k) return "tree is disconnected";
  }

  std::vector<detail::Bitset> member(k, detail::Bitset(static_cast<std::size_t>(n)));
  for (int b = 0; b < k; ++b)
    for (Vertex v : td.bags[b]) {
      if (v < 0 || v >= n) return "bag vertex out of range";
      member[b].set(static_cast<std::size_t>(v));
    }
  for (int v = 0; v < n; ++v) {
    std::vector<int> holding;
    for (int b = 0; b < k; ++b)
      if (member[b].test(v)) holding.push_back(b);
    if (holding.empty()) return "vertex " + std::to_string(v) + " in no bag";
    // Bags containing v must induce a connected subtree.
    std::vector<std::uint8_t> seen(k, 0);
    std::vector<int> stack{holding.front()};
    seen[holding.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      for (int c : td.tree[b])
        if (!seen[c] && member[c].test(v)) {
          seen[c] = 1;
          ++reached;
          stack.push_back(c);
        }
    }
    if (reached != holding.size()) return "bags of vertex " + std::to_string(v) + " not connected";
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      bool covered = false;
      for (int b = 0; b < k && !covered; ++b) covered = member[b].test(u) && member[b].test(v);
      if (!covered) return "edge {" + std::to_string(u) + "," + std::to_string(v) + "} in no bag";
    }
  if (clique_tree) {
    for (int b = 0; b < k; ++b) {
      const auto& bag = td.bags[b];
      for (std::size_t i = 0; i < bag.size(); ++i)
        for (std::size_t j = i + 1; j < bag.size(); ++j)
          if (!g.has_edge(bag[i], bag[j])) return "bag " + std::to_string(b) + " is not a clique";
      for (int x = 0; x < n; ++x) {
        if (member[b].test(x)) continue;
        bool all = true;
        for (Vertex y : bag) all = all && g.has_edge(x, y);
        if (all) return "bag " + std::to_string(b) + " is not a maximal clique";
      }
      for (int c = b + 1; c < k; ++c)
        if (member[b] == member[c]) return "duplicate bag";
    }
  }
  return std::nullopt;
}

namespace detail {

inline ChordalityResult require_chordal(const UndirectedGraph& g, const char* who) {
  auto res = is_chordal(g);
  if (!res.chordal) throw NonChordalError(std::string(who) + ": graph is not chordal", res.hole);
  return res;
}

// Candidate cliques {v} + later neighbours of v for v along the PEO.
inline std::vector<VertexList> peo_cliques(const UndirectedGraph& g, const VertexList& peo) {
  const int n = g.size();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  std::vector<VertexList> cliques;
  cliques.reserve(static_cast<std::size_t>(n));
  for (Vertex v : peo) {
    VertexList c{v};
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v]) c.push_back(u);
    std::sort(c.begin(), c.end());
    cliques.push_back(std::move(c));
  }
  return cliques;
}

}  // namespace detail

/// Clique tree of a chordal graph. Bags are the maximal cliques sorted
/// lexicographically; the tree is a maximum-weight spanning tree of the clique
/// intersection graph (Kruskal, ties by bag index pair). Disconnected graphs get
/// zero-weight links between their pieces, which keeps every axiom intact.
inline TreeDecomposition clique_tree(const UndirectedGraph& g) {
  const int n = g.size();
  const auto chordal = detail::require_chordal(g, "clique_tree");
  auto cand = detail::peo_cliques(g, chordal.peo);

  std::vector<detail::Bitset> sets;
  sets.reserve(cand.size());
  for (const auto& c : cand) {
    detail::Bitset b(static_cast<std::size_t>(n));
    for (Vertex v : c) b.set(static_cast<std::size_t>(v));
    sets.push_back(std::move(b));
  }
  TreeDecomposition td;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cand.size() && maximal; ++j)
      if (i != j && cand[j].size() > cand[i].size() && (sets[i] & sets[j]) == sets[i]) maximal = false;
    if (maximal) td.bags.push_back(cand[i]);
  }
  std::sort(td.bags.begin(), td.bags.end());

  const int k = static_cast<int>(td.bags.size());
  std::vector<detail::Bitset> bagset(k, detail::Bitset(static_cast<std::size_t>(n)));
  for (int b = 0; b < k; ++b)
    for (Vertex v : td.bags[b]) bagset[b].set(static_cast<std::size_t>(v));
  std::vector<std::tuple<std::size_t, int, int>> edges;  // (weight, i, j)
  edges.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k > 0 ? k - 1 : 0) / 2);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back((bagset[i] & bagset[j]).count(), i, j);
  std::stable_sort(edges.begin(), edges.end(),
                   [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });

  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  td.tree.assign(k, {});
  int joined = 0;
  for (const auto& [w, i, j] : edges) {
    if (joined == k - 1) break;
    int a = find(i), b = find(j);
    if (a == b) continue;
    parent[a] = b;
    td.tree[i].push_back(j);
    td.tree[j].push_back(i);
    ++joined;
  }
  for (auto& nb : td.tree) std::sort(nb.begin(), nb.end());
  return td;
}

inline Weight set_weight(std::span<const Vertex> vs, std::span<const Weight> weights) {
  Weight w = 0;
  for (Vertex v : vs) w += weights[v];
  return w;
}

/// Maximum weight clique of a chordal graph. Scans the cliques
/// {v} + later-neighbours(v) along the PEO; ties go to the lexicographically
/// smallest (ascending) vertex list.
inline VertexList max_weight_clique_chordal(const UndirectedGraph& g, std::span<const Weight> weights) {
  if (weights.size() != static_cast<std::size_t>(g.size()))
    throw InvalidArgument("max_weight_clique_chordal: weight vector has wrong length");
  for (Weight w : weights)
    if (w < 0) throw InvalidArgument("max_weight_clique_chordal: negative weight");
  const auto chordal = detail::require_chordal(g, "max_weight_clique_chordal");
  VertexList best;
  Weight best_w = -1;
  for (auto& c : detail::peo_cliques(g, chordal.peo)) {
    Weight w = set_weight(c, weights);
    if (w > best_w || (w == best_w && c < best)) {
      best_w = w;
      best = std::move(c);
    }
  }
  return best;
}

/// Index of the first bag whose removal leaves only components of weight at
/// most half the total (compared as 2 * w <= W). Direct scan over all bags.
inline int centroid_bag(const UndirectedGraph& g, const TreeDecomposition& td, std::span<const Weight> weights) {
  const int n = g.size();
  if (weights.size() != static_cast<std::size_t>(n))
    throw InvalidArgument("centroid_bag: weight vector has wrong length");
  Weight total = 0;
  for (Weight w : weights) {
    if (w < 0) throw InvalidArgument("centroid_bag: negative weight");
    total += w;
  }
  if (total <= 0) throw InvalidArgument("centroid_bag: total weight must be positive");
  const auto adj = g.adjacency_lists();
  for (std::size_t b = 0; b < td.bags.size(); ++b) {
    std::vector<std::uint8_t> removed(n, 0);
    for (Vertex v : td.bags[b]) removed[v] = 1;
    bool ok = true;
    for (const auto& comp : components_excluding(adj, removed))
      if (2 * set_weight(comp, weights) > total) {
        ok = false;
        break;
      }
    if (ok) return static_cast<int>(b);
  }
  throw InternalInvariantError("centroid_bag: no bag splits the weight in half; decomposition is broken");
}

}  // namespace tourn
