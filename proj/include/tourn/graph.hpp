#pragma once

// Dense graph types used throughout the library: tournaments, oriented
// digraphs (no 2-cycles) and simple undirected graphs, plus strongly
// connected components, condensation and bulk reachability.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tourn/detail/bitset.hpp"
#include "tourn/error.hpp"

namespace tourn {

using Vertex = int;
using VertexList = std::vector<Vertex>;

namespace detail {

inline void check_vertex(int n, Vertex v, const char* what) {
  if (v < 0 || v >= n)
    throw InvalidArgument(std::string(what) + ": vertex " + std::to_string(v) +
                          " out of range [0," + std::to_string(n) + ")");
}

// Throws if the lists contain out-of-range ids, repeat a vertex, or share one.
inline void check_disjoint(int n, std::span<const Vertex> a, std::span<const Vertex> b,
                           const char* what) {
  std::vector<std::uint8_t> mark(static_cast<std::size_t>(n), 0);
  for (Vertex v : a) {
    check_vertex(n, v, what);
    if (mark[v]) throw InvalidArgument(std::string(what) + ": repeated vertex " + std::to_string(v));
    mark[v] = 1;
  }
  for (Vertex v : b) {
    check_vertex(n, v, what);
    if (mark[v] == 1)
      throw InvalidArgument(std::string(what) + ": sets overlap at vertex " + std::to_string(v));
    if (mark[v] == 2) throw InvalidArgument(std::string(what) + ": repeated vertex " + std::to_string(v));
    mark[v] = 2;
  }
}

}  // namespace detail

/// Complete oriented graph. `beats(u, v)` means the edge is u->v.
class Tournament {
 public:
  Tournament() = default;

  /// Transitive tournament with i->j whenever i < j.
  static Tournament transitive(int n) {
    Tournament t(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) t.adj_[t.idx(i, j)] = 1;
    return t;
  }

  /// Builds from a row-major 0/1 matrix; rejects anything that is not a tournament.
  static Tournament from_matrix(int n, std::span<const std::uint8_t> m) {
    if (n < 0 || m.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
      throw InvalidArgument("tournament matrix has wrong dimensions");
    Tournament t(n);
    for (int i = 0; i < n; ++i) {
      if (m[t.idx(i, i)]) throw InvalidArgument("tournament has a loop at " + std::to_string(i));
      for (int j = i + 1; j < n; ++j) {
        const bool ij = m[t.idx(i, j)] != 0;
        const bool ji = m[t.idx(j, i)] != 0;
        if (ij == ji)
          throw InvalidArgument("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                ") must be oriented exactly once");
        t.adj_[ij ? t.idx(i, j) : t.idx(j, i)] = 1;
      }
    }
    return t;
  }

  int size() const { return n_; }
  bool beats(Vertex u, Vertex v) const { return adj_[idx(u, v)] != 0; }

  /// Re-orients the pair {u, v} as u->v.
  void orient(Vertex u, Vertex v) {
    detail::check_vertex(n_, u, "orient");
    detail::check_vertex(n_, v, "orient");
    if (u == v) throw InvalidArgument("orient: loop");
    adj_[idx(u, v)] = 1;
    adj_[idx(v, u)] = 0;
  }

  int out_degree(Vertex v) const {
    int d = 0;
    for (int j = 0; j < n_; ++j) d += adj_[idx(v, j)];
    return d;
  }

  VertexList out_neighbors(Vertex v) const {
    VertexList out;
    for (int j = 0; j < n_; ++j)
      if (adj_[idx(v, j)]) out.push_back(j);
    return out;
  }

  /// Subtournament induced on `vs`; vertex i of the result is vs[i].
  Tournament induced(std::span<const Vertex> vs) const {
    Tournament t(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (i != j && beats(vs[i], vs[j])) t.adj_[t.idx(static_cast<int>(i), static_cast<int>(j))] = 1;
    return t;
  }

  const std::vector<std::uint8_t>& matrix() const { return adj_; }

  bool operator==(const Tournament&) const = default;

 private:
  explicit Tournament(int n)
      : n_(n), adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Digraph with at most one direction per vertex pair and no loops.
class OrientedDigraph {
 public:
  OrientedDigraph() = default;
  explicit OrientedDigraph(int n)
      : n_(n), adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n < 0) throw InvalidArgument("negative vertex count");
  }

  static OrientedDigraph from_matrix(int n, std::span<const std::uint8_t> m) {
    if (n < 0 || m.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
      throw InvalidArgument("digraph matrix has wrong dimensions");
    OrientedDigraph d(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m[d.idx(i, j)]) d.add_edge(i, j);
    return d;
  }

  int size() const { return n_; }

  /// Adds u->v. Loops and 2-cycles are rejected.
  void add_edge(Vertex u, Vertex v) {
    detail::check_vertex(n_, u, "add_edge");
    detail::check_vertex(n_, v, "add_edge");
    if (u == v) throw InvalidArgument("add_edge: loop at " + std::to_string(u));
    if (adj_[idx(v, u)])
      throw InvalidArgument("add_edge: " + std::to_string(u) + "->" + std::to_string(v) +
                            " would create a 2-cycle");
    adj_[idx(u, v)] = 1;
  }
  void remove_edge(Vertex u, Vertex v) { adj_[idx(u, v)] = 0; }

  bool has_edge(Vertex u, Vertex v) const { return adj_[idx(u, v)] != 0; }
  bool adjacent(Vertex u, Vertex v) const { return has_edge(u, v) || has_edge(v, u); }

  VertexList out_neighbors(Vertex v) const {
    VertexList out;
    for (int j = 0; j < n_; ++j)
      if (adj_[idx(v, j)]) out.push_back(j);
    return out;
  }
  VertexList in_neighbors(Vertex v) const {
    VertexList in;
    for (int j = 0; j < n_; ++j)
      if (adj_[idx(j, v)]) in.push_back(j);
    return in;
  }

  std::size_t edge_count() const {
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), std::uint8_t{1}));
  }

  const std::vector<std::uint8_t>& matrix() const { return adj_; }

  bool operator==(const OrientedDigraph&) const = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Simple undirected graph, dense symmetric adjacency.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n)
      : n_(n), adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n < 0) throw InvalidArgument("negative vertex count");
  }

  int size() const { return n_; }

  void add_edge(Vertex u, Vertex v) {
    detail::check_vertex(n_, u, "add_edge");
    detail::check_vertex(n_, v, "add_edge");
    if (u == v) throw InvalidArgument("add_edge: loop at " + std::to_string(u));
    adj_[idx(u, v)] = 1;
    adj_[idx(v, u)] = 1;
  }

  bool has_edge(Vertex u, Vertex v) const { return adj_[idx(u, v)] != 0; }

  VertexList neighbors(Vertex v) const {
    VertexList nb;
    for (int j = 0; j < n_; ++j)
      if (adj_[idx(v, j)]) nb.push_back(j);
    return nb;
  }

  /// Neighbour lists for every vertex, ascending.
  std::vector<VertexList> adjacency_lists() const {
    std::vector<VertexList> lists(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) lists[v] = neighbors(v);
    return lists;
  }

  std::size_t edge_count() const {
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), std::uint8_t{1})) / 2;
  }

  bool operator==(const UndirectedGraph&) const = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Strongly connected components in topological order.
///
/// `components[i]` lists its vertices ascending; every quotient edge goes from a
/// lower to a higher component index; `weights[i] == components[i].size()`.
struct Condensation {
  std::vector<VertexList> components;
  OrientedDigraph quotient;
  std::vector<int> weights;
  std::vector<int> component_of;  // vertex -> component index
};

/// Tarjan's algorithm, then Kahn's topological sort over the quotient with ties
/// broken by the smallest vertex contained in each component.
inline Condensation scc_condensation(const OrientedDigraph& d) {
  const int n = d.size();
  std::vector<VertexList> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out[v] = d.out_neighbors(v);

  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0), raw_comp(n, -1);
  std::vector<std::uint8_t> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;
  int next_index = 0, raw_count = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < out[v].size()) {
        Vertex w = out[v][pos++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      Vertex done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw_comp[w] = raw_count;
        } while (w != done);
        ++raw_count;
      }
    }
  }

  std::vector<Vertex> min_vertex(raw_count, n);
  for (int v = n - 1; v >= 0; --v) min_vertex[raw_comp[v]] = v;

  std::vector<std::vector<std::uint8_t>> raw_edge(raw_count, std::vector<std::uint8_t>(raw_count, 0));
  std::vector<int> indeg(raw_count, 0);
  for (int v = 0; v < n; ++v)
    for (Vertex w : out[v]) {
      int a = raw_comp[v], b = raw_comp[w];
      if (a != b && !raw_edge[a][b]) {
        raw_edge[a][b] = 1;
        ++indeg[b];
      }
    }

  using Key = std::pair<Vertex, int>;  // (smallest vertex, raw component)
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  for (int c = 0; c < raw_count; ++c)
    if (indeg[c] == 0) ready.emplace(min_vertex[c], c);
  std::vector<int> rank(raw_count, -1);
  int next_rank = 0;
  while (!ready.empty()) {
    int c = ready.top().second;
    ready.pop();
    rank[c] = next_rank++;
    for (int b = 0; b < raw_count; ++b)
      if (raw_edge[c][b] && --indeg[b] == 0) ready.emplace(min_vertex[b], b);
  }

  Condensation cond;
  cond.components.assign(raw_count, {});
  cond.component_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int c = rank[raw_comp[v]];
    cond.component_of[v] = c;
    cond.components[c].push_back(v);
  }
  cond.weights.resize(raw_count);
  for (int c = 0; c < raw_count; ++c) cond.weights[c] = static_cast<int>(cond.components[c].size());
  cond.quotient = OrientedDigraph(raw_count);
  for (int a = 0; a < raw_count; ++a)
    for (int b = 0; b < raw_count; ++b)
      if (raw_edge[a][b]) cond.quotient.add_edge(rank[a], rank[b]);
  return cond;
}

/// True iff every vertex of `a` has a directed path to every vertex of `b`.
/// Vacuously true when either set is empty.
inline bool reaches_all(const OrientedDigraph& d, std::span<const Vertex> a, std::span<const Vertex> b) {
  detail::check_disjoint(d.size(), a, b, "reaches_all");
  if (a.empty() || b.empty()) return true;
  const Condensation cond = scc_condensation(d);
  const int m = static_cast<int>(cond.components.size());
  // reach[c] = components reachable from c (including c); quotient edges go forward.
  std::vector<detail::Bitset> reach(m, detail::Bitset(static_cast<std::size_t>(m)));
  for (int c = m - 1; c >= 0; --c) {
    reach[c].set(static_cast<std::size_t>(c));
    for (Vertex s : cond.quotient.out_neighbors(c)) reach[c] |= reach[s];
  }
  for (Vertex u : a)
    for (Vertex v : b)
      if (!reach[cond.component_of[u]].test(static_cast<std::size_t>(cond.component_of[v]))) return false;
  return true;
}

/// Underlying undirected graph (symmetric closure).
inline UndirectedGraph underlying(const OrientedDigraph& d) {
  UndirectedGraph g(d.size());
  for (int u = 0; u < d.size(); ++u)
    for (int v = 0; v < d.size(); ++v)
      if (d.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

}  // namespace tourn
