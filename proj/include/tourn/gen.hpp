#pragma once

// Deterministic generators. Every generator is a pure function of its
// parameters and seed.
//
// Stream layout: a generator draws from Rng(seed, kStream*) for its kind, and
// each sub-structure (a part of a substitution, a block, the noise of a block
// pair, the final relabelling) gets its own child stream with a fixed id.
// Adding a new generator or sub-structure therefore never shifts the numbers
// consumed by an existing one.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tourn/graph.hpp"
#include "tourn/rational.hpp"
#include "tourn/rng.hpp"
#include "tourn/structures.hpp"

namespace tourn {

enum class GenKind { kRandom, kC5Free, kPlantedBlocks, kOutsimplicial };

inline const char* to_string(GenKind k) {
  switch (k) {
    case GenKind::kRandom: return "random";
    case GenKind::kC5Free: return "c5free";
    case GenKind::kPlantedBlocks: return "planted";
    case GenKind::kOutsimplicial: return "outsimp";
  }
  return "?";
}

inline GenKind parse_gen_kind(std::string_view s) {
  for (auto k : {GenKind::kRandom, GenKind::kC5Free, GenKind::kPlantedBlocks, GenKind::kOutsimplicial})
    if (s == to_string(k)) return k;
  throw InvalidArgument("unknown generator kind '" + std::string(s) + "'");
}

/// Generator request as exposed on the command line.
struct GenSpec {
  GenKind kind = GenKind::kRandom;
  int n = 1;
  std::uint64_t seed = 0;
  int k = 5;              // planted: number of blocks
  Ratio c{1, 5};          // planted: block size ceil(c n)
  Ratio noise{0};         // planted: fraction of the per-vertex backward-edge budget used
  bool blowup = false;    // outsimp: substitute strongly connected pieces

  void validate() const {
    if (n < 1) throw InvalidArgument("n must be at least 1");
    if (noise < Ratio(0) || noise > Ratio(1)) throw InvalidArgument("noise must lie in [0, 1]");
    if (c < Ratio(0) || c > Ratio(1)) throw InvalidArgument("c must lie in [0, 1]");
  }
};

namespace streams {
inline constexpr std::uint64_t kRandom = 1;
inline constexpr std::uint64_t kC5Free = 2;
inline constexpr std::uint64_t kPlanted = 3;
inline constexpr std::uint64_t kOutsimplicial = 4;
}  // namespace streams

namespace detail {

inline Tournament coin_tournament(int n, Rng& rng) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng.coin())
        m[static_cast<std::size_t>(i) * n + j] = 1;
      else
        m[static_cast<std::size_t>(j) * n + i] = 1;
    }
  return Tournament::from_matrix(n, m);
}

inline Tournament relabel(const Tournament& t, const VertexList& perm) {
  const int n = t.size();
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && t.beats(u, v)) m[static_cast<std::size_t>(perm[u]) * n + perm[v]] = 1;
  return Tournament::from_matrix(n, m);
}

inline VertexList random_permutation(int n, Rng rng) {
  VertexList p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  rng.shuffle(p);
  return p;
}

}  // namespace detail

/// Each pair {i, j}, i < j, is oriented i -> j on a coin flip, in row-major order.
inline Tournament random_tournament(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("random_tournament: n must be at least 1");
  Rng rng(seed, streams::kRandom);
  return detail::coin_tournament(n, rng);
}

/// Replaces vertex i of `quotient` by `parts[i]`; edges between parts follow the quotient.
inline Tournament substitute(const Tournament& quotient, const std::vector<Tournament>& parts) {
  if (parts.size() != static_cast<std::size_t>(quotient.size()))
    throw InvalidArgument("substitute: need one part per quotient vertex");
  std::vector<int> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) offset[i + 1] = offset[i] + parts[i].size();
  const int n = offset.back();
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t q = 0; q < parts.size(); ++q)
      for (int a = 0; a < parts[p].size(); ++a)
        for (int b = 0; b < parts[q].size(); ++b) {
          const bool edge = p == q ? (a != b && parts[p].beats(a, b))
                                   : quotient.beats(static_cast<int>(p), static_cast<int>(q));
          if (edge) m[static_cast<std::size_t>(offset[p] + a) * n + offset[q] + b] = 1;
        }
  return Tournament::from_matrix(n, m);
}

namespace detail {

inline Tournament c5free(int n, const Rng& stream) {
  Rng rng = stream;
  if (n <= 4) return coin_tournament(n, rng);
  const int k = rng.between(2, 4);
  Rng quotient_rng = stream.child(0);
  const Tournament quotient = coin_tournament(k, quotient_rng);
  // k - 1 distinct cut points in [1, n - 1].
  VertexList cuts(static_cast<std::size_t>(n - 1));
  std::iota(cuts.begin(), cuts.end(), 1);
  for (int i = 0; i < k - 1; ++i) std::swap(cuts[i], cuts[i + rng.below(n - 1 - i)]);
  cuts.resize(static_cast<std::size_t>(k - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(n);
  std::vector<Tournament> parts;
  for (int i = 0; i < k; ++i) parts.push_back(c5free(cuts[i + 1] - cuts[i], stream.child(1 + i)));
  return substitute(quotient, parts);
}

}  // namespace detail

/// C5-free tournament by recursive substitution: a random quotient on 2-4
/// vertices (too small to contain C5) with C5-free parts. C5 has no
/// nontrivial homogeneous set, so a copy would have to sit inside one part or
/// use one vertex from each of five parts; neither is possible.
inline Tournament gen_c5free(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("gen_c5free: n must be at least 1");
  return detail::c5free(n, Rng(seed, streams::kC5Free));
}

struct PlantedInstance {
  Tournament tournament;
  SmoothStructure structure;
};

/// k blocks of ceil(c n) vertices, each an internally C5-free tournament, all
/// edges forward between blocks, then for every block pair a circulant set of
/// backward edges giving each vertex exactly floor(noise * floor(|S|/5))
/// wrong-way neighbours in the other block. Leftover vertices form one more
/// C5-free part at the end of the order and stay outside the structure.
/// Vertex labels are shuffled. The returned structure (lambda = 1/5) verifies.
inline PlantedInstance gen_planted_blocks(int n, int k, const Ratio& c, const Ratio& noise, std::uint64_t seed) {
  if (k < 1) throw InvalidArgument("gen_planted_blocks: k must be positive");
  if (!(c > Ratio(0) && c <= Ratio(1))) throw InvalidArgument("gen_planted_blocks: c must lie in (0, 1]");
  if (noise < Ratio(0) || noise > Ratio(1)) throw InvalidArgument("gen_planted_blocks: noise must lie in [0, 1]");
  const auto size = static_cast<int>(c.ceil_times(n));
  if (size < 1 || static_cast<std::int64_t>(k) * size > n)
    throw InvalidArgument("gen_planted_blocks: " + std::to_string(k) + " blocks of " + std::to_string(size) +
                          " do not fit in n = " + std::to_string(n));
  const Rng base(seed, streams::kPlanted);
  const int leftover = n - k * size;
  const int parts_count = k + (leftover > 0 ? 1 : 0);
  std::vector<Tournament> parts;
  for (int i = 0; i < k; ++i) parts.push_back(detail::c5free(size, base.child(i)));
  if (leftover > 0) parts.push_back(detail::c5free(leftover, base.child(k)));
  Tournament t = substitute(Tournament::transitive(parts_count), parts);

  auto block = [&](int i) {
    VertexList b(static_cast<std::size_t>(size));
    std::iota(b.begin(), b.end(), i * size);
    return b;
  };
  const Ratio lambda(1, 5);
  const auto flips = noise.floor_times(lambda.floor_times(size));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (flips == 0) continue;
      const Rng pair_rng = base.child(1000 + static_cast<std::uint64_t>(i) * 1000 + j);
      const VertexList pi = detail::random_permutation(size, pair_rng.child(0));
      const VertexList sigma = detail::random_permutation(size, pair_rng.child(1));
      const VertexList bi = block(i), bj = block(j);
      for (int a = 0; a < size; ++a)
        for (std::int64_t f = 0; f < flips; ++f) t.orient(bj[sigma[(a + f) % size]], bi[pi[a]]);
    }

  const VertexList perm = detail::random_permutation(n, base.child(999));
  PlantedInstance inst{detail::relabel(t, perm), SmoothStructure{StructureSpec{c, lambda, std::vector<int>(k, 0)}, {}}};
  for (int i = 0; i < k; ++i) {
    VertexList s;
    for (Vertex v : block(i)) s.push_back(perm[v]);
    std::sort(s.begin(), s.end());
    inst.structure.sets.push_back(std::move(s));
  }
  if (const auto r = verify_structure(inst.tournament, inst.structure, StructureMode::kSmooth); !r.pass)
    throw InternalInvariantError("gen_planted_blocks: planted structure fails to verify: " + r.message);
  return inst;
}

namespace detail {

// Random chordal graph on vertices 0..m-1 grown along a clique tree: each new
// vertex attaches to a subset of an existing maximal clique (or, rarely, to
// nothing). Earlier neighbours of every vertex form a clique.
inline UndirectedGraph random_chordal(int m, Rng& rng) {
  UndirectedGraph g(m);
  if (m == 0) return g;
  constexpr std::size_t kMaxClique = 8;
  std::vector<VertexList> cliques{{0}};
  for (int v = 1; v < m; ++v) {
    if (rng.below(10) == 0) {
      cliques.push_back({v});
      continue;
    }
    const std::size_t pick = rng.below(static_cast<std::uint64_t>(cliques.size()));
    VertexList base = cliques[pick];
    rng.shuffle(base);
    std::size_t take = 1 + rng.below(static_cast<std::uint64_t>(base.size()));
    if (take == base.size() && base.size() < kMaxClique) {
      for (Vertex u : base) g.add_edge(v, u);
      cliques[pick].push_back(v);
      continue;
    }
    take = std::min(take, kMaxClique - 1);
    VertexList fresh(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(take));
    for (Vertex u : fresh) g.add_edge(v, u);
    fresh.push_back(v);
    cliques.push_back(std::move(fresh));
  }
  return g;
}

// Strongly connected tournament on k vertices (k = 1 or k >= 3): i beats the
// next floor((k-1)/2) vertices cyclically, and for even k also the vertex
// opposite when i < k/2. The cycle 0 -> 1 -> ... -> k-1 -> 0 is present.
inline std::vector<std::uint8_t> strong_piece(int k) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const int gap = (j - i + k) % k;
      const bool edge = 2 * gap < k || (2 * gap == k && i < j);
      if (edge) m[static_cast<std::size_t>(i) * k + j] = 1;
    }
  return m;
}

}  // namespace detail

/// Outsimplicial digraph with the given strongly connected pieces substituted
/// into a random PEO-oriented chordal base graph. Total size is exactly n.
inline OrientedDigraph gen_outsimplicial_pieces(int n, std::uint64_t seed, const std::vector<int>& piece_sizes) {
  if (n < 1) throw InvalidArgument("gen_outsimplicial: n must be at least 1");
  int extra = 0;
  for (int s : piece_sizes) {
    if (s != 1 && s < 3) throw InvalidArgument("gen_outsimplicial: no strongly connected tournament of size 2");
    extra += s - 1;
  }
  const int m = n - extra;
  if (m < static_cast<int>(piece_sizes.size()) || m < 1)
    throw InvalidArgument("gen_outsimplicial: pieces do not fit in n = " + std::to_string(n));
  const Rng base(seed, streams::kOutsimplicial);
  Rng graph_rng = base.child(0);
  const UndirectedGraph chordal = detail::random_chordal(m, graph_rng);

  // Base vertex x becomes the block [start[x], start[x] + size[x]).
  std::vector<int> size(m, 1);
  VertexList hosts = detail::random_permutation(m, base.child(1));
  for (std::size_t i = 0; i < piece_sizes.size(); ++i) size[hosts[i]] = piece_sizes[i];
  std::vector<int> start(m + 1, 0);
  for (int x = 0; x < m; ++x) start[x + 1] = start[x] + size[x];

  const VertexList perm = detail::random_permutation(n, base.child(2));
  OrientedDigraph d(n);
  for (int x = 0; x < m; ++x) {
    const auto piece = detail::strong_piece(size[x]);
    for (int a = 0; a < size[x]; ++a)
      for (int b = 0; b < size[x]; ++b)
        if (piece[static_cast<std::size_t>(a) * size[x] + b]) d.add_edge(perm[start[x] + a], perm[start[x] + b]);
    // Later-inserted endpoint points to the earlier one.
    for (int y = 0; y < x; ++y) {
      if (!chordal.has_edge(x, y)) continue;
      for (int a = 0; a < size[x]; ++a)
        for (int b = 0; b < size[y]; ++b) d.add_edge(perm[start[x] + a], perm[start[y] + b]);
    }
  }
  return d;
}

/// Outsimplicial digraph on n vertices. Without blow-up it is acyclic; with
/// blow-up a random number of base vertices become directed triangles or C5s.
inline OrientedDigraph gen_outsimplicial(int n, std::uint64_t seed, bool blowup) {
  if (n < 1) throw InvalidArgument("gen_outsimplicial: n must be at least 1");
  std::vector<int> pieces;
  if (blowup && n >= 3) {
    Rng rng = Rng(seed, streams::kOutsimplicial).child(3);
    const int wanted = 1 + rng.below(std::max(1, n / 8));
    int extra = 0;
    for (int i = 0; i < wanted; ++i) {
      const int s = rng.coin() ? 3 : 5;
      const int count = static_cast<int>(pieces.size()) + 1;
      if (n - (extra + s - 1) < count) break;
      pieces.push_back(s);
      extra += s - 1;
    }
  }
  return gen_outsimplicial_pieces(n, seed, pieces);
}

}  // namespace tourn
