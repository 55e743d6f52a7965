#pragma once

// C5 detection and transitive subtournaments.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "tourn/detail/bitset.hpp"
#include "tourn/graph.hpp"

namespace tourn {

/// Five vertices of a host tournament in C5 order: v[i] -> v[i+1] and
/// v[i] -> v[i+2] (indices mod 5).
struct C5Witness {
  std::array<Vertex, 5> v{};
  bool operator==(const C5Witness&) const = default;
};

/// Degree test: a 5-vertex tournament is C5 iff every out-degree is 2.
inline bool is_c5(const Tournament& t) {
  if (t.size() != 5) throw InvalidArgument("is_c5: expected 5 vertices, got " + std::to_string(t.size()));
  for (int v = 0; v < 5; ++v)
    if (t.out_degree(v) != 2) return false;
  return true;
}

namespace detail {

// Orders a 5-set known to induce C5 so that it starts at its smallest vertex.
inline C5Witness canonical_c5(const Tournament& t, std::array<Vertex, 5> set) {
  std::sort(set.begin(), set.end());
  C5Witness w;
  w.v[0] = set[0];
  VertexList outs;
  for (Vertex x : set)
    if (x != set[0] && t.beats(set[0], x)) outs.push_back(x);
  // v0 beats v1 and v2, and v1 beats v2.
  w.v[1] = t.beats(outs[0], outs[1]) ? outs[0] : outs[1];
  w.v[2] = w.v[1] == outs[0] ? outs[1] : outs[0];
  for (Vertex x : set)
    if (x != w.v[0] && x != w.v[1] && x != w.v[2]) {
      if (t.beats(w.v[1], x))
        w.v[3] = x;
      else
        w.v[4] = x;
    }
  return w;
}

}  // namespace detail

/// First 5-subset (lexicographic) inducing C5, in canonical rotation.
///
/// Prunes at the 4th vertex: every 4-subset of C5 has score sequence
/// (2,2,1,1), and the fifth vertex is then forced to beat the two score-2
/// vertices and lose to the two score-1 vertices, which is one bitset
/// intersection. Roughly C(n,4) * 3/8 intersections; n = 120 runs in well
/// under a second.
inline std::optional<C5Witness> find_c5(const Tournament& t) {
  const int n = t.size();
  if (n < 5) return std::nullopt;
  std::vector<detail::Bitset> out(n, detail::Bitset(n)), in(n, detail::Bitset(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && t.beats(u, v)) {
        out[u].set(v);
        in[v].set(u);
      }
  std::array<Vertex, 4> q{};
  for (q[0] = 0; q[0] < n; ++q[0])
    for (q[1] = q[0] + 1; q[1] < n; ++q[1])
      for (q[2] = q[1] + 1; q[2] < n; ++q[2])
        for (q[3] = q[2] + 1; q[3] < n; ++q[3]) {
          std::array<int, 4> score{};
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
              if (i != j && t.beats(q[i], q[j])) ++score[i];
          bool ok = true;
          for (int s : score) ok = ok && (s == 1 || s == 2);
          if (!ok) continue;
          detail::Bitset cand(n);
          bool first = true;
          for (int i = 0; i < 4; ++i) {
            const auto& need = score[i] == 2 ? in[q[i]] : out[q[i]];
            if (first) {
              cand = need;
              first = false;
            } else {
              cand &= need;
            }
          }
          std::size_t e = cand.next(static_cast<std::size_t>(q[3]) + 1);
          if (e < static_cast<std::size_t>(n))
            return detail::canonical_c5(t, {q[0], q[1], q[2], q[3], static_cast<Vertex>(e)});
        }
  return std::nullopt;
}

inline constexpr int kMaxTransitiveExactCap = 24;

/// Maximum transitive subtournament by a DP over all 2^n vertex subsets:
/// best(S) = max over sources v in S of 1 + best(S & out(v)). Result is listed
/// in beating order (each vertex beats all later ones). 2^n bytes of memory.
inline VertexList max_transitive_exact(const Tournament& t) {
  const int n = t.size();
  if (n > kMaxTransitiveExactCap)
    throw SizeLimitError("max_transitive_exact: n = " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kMaxTransitiveExactCap));
  if (n == 0) return {};
  std::vector<std::uint32_t> out(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && t.beats(u, v)) out[u] |= std::uint32_t{1} << v;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint8_t> best(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint8_t b = 0;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      b = std::max<std::uint8_t>(b, static_cast<std::uint8_t>(1 + best[s & out[v]]));
    }
    best[s] = b;
  }
  VertexList chain;
  std::uint32_t s = full;
  while (s) {
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (1 + best[s & out[v]] == best[s]) {
        chain.push_back(v);
        s &= out[v];
        break;
      }
    }
  }
  return chain;
}

/// Greedy transitive chain: repeatedly take the candidate with the most
/// out-neighbours among the remaining candidates, then keep only its
/// out-neighbours. Lower bound only.
inline VertexList max_transitive_greedy(const Tournament& t) {
  VertexList cand(static_cast<std::size_t>(t.size()));
  for (int v = 0; v < t.size(); ++v) cand[v] = v;
  VertexList chain;
  while (!cand.empty()) {
    Vertex pick = cand.front();
    int best = -1;
    for (Vertex v : cand) {
      int d = 0;
      for (Vertex u : cand) d += (u != v && t.beats(v, u));
      if (d > best) {
        best = d;
        pick = v;
      }
    }
    chain.push_back(pick);
    VertexList next;
    for (Vertex u : cand)
      if (u != pick && t.beats(pick, u)) next.push_back(u);
    cand = std::move(next);
  }
  return chain;
}

/// True iff `vs` (in the given order) is a transitive chain: earlier beats later.
inline bool is_transitive_chain(const Tournament& t, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!t.beats(vs[i], vs[j])) return false;
  return true;
}

}  // namespace tourn
