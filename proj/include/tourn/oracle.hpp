#pragma once

// Brute-force reference implementations. Deliberately slow and independent of
// the optimized code paths: no pruning, no bitset tricks, no shared helpers
// beyond the graph types themselves.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tourn/graph.hpp"
#include "tourn/patterns.hpp"

namespace tourn::oracle {

inline constexpr int kBruteC5Cap = 14;
inline constexpr int kBruteMaxPairCap = 20;
inline constexpr int kBruteTrCap = 14;

/// Does the tuple realize the C5 pattern (v[i] beats v[i+1] and v[i+2])?
/// Checks all ten pairs.
inline bool verify_c5_witness(const Tournament& t, const C5Witness& w) {
  for (Vertex x : w.v)
    if (x < 0 || x >= t.size()) return false;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (w.v[i] == w.v[j]) return false;
  for (int i = 0; i < 5; ++i) {
    if (!t.beats(w.v[i], w.v[(i + 1) % 5])) return false;
    if (!t.beats(w.v[i], w.v[(i + 2) % 5])) return false;
  }
  return true;
}

/// Every 5-subset, every ordering starting at its smallest vertex.
inline std::optional<C5Witness> brute_c5(const Tournament& t) {
  const int n = t.size();
  if (n > kBruteC5Cap) throw SizeLimitError("brute_c5: n = " + std::to_string(n) + " exceeds cap");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          for (int e = d + 1; e < n; ++e) {
            std::array<Vertex, 4> rest{b, c, d, e};
            do {
              C5Witness w{{a, rest[0], rest[1], rest[2], rest[3]}};
              if (verify_c5_witness(t, w)) return w;
            } while (std::next_permutation(rest.begin(), rest.end()));
          }
  return std::nullopt;
}

struct MaxPair {
  VertexList a, b;
  int value = 0;  // min(|A|, |B|)
};

/// Best min(|A|, |B|) over complete pairs. For each nonempty A, B is taken to
/// be the full common out-neighbourhood of A, which contains every B' with A
/// complete to B'. Ties go to the lexicographically smallest A.
inline MaxPair brute_max_pair(const Tournament& t) {
  const int n = t.size();
  if (n > kBruteMaxPairCap) throw SizeLimitError("brute_max_pair: n = " + std::to_string(n) + " exceeds cap");
  MaxPair best;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    VertexList a, b;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U) a.push_back(v);
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) continue;
      bool all = true;
      for (Vertex u : a) all = all && t.beats(u, v);
      if (all) b.push_back(v);
    }
    const int value = static_cast<int>(std::min(a.size(), b.size()));
    if (value > best.value || (value == best.value && value > 0 && a < best.a)) best = {a, b, value};
  }
  return best;
}

/// Largest subset with no directed triangle.
inline int brute_tr(const Tournament& t) {
  const int n = t.size();
  if (n > kBruteTrCap) throw SizeLimitError("brute_tr: n = " + std::to_string(n) + " exceeds cap");
  int best = 0;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    VertexList s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U) s.push_back(v);
    if (static_cast<int>(s.size()) <= best) continue;
    bool acyclic = true;
    for (std::size_t i = 0; i < s.size() && acyclic; ++i)
      for (std::size_t j = 0; j < s.size() && acyclic; ++j)
        for (std::size_t k = 0; k < s.size() && acyclic; ++k)
          if (t.beats(s[i], s[j]) && t.beats(s[j], s[k]) && t.beats(s[k], s[i])) acyclic = false;
    if (acyclic) best = static_cast<int>(s.size());
  }
  return best;
}

/// Nonempty, disjoint, and every a beats every b.
inline bool verify_complete_pair(const Tournament& t, const VertexList& a, const VertexList& b) {
  if (a.empty() || b.empty()) return false;
  std::vector<int> mark(static_cast<std::size_t>(t.size()), 0);
  for (Vertex v : a) {
    if (v < 0 || v >= t.size() || mark[v]) return false;
    mark[v] = 1;
  }
  for (Vertex v : b) {
    if (v < 0 || v >= t.size() || mark[v]) return false;
    mark[v] = 2;
  }
  for (Vertex u : a)
    for (Vertex v : b)
      if (!t.beats(u, v)) return false;
  return true;
}

}  // namespace tourn::oracle
