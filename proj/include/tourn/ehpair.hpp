#pragma once

// Complete pairs in C5-free tournaments.
//
// Input: a tournament T and a verified smooth structure V1..V5 (all-zero w,
// lambda <= 1/5). Output: disjoint A, B with A complete to B, or five vertices
// inducing C5. Every step that could only fail in a tournament containing C5
// returns that C5 instead, so the output is a checkable certificate for any
// input with a verified structure, C5-free or not.
//
//  1. D on V1: u, v adjacent iff they have a common in-neighbour in V5, oriented
//     as in T.
//  2. D must be outsimplicial. A violation u -> v, u -> w with v, w
//     non-adjacent yields a C5 through V3 and V5 (claim2_extract).
//  3. Every D-edge u -> v must satisfy N-(u) & V3 subset of N-(v) & V3. A
//     violation yields either a C5 through V2 or a complete pair N2 -> N4
//     (claim1_check_edge).
//  4. split(D) gives A, B in V1 with no D-edges between them (case I) or with
//     D-paths from all of A to all of B (case II).
//  5. Case I: C = common out-neighbourhood of A in V5. Either A -> C, or B is
//     complete to V5 \ C (a vertex of V5 \ C beating some b would be a common
//     in-neighbour of b and some a, i.e. a D-edge).
//     Case II: C = common out-neighbourhood of A in V3. Either A -> C, or
//     V3 \ C is complete to B (containment from step 3 propagates along paths).
//     Whichever side is at least half of V5 (resp. V3) is returned.

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "tourn/graph.hpp"
#include "tourn/outsimplicial.hpp"
#include "tourn/patterns.hpp"
#include "tourn/structures.hpp"

namespace tourn {

enum class PairBranch {
  kClaim1,          // N2 complete to N4
  kNoEdgesFromA,    // case I, A -> C
  kNoEdgesFromB,    // case I, B -> V5 \ C
  kPathsFromA,      // case II, A -> C
  kPathsIntoB,      // case II, V3 \ C -> B
  kSingleVertex,    // |V1| = 1: the vertex and its out-neighbours in V2
};

inline const char* to_string(PairBranch b) {
  switch (b) {
    case PairBranch::kClaim1: return "claim1-N2N4";
    case PairBranch::kNoEdgesFromA: return "caseI-AC";
    case PairBranch::kNoEdgesFromB: return "caseI-BV5";
    case PairBranch::kPathsFromA: return "caseII-AC";
    case PairBranch::kPathsIntoB: return "caseII-V3B";
    case PairBranch::kSingleVertex: return "single-V1";
  }
  return "?";
}

inline std::optional<PairBranch> parse_pair_branch(std::string_view s) {
  for (auto b : {PairBranch::kClaim1, PairBranch::kNoEdgesFromA, PairBranch::kNoEdgesFromB, PairBranch::kPathsFromA,
                 PairBranch::kPathsIntoB, PairBranch::kSingleVertex})
    if (s == to_string(b)) return b;
  return std::nullopt;
}

/// A complete to B: every a in A beats every b in B.
struct CompletePair {
  VertexList a, b;
  PairBranch branch = PairBranch::kNoEdgesFromA;

  bool operator==(const CompletePair&) const = default;
};

using PairOrWitness = std::variant<CompletePair, C5Witness>;

/// The common-in-neighbour digraph on V1 together with, for each D-edge, the
/// smallest vertex of V5 beating both endpoints. D vertex i is T vertex v1[i].
struct WitnessedDigraph {
  VertexList v1;
  OrientedDigraph d;
  std::vector<Vertex> witnesses;  // row-major |V1| x |V1|, -1 when non-adjacent

  Vertex witness(int i, int j) const { return witnesses[static_cast<std::size_t>(i) * v1.size() + j]; }
};

inline WitnessedDigraph build_common_in_digraph(const Tournament& t, std::span<const Vertex> v1,
                                                std::span<const Vertex> v5) {
  detail::check_disjoint(t.size(), v1, v5, "build_common_in_digraph");
  const int m = static_cast<int>(v1.size());
  WitnessedDigraph wd{VertexList(v1.begin(), v1.end()), OrientedDigraph(m),
                      std::vector<Vertex>(static_cast<std::size_t>(m) * m, -1)};
  VertexList sorted5(v5.begin(), v5.end());
  std::sort(sorted5.begin(), sorted5.end());
  // beaten_by[x] = D vertices that x in V5 beats.
  std::vector<detail::Bitset> beaten_by;
  beaten_by.reserve(sorted5.size());
  for (Vertex x : sorted5) {
    detail::Bitset b(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      if (t.beats(x, v1[i])) b.set(static_cast<std::size_t>(i));
    beaten_by.push_back(std::move(b));
  }
  for (std::size_t xi = 0; xi < sorted5.size(); ++xi) {
    const auto& b = beaten_by[xi];
    for (std::size_t i = b.first(); i < b.size(); i = b.next(i + 1))
      for (std::size_t j = b.next(i + 1); j < b.size(); j = b.next(j + 1)) {
        auto& wij = wd.witnesses[i * static_cast<std::size_t>(m) + j];
        if (wij != -1) continue;
        wij = sorted5[xi];
        wd.witnesses[j * static_cast<std::size_t>(m) + i] = sorted5[xi];
        if (t.beats(v1[i], v1[j]))
          wd.d.add_edge(static_cast<int>(i), static_cast<int>(j));
        else
          wd.d.add_edge(static_cast<int>(j), static_cast<int>(i));
      }
  }
  return wd;
}

namespace detail {

inline bool c5_order_holds(const Tournament& t, const C5Witness& w) {
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < i; ++j)
      if (w.v[i] == w.v[j]) return false;
    if (!t.beats(w.v[i], w.v[(i + 1) % 5]) || !t.beats(w.v[i], w.v[(i + 2) % 5])) return false;
  }
  return true;
}

inline C5Witness checked_c5(const Tournament& t, C5Witness w, const char* who) {
  if (!c5_order_holds(t, w) || !is_c5(t.induced(w.v)))
    throw InternalInvariantError(std::string(who) + ": extracted five vertices do not induce C5");
  return w;
}

inline bool is_complete(const Tournament& t, const CompletePair& p) {
  if (p.a.empty() || p.b.empty()) return false;
  for (Vertex u : p.a)
    for (Vertex v : p.b)
      if (u == v || !t.beats(u, v)) return false;
  return true;
}

inline CompletePair checked_pair(const Tournament& t, CompletePair p, const char* who) {
  std::sort(p.a.begin(), p.a.end());
  std::sort(p.b.begin(), p.b.end());
  if (!is_complete(t, p))
    throw InternalInvariantError(std::string(who) + ": pair (" + to_string(p.branch) + ") is not complete");
  return p;
}

template <class Pred>
Vertex first_in(const VertexList& set, Pred pred) {
  for (Vertex v : set)
    if (pred(v)) return v;
  return -1;
}

}  // namespace detail

/// Turns an outsimpliciality violation of D (u1 -> v1, u1 -> w1 in D, with v1
/// and w1 sharing no in-neighbour in V5) into a C5. Arguments are D indices.
inline C5Witness claim2_extract(const Tournament& t, const SmoothStructure& s, int u1, int v1, int w1,
                                const WitnessedDigraph& wd) {
  const Vertex u = wd.v1[u1], v = wd.v1[v1], w = wd.v1[w1];
  const Vertex x5 = wd.witness(u1, v1);
  const Vertex y5 = wd.witness(u1, w1);
  if (x5 < 0 || y5 < 0 || x5 == y5)
    throw InternalInvariantError("claim2_extract: arguments are not an outsimpliciality violation");
  const auto& v3 = s.sets[2];
  // x5 beats u, v but not w; y5 beats u, w but not v.
  Vertex first = w, top = x5, bottom = y5;
  if (!t.beats(x5, y5)) {
    first = v;
    top = y5;
    bottom = x5;
  }
  const Vertex z3 = detail::first_in(v3, [&](Vertex z) {
    return t.beats(u, z) && t.beats(first, z) && t.beats(z, top) && t.beats(z, bottom);
  });
  if (z3 < 0)
    throw InternalInvariantError("claim2_extract: no vertex of V3 completes the C5; structure is not smooth");
  return detail::checked_c5(t, C5Witness{{u, first, z3, top, bottom}}, "claim2_extract");
}

/// Outcome of checking one D-edge: clean, a C5, or a complete pair.
struct EdgeClean {
  bool operator==(const EdgeClean&) const = default;
};
using EdgeCheck = std::variant<EdgeClean, C5Witness, CompletePair>;

/// Checks N-(u1) & V3 subset of N-(v1) & V3 for the D-edge u1 -> v1 (D indices).
inline EdgeCheck claim1_check_edge(const Tournament& t, const SmoothStructure& s, int u1, int v1,
                                   const WitnessedDigraph& wd) {
  const Vertex u = wd.v1[u1], v = wd.v1[v1];
  const Vertex v5 = wd.witness(u1, v1);
  if (v5 < 0 || !wd.d.has_edge(u1, v1)) throw InvalidArgument("claim1_check_edge: not a D-edge");
  const auto& V2 = s.sets[1];
  const auto& V3 = s.sets[2];
  const auto& V4 = s.sets[3];

  const Vertex v3 = detail::first_in(V3, [&](Vertex z) { return t.beats(z, u) && t.beats(v, z); });
  if (v3 < 0) return EdgeClean{};

  if (t.beats(v3, v5)) {
    const Vertex v2 = detail::first_in(V2, [&](Vertex z) {
      return t.beats(u, z) && t.beats(v, z) && t.beats(z, v3) && t.beats(z, v5);
    });
    if (v2 < 0) throw InternalInvariantError("claim1_check_edge: no vertex of V2 completes the C5");
    return detail::checked_c5(t, C5Witness{{u, v, v2, v3, v5}}, "claim1_check_edge");
  }

  VertexList n4, n2;
  for (Vertex z : V4)
    if (t.beats(u, z) && t.beats(v3, z) && t.beats(z, v5)) n4.push_back(z);
  for (Vertex z : V2)
    if (t.beats(u, z) && t.beats(z, v3) && t.beats(z, v5)) n2.push_back(z);
  if (n4.empty() || n2.empty()) throw InternalInvariantError("claim1_check_edge: N2 or N4 is empty");
  for (Vertex a : n4)
    for (Vertex b : n2)
      if (t.beats(a, b)) return detail::checked_c5(t, C5Witness{{v3, u, a, b, v5}}, "claim1_check_edge");
  return detail::checked_pair(t, CompletePair{n2, n4, PairBranch::kClaim1}, "claim1_check_edge");
}

/// Full pipeline. Requires a structure with |w| = 5, all-zero w and
/// lambda <= 1/5 that passes verify_structure in smooth mode.
inline PairOrWitness find_complete_pair(const Tournament& t, const SmoothStructure& s) {
  if (s.spec.w.size() != 5 || !s.spec.all_zero())
    throw PreconditionError("find_complete_pair: structure must have w = 00000");
  if (s.spec.lambda > Ratio(1, 5))
    throw PreconditionError("find_complete_pair: lambda must be at most 1/5, got " + s.spec.lambda.str());
  if (const auto report = verify_structure(t, s, StructureMode::kSmooth); !report.pass)
    throw PreconditionError("find_complete_pair: structure does not verify: " + report.message);
  for (const auto& part : s.sets)
    if (part.empty()) throw PreconditionError("find_complete_pair: empty structure set");

  const auto& V1 = s.sets[0];
  const auto& V2 = s.sets[1];
  const auto& V3 = s.sets[2];
  const auto& V5 = s.sets[4];

  if (V1.size() == 1) {
    VertexList out;
    for (Vertex z : V2)
      if (t.beats(V1[0], z)) out.push_back(z);
    return detail::checked_pair(t, CompletePair{V1, out, PairBranch::kSingleVertex}, "find_complete_pair");
  }

  VertexList v1_sorted = V1;
  std::sort(v1_sorted.begin(), v1_sorted.end());
  const WitnessedDigraph wd = build_common_in_digraph(t, v1_sorted, V5);

  if (auto bad = check_outsimplicial(wd.d)) return claim2_extract(t, s, bad->v, bad->a, bad->b, wd);

  const int m = wd.d.size();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!wd.d.has_edge(i, j)) continue;
      EdgeCheck res = claim1_check_edge(t, s, i, j, wd);
      if (auto* w = std::get_if<C5Witness>(&res)) return *w;
      if (auto* p = std::get_if<CompletePair>(&res)) return *p;
    }

  const SplitCertificate cert = split(wd.d);
  VertexList a, b;
  for (int i : cert.a) a.push_back(wd.v1[i]);
  for (int i : cert.b) b.push_back(wd.v1[i]);

  const auto& target = cert.kind == SplitCase::kNoEdges ? V5 : V3;
  VertexList common, rest;
  for (Vertex z : target) {
    const bool all = std::all_of(a.begin(), a.end(), [&](Vertex x) { return t.beats(x, z); });
    (all ? common : rest).push_back(z);
  }
  CompletePair pair;
  if (2 * common.size() >= target.size())
    pair = {a, common, cert.kind == SplitCase::kNoEdges ? PairBranch::kNoEdgesFromA : PairBranch::kPathsFromA};
  else if (cert.kind == SplitCase::kNoEdges)
    pair = {b, rest, PairBranch::kNoEdgesFromB};
  else
    pair = {rest, b, PairBranch::kPathsIntoB};
  return detail::checked_pair(t, std::move(pair), "find_complete_pair");
}

}  // namespace tourn
