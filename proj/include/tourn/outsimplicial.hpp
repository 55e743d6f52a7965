#pragma once

// Splitting outsimplicial digraphs.
//
// A digraph is outsimplicial when every out-neighbourhood is a clique of the
// underlying graph. Any such digraph on n >= 2 vertices has disjoint A, B of
// size >= floor(n/6) with either no edge at all between them (case I) or a
// directed path from every a in A to every b in B (case II). `split` computes
// such a pair from the condensation:
//
//  * the underlying graph F' of the condensation is chordal;
//  * if some clique of F' carries at least a third of the vertices, its
//    components in topological order form a chain and halving the
//    concatenated vertex list gives case II;
//  * otherwise a centroid bag of a clique tree of F' separates F' into
//    components of weight <= n/2 and a prefix of them (by ascending weight)
//    gives case I.

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tourn/chordal.hpp"
#include "tourn/graph.hpp"

namespace tourn {

struct OutsimplicialViolation {
  Vertex v, a, b;  // v -> a and v -> b, but a and b are not adjacent
  bool operator==(const OutsimplicialViolation&) const = default;
};

class NotOutsimplicialError : public PreconditionError {
 public:
  explicit NotOutsimplicialError(OutsimplicialViolation v)
      : PreconditionError("digraph is not outsimplicial: " + std::to_string(v.v) + " -> {" +
                          std::to_string(v.a) + "," + std::to_string(v.b) + "} with " +
                          std::to_string(v.a) + "," + std::to_string(v.b) + " non-adjacent"),
        violation_(v) {}
  const OutsimplicialViolation& violation() const { return violation_; }

 private:
  OutsimplicialViolation violation_;
};

enum class SplitCase { kNoEdges, kAllPaths };  // case I, case II
enum class SplitBranch { kBigClique, kCentroid };

inline const char* to_string(SplitCase c) { return c == SplitCase::kNoEdges ? "I" : "II"; }
inline const char* to_string(SplitBranch b) { return b == SplitBranch::kBigClique ? "big-clique" : "centroid"; }

struct SplitCertificate {
  SplitCase kind = SplitCase::kNoEdges;
  VertexList a, b;  // ascending
  SplitBranch branch = SplitBranch::kCentroid;
  VertexList pivot;  // D-vertices of the heavy clique or of the centroid bag, ascending

  bool operator==(const SplitCertificate&) const = default;
};

/// Lexicographically first (v, a, b) with a < b both out-neighbours of v and
/// a, b non-adjacent; nullopt when the digraph is outsimplicial.
inline std::optional<OutsimplicialViolation> check_outsimplicial(const OrientedDigraph& d) {
  for (int v = 0; v < d.size(); ++v) {
    const VertexList out = d.out_neighbors(v);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (!d.adjacent(out[i], out[j])) return OutsimplicialViolation{v, out[i], out[j]};
  }
  return std::nullopt;
}

inline SplitCertificate split(const OrientedDigraph& d) {
  const int n = d.size();
  if (n < 2) throw InvalidArgument("split: need at least 2 vertices, got " + std::to_string(n));
  if (auto bad = check_outsimplicial(d)) throw NotOutsimplicialError(*bad);

  const Condensation cond = scc_condensation(d);
  const UndirectedGraph fp = underlying(cond.quotient);
  const std::vector<Weight> weights(cond.weights.begin(), cond.weights.end());
  if (!is_chordal(fp).chordal)
    throw InternalInvariantError("split: condensation of an outsimplicial digraph is not chordal");

  auto vertices_of = [&](const VertexList& comps) {
    VertexList vs;
    for (int c : comps) vs.insert(vs.end(), cond.components[c].begin(), cond.components[c].end());
    return vs;
  };

  SplitCertificate cert;
  const VertexList heavy = max_weight_clique_chordal(fp, weights);
  const Weight heavy_w = set_weight(heavy, weights);

  if (3 * heavy_w >= n && heavy_w >= 2) {
    // Component indices are topological, so ascending order is the chain order.
    for (std::size_t i = 0; i < heavy.size(); ++i)
      for (std::size_t j = i + 1; j < heavy.size(); ++j)
        if (!cond.quotient.has_edge(heavy[i], heavy[j]))
          throw InternalInvariantError("split: heavy clique is not a forward chain");
    const VertexList chain = vertices_of(heavy);
    const auto half = static_cast<std::ptrdiff_t>(chain.size() / 2);
    cert.kind = SplitCase::kAllPaths;
    cert.branch = SplitBranch::kBigClique;
    cert.a.assign(chain.begin(), chain.begin() + half);
    cert.b.assign(chain.begin() + half, chain.end());
    cert.pivot = chain;
  } else {
    const TreeDecomposition td = clique_tree(fp);
    const int bag = centroid_bag(fp, td, weights);
    std::vector<std::uint8_t> removed(static_cast<std::size_t>(fp.size()), 0);
    for (int c : td.bags[bag]) removed[c] = 1;
    auto comps = components_excluding(fp.adjacency_lists(), removed);

    struct Piece {
      Weight weight;
      Vertex smallest;
      VertexList vertices;
    };
    std::vector<Piece> pieces;
    Weight total = 0;
    for (const auto& comp : comps) {
      VertexList vs = vertices_of(comp);
      Piece p{static_cast<Weight>(vs.size()), *std::min_element(vs.begin(), vs.end()), std::move(vs)};
      total += p.weight;
      pieces.push_back(std::move(p));
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) {
      return std::tie(x.weight, x.smallest) < std::tie(y.weight, y.smallest);
    });

    cert.kind = SplitCase::kNoEdges;
    cert.branch = SplitBranch::kCentroid;
    cert.pivot = vertices_of(td.bags[bag]);
    const std::size_t m = pieces.size();
    if (m == 0) throw InternalInvariantError("split: centroid bag covers the whole condensation");
    if (m == 1) {
      // Only reachable for n = 2 with no edges: the bag and the other vertex.
      if (n != 2 || d.edge_count() != 0)
        throw InternalInvariantError("split: centroid bag leaves a single component");
      cert.a = cert.pivot;
      cert.b = pieces[0].vertices;
    } else {
      std::size_t r = 0;
      Weight prefix = 0;
      for (; r < m; ++r) {
        prefix += pieces[r].weight;
        if (2 * prefix > total) break;
      }
      const std::size_t cut = r == m - 1 ? m - 1 : r + 1;  // pieces [0, cut) go to A
      for (std::size_t i = 0; i < m; ++i) {
        auto& side = i < cut ? cert.a : cert.b;
        side.insert(side.end(), pieces[i].vertices.begin(), pieces[i].vertices.end());
      }
    }
    std::sort(cert.a.begin(), cert.a.end());
    std::sort(cert.b.begin(), cert.b.end());
  }
  std::sort(cert.pivot.begin(), cert.pivot.end());

  const auto floor6 = static_cast<std::size_t>(n / 6);
  if (cert.a.size() < floor6 || cert.b.size() < floor6 || cert.a.empty() || cert.b.empty())
    throw InternalInvariantError("split: side sizes " + std::to_string(cert.a.size()) + "/" +
                                 std::to_string(cert.b.size()) + " below floor(n/6) = " +
                                 std::to_string(floor6));
  return cert;
}

/// Re-checks a certificate against `d` from scratch.
inline bool verify_split(const OrientedDigraph& d, const SplitCertificate& cert) {
  const int n = d.size();
  std::vector<std::uint8_t> side(static_cast<std::size_t>(n), 0);
  for (Vertex v : cert.a) {
    if (v < 0 || v >= n || side[v]) return false;
    side[v] = 1;
  }
  for (Vertex v : cert.b) {
    if (v < 0 || v >= n || side[v]) return false;
    side[v] = 2;
  }
  const auto floor6 = static_cast<std::size_t>(n / 6);
  if (cert.a.size() < floor6 || cert.b.size() < floor6) return false;
  if (cert.kind == SplitCase::kNoEdges) {
    for (Vertex u : cert.a)
      for (Vertex v : cert.b)
        if (d.adjacent(u, v)) return false;
    return true;
  }
  return reaches_all(d, cert.a, cert.b);
}

}  // namespace tourn
