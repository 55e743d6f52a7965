#pragma once

// (c, lambda, w)-structures: disjoint vertex sets S_1..S_k of a tournament
// with size lower bounds and mostly-forward edges between them.
//
//   w_i = 0:  |S_i| >= c * n
//   w_i = 1:  S_i transitive and |S_i| >= c * tr(T)
//   plain:    d+(S_i, S_j) >= 1 - lambda for i < j
//   smooth:   for i < j, every v in S_i has <= lambda |S_j| in-neighbours in
//             S_j and every v in S_j has <= lambda |S_i| out-neighbours in S_i
//
// All thresholds are weak inequalities evaluated exactly.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tourn/graph.hpp"
#include "tourn/rational.hpp"
#include "tourn/rng.hpp"

namespace tourn {

struct StructureSpec {
  Ratio c{1, 1};
  Ratio lambda{1, 5};
  std::vector<int> w;  // entries in {0, 1}

  void validate() const {
    if (!(c > Ratio(0) && c <= Ratio(1))) throw InvalidArgument("structure: c must lie in (0, 1], got " + c.str());
    if (!(lambda > Ratio(0) && lambda < Ratio(1)))
      throw InvalidArgument("structure: lambda must lie in (0, 1), got " + lambda.str());
    if (w.empty()) throw InvalidArgument("structure: empty w");
    for (int x : w)
      if (x != 0 && x != 1) throw InvalidArgument("structure: w entries must be 0 or 1");
  }
  bool all_zero() const { return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; }); }

  bool operator==(const StructureSpec&) const = default;
};

/// Parses a w string such as "00000".
inline std::vector<int> parse_w(std::string_view s) {
  std::vector<int> w;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw InvalidArgument("w must be a string over {0,1}, got '" + std::string(s) + "'");
    w.push_back(ch - '0');
  }
  return w;
}
inline std::string format_w(const std::vector<int>& w) {
  std::string s;
  for (int x : w) s.push_back(static_cast<char>('0' + x));
  return s;
}

struct SmoothStructure {
  StructureSpec spec;
  std::vector<VertexList> sets;

  bool operator==(const SmoothStructure&) const = default;
};

enum class StructureMode { kPlain, kSmooth };

struct StructureReport {
  bool pass = true;
  std::string condition;  // "size", "transitive", "density", "in-neighbors", "out-neighbors"
  int set_i = -1;
  int set_j = -1;
  Vertex vertex = -1;
  std::int64_t count = 0;  // offending count (edges, neighbours or set size)
  std::int64_t total = 0;  // what the threshold multiplies
  std::string message;
};

/// |{(a, b) : a -> b}| / (|A| |B|).
inline Ratio forward_density(const Tournament& t, std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.empty() || b.empty()) throw InvalidArgument("forward_density: empty set");
  detail::check_disjoint(t.size(), a, b, "forward_density");
  std::int64_t fwd = 0;
  for (Vertex u : a)
    for (Vertex v : b) fwd += t.beats(u, v);
  return Ratio(fwd, static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size()));
}

/// Checks every structure condition and reports the first violation.
/// `tr_value` is required as soon as some w_i = 1; when it is only a lower
/// bound on tr(T) the size test for those sets becomes conservative.
inline StructureReport verify_structure(const Tournament& t, const SmoothStructure& s, StructureMode mode,
                                        std::optional<std::int64_t> tr_value = std::nullopt) {
  s.spec.validate();
  const int n = t.size();
  const std::size_t k = s.spec.w.size();
  if (s.sets.size() != k)
    throw InvalidArgument("verify_structure: " + std::to_string(s.sets.size()) + " sets for |w| = " +
                          std::to_string(k));
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < k; ++i)
    for (Vertex v : s.sets[i]) {
      detail::check_vertex(n, v, "verify_structure");
      if (owner[v] != -1)
        throw InvalidArgument("verify_structure: vertex " + std::to_string(v) + " in sets " +
                              std::to_string(owner[v]) + " and " + std::to_string(i));
      owner[v] = static_cast<int>(i);
    }

  auto fail = [](std::string cond, int i, int j, Vertex v, std::int64_t count, std::int64_t total,
                 std::string msg) {
    return StructureReport{false, std::move(cond), i, j, v, count, total, std::move(msg)};
  };
  const Ratio& c = s.spec.c;
  const Ratio& lam = s.spec.lambda;

  for (std::size_t i = 0; i < k; ++i) {
    const auto& si = s.sets[i];
    const auto size = static_cast<std::int64_t>(si.size());
    const int ii = static_cast<int>(i);
    if (s.spec.w[i] == 0) {
      if (!c.reached_by(size, n))
        return fail("size", ii, -1, -1, size, n,
                    "|S_" + std::to_string(i) + "| = " + std::to_string(size) + " < " + c.str() + " * " +
                        std::to_string(n));
      continue;
    }
    if (!tr_value) throw InvalidArgument("verify_structure: tr value required when w has a 1 entry");
    // Transitive iff the internal out-degrees are pairwise distinct.
    std::vector<int> deg;
    for (Vertex u : si) {
      int d = 0;
      for (Vertex v : si) d += (u != v && t.beats(u, v));
      deg.push_back(d);
    }
    std::sort(deg.begin(), deg.end());
    if (std::adjacent_find(deg.begin(), deg.end()) != deg.end())
      return fail("transitive", ii, -1, -1, size, size, "S_" + std::to_string(i) + " is not transitive");
    if (!c.reached_by(size, *tr_value))
      return fail("size", ii, -1, -1, size, *tr_value,
                  "|S_" + std::to_string(i) + "| = " + std::to_string(size) + " < " + c.str() + " * tr = " +
                      std::to_string(*tr_value));
  }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& si = s.sets[i];
      const auto& sj = s.sets[j];
      const int ii = static_cast<int>(i), jj = static_cast<int>(j);
      if (mode == StructureMode::kPlain) {
        if (si.empty() || sj.empty()) continue;
        std::int64_t fwd = 0;
        for (Vertex u : si)
          for (Vertex v : sj) fwd += t.beats(u, v);
        const std::int64_t pairs = static_cast<std::int64_t>(si.size()) * static_cast<std::int64_t>(sj.size());
        const Ratio need(lam.den() - lam.num(), lam.den());
        if (!need.reached_by(fwd, pairs))
          return fail("density", ii, jj, -1, fwd, pairs,
                      "d+(S_" + std::to_string(i) + ",S_" + std::to_string(j) + ") = " + Ratio(fwd, pairs).str() +
                          " < 1 - " + lam.str());
        continue;
      }
      for (Vertex u : si) {
        std::int64_t in = 0;
        for (Vertex v : sj) in += t.beats(v, u);
        if (!lam.bounds(in, static_cast<std::int64_t>(sj.size())))
          return fail("in-neighbors", ii, jj, u, in, static_cast<std::int64_t>(sj.size()),
                      "vertex " + std::to_string(u) + " of S_" + std::to_string(i) + " has " + std::to_string(in) +
                          " in-neighbours in S_" + std::to_string(j) + " (limit " + lam.str() + " * " +
                          std::to_string(sj.size()) + ")");
      }
      for (Vertex v : sj) {
        std::int64_t out = 0;
        for (Vertex u : si) out += t.beats(v, u);
        if (!lam.bounds(out, static_cast<std::int64_t>(si.size())))
          return fail("out-neighbors", ii, jj, v, out, static_cast<std::int64_t>(si.size()),
                      "vertex " + std::to_string(v) + " of S_" + std::to_string(j) + " has " + std::to_string(out) +
                          " out-neighbours in S_" + std::to_string(i) + " (limit " + lam.str() + " * " +
                          std::to_string(si.size()) + ")");
      }
    }
  return {};
}

namespace detail {

// Ranking by out-degree, then adjacent swaps while the later vertex beats the
// earlier one. Each swap removes exactly one backward edge, so this terminates
// with every consecutive pair forward.
inline VertexList ranking(const Tournament& t, Rng* rng) {
  const int n = t.size();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = t.out_degree(v);
  VertexList order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[v] = v;
  if (rng) rng->shuffle(order);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  if (rng)
    for (int s = 0; n >= 2 && s < n; ++s) {
      int i = rng->below(n - 1);
      std::swap(order[i], order[i + 1]);
    }
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i)
      if (t.beats(order[i + 1], order[i])) {
        std::swap(order[i], order[i + 1]);
        changed = true;
      }
  }
  return order;
}

}  // namespace detail

/// Heuristic search for a smooth structure with all-zero w.
///
/// Attempt a uses Rng(seed, a); attempt 0 is the plain out-degree ranking.
/// Each attempt ranks the vertices, cuts the ranking into |w| consecutive
/// windows of near-equal size, then repeatedly deletes the vertex that most
/// exceeds a per-vertex smoothness bound until none does. The first attempt
/// whose windows all keep >= c n vertices and pass verify_structure wins.
inline std::optional<SmoothStructure> find_structure(const Tournament& t, const StructureSpec& spec, int attempts,
                                                     std::uint64_t seed) {
  spec.validate();
  if (!spec.all_zero()) throw InvalidArgument("find_structure: only all-zero w is supported");
  const int n = t.size();
  const int k = static_cast<int>(spec.w.size());
  const std::int64_t num = spec.lambda.num(), den = spec.lambda.den();
  const Rng base(seed);

  for (int attempt = 0; attempt < attempts; ++attempt) {
    Rng rng = base.child(static_cast<std::uint64_t>(attempt));
    const VertexList order = detail::ranking(t, attempt == 0 ? nullptr : &rng);

    std::vector<int> win(n, -1);
    std::vector<std::int64_t> size(k, 0);
    for (int w = 0, pos = 0; w < k; ++w) {
      const int len = n / k + (w < n % k ? 1 : 0);
      for (int i = 0; i < len; ++i) win[order[pos++]] = w;
      size[w] = len;
    }
    // wrong[v * k + j]: neighbours of v in window j oriented against the ranking.
    std::vector<std::int64_t> wrong(static_cast<std::size_t>(n) * k, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v || win[u] == win[v]) continue;
        const bool against = win[v] > win[u] ? t.beats(v, u) : t.beats(u, v);
        if (against) ++wrong[static_cast<std::size_t>(u) * k + win[v]];
      }
    std::vector<std::uint8_t> alive(n, 1);
    while (true) {
      Vertex worst = -1;
      __int128 worst_excess = 0;
      for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (int j = 0; j < k; ++j) {
          if (j == win[v]) continue;
          const __int128 excess = static_cast<__int128>(wrong[static_cast<std::size_t>(v) * k + j]) * den -
                                  static_cast<__int128>(num) * size[j];
          if (excess > worst_excess) {
            worst_excess = excess;
            worst = v;
          }
        }
      }
      if (worst < 0) break;
      alive[worst] = 0;
      --size[win[worst]];
      for (int u = 0; u < n; ++u) {
        if (!alive[u] || win[u] == win[worst]) continue;
        const bool against = win[worst] > win[u] ? t.beats(worst, u) : t.beats(u, worst);
        if (against) --wrong[static_cast<std::size_t>(u) * k + win[worst]];
      }
    }
    bool big_enough = true;
    for (int j = 0; j < k; ++j) big_enough = big_enough && spec.c.reached_by(size[j], n);
    if (!big_enough) continue;

    SmoothStructure s{spec, std::vector<VertexList>(k)};
    for (int v = 0; v < n; ++v)
      if (alive[v]) s.sets[win[v]].push_back(v);
    if (verify_structure(t, s, StructureMode::kSmooth).pass) return s;
  }
  return std::nullopt;
}

}  // namespace tourn
