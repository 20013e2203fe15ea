#pragma once

// Exponential-time exact oracles for small instances, plus the polynomial
// matching and flow engines. Size guards are hard errors: an oracle never
// degrades to a heuristic answer.

#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_set>

#include "phl/flow.hpp"
#include "phl/structures.hpp"

namespace phl {

inline constexpr int kHamiltonExactMaxN = 24;
inline constexpr int kPancyclicExactMaxN = 18;

namespace detail {

class HamiltonSearch {
 public:
  explicit HamiltonSearch(const Digraph& d) : n_(d.order()) {
    out_.assign(static_cast<std::size_t>(n_), 0);
    in_.assign(static_cast<std::size_t>(n_), 0);
    for (auto [u, v] : d.arcs()) {
      out_[static_cast<std::size_t>(u)] |= 1U << v;
      in_[static_cast<std::size_t>(v)] |= 1U << u;
    }
    full_ = n_ == 32 ? ~0U : ((1U << n_) - 1U);
  }

  std::optional<std::vector<Vertex>> run() {
    if (n_ < 2) return std::nullopt;
    path_ = {0};
    if (dfs(1U, 0)) return path_;
    return std::nullopt;
  }

 private:
  bool dfs(std::uint32_t visited, int last) {
    if (visited == full_) return (out_[static_cast<std::size_t>(last)] & 1U) != 0;
    const std::uint64_t key = (static_cast<std::uint64_t>(visited) << 5) | static_cast<std::uint64_t>(last);
    if (dead_.count(key)) return false;
    const std::uint32_t remaining = full_ & ~visited;
    for (std::uint32_t rest = remaining; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (!(in_[static_cast<std::size_t>(u)] & (remaining | (1U << last)))) return remember(key);
      if (!(out_[static_cast<std::size_t>(u)] & (remaining | 1U))) return remember(key);
    }
    std::vector<std::pair<int, int>> candidates;
    for (std::uint32_t c = out_[static_cast<std::size_t>(last)] & remaining; c; c &= c - 1) {
      const int v = std::countr_zero(c);
      candidates.emplace_back(std::popcount(out_[static_cast<std::size_t>(v)] & remaining), v);
    }
    std::sort(candidates.begin(), candidates.end());
    for (auto [unused, v] : candidates) {
      path_.push_back(v);
      if (dfs(visited | (1U << v), v)) return true;
      path_.pop_back();
    }
    return remember(key);
  }

  bool remember(std::uint64_t key) {
    dead_.insert(key);
    return false;
  }

  int n_;
  std::vector<std::uint32_t> out_;
  std::vector<std::uint32_t> in_;
  std::uint32_t full_ = 0;
  std::vector<Vertex> path_;
  std::unordered_set<std::uint64_t> dead_;
};

}  // namespace detail

/// Exhaustive Hamilton cycle search (DFS from vertex 0 with degree pruning
/// and memoised dead (visited-set, endpoint) states).
inline std::optional<std::vector<Vertex>> find_hamilton_cycle_exact(const Digraph& d) {
  if (d.order() > kHamiltonExactMaxN) {
    throw ResourceError("find_hamilton_cycle_exact: n = " + std::to_string(d.order()) + " exceeds guard " +
                        std::to_string(kHamiltonExactMaxN));
  }
  auto cycle = detail::HamiltonSearch(d).run();
  if (cycle) PHL_ENSURE(validate_hamilton_cycle(d, *cycle), "exact Hamilton cycle must validate");
  return cycle;
}

inline std::optional<std::vector<Vertex>> find_hamilton_cycle_exact(const Graph& g) {
  if (g.order() < 3) return std::nullopt;
  return find_hamilton_cycle_exact(g.as_digraph());
}

struct PancyclicityReport {
  bool pancyclic = false;
  /// has_length[l] for l in [0, n]; entries below 3 are always false.
  std::vector<bool> has_length;
  std::vector<int> missing_lengths;
};

/// Decides, for every l in 3..n, whether d has a directed cycle of length l.
/// Subset DP: reach[S] holds the end vertices of paths that start at min(S)
/// and visit exactly S.
inline PancyclicityReport is_pancyclic_exact(const Digraph& d) {
  const int n = d.order();
  if (n > kPancyclicExactMaxN) {
    throw ResourceError("is_pancyclic_exact: n = " + std::to_string(n) + " exceeds guard " +
                        std::to_string(kPancyclicExactMaxN));
  }
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : d.arcs()) out[static_cast<std::size_t>(u)] |= 1U << v;

  PancyclicityReport report;
  report.has_length.assign(static_cast<std::size_t>(n + 1), false);
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint32_t> reach(states, 0);
  for (int s = 0; s < n; ++s) reach[std::size_t{1} << s] = 1U << s;
  for (std::size_t mask = 1; mask < states; ++mask) {
    const std::uint32_t ends = reach[mask];
    if (!ends) continue;
    const int start = std::countr_zero(static_cast<std::uint32_t>(mask));
    const int len = std::popcount(static_cast<std::uint32_t>(mask));
    const std::uint32_t above = ~((2U << start) - 1U);
    for (std::uint32_t e = ends; e; e &= e - 1) {
      const int v = std::countr_zero(e);
      const std::uint32_t succ = out[static_cast<std::size_t>(v)];
      if (len >= 3 && (succ >> start & 1U)) report.has_length[static_cast<std::size_t>(len)] = true;
      for (std::uint32_t c = succ & above & ~static_cast<std::uint32_t>(mask); c; c &= c - 1) {
        const int w = std::countr_zero(c);
        reach[mask | (std::size_t{1} << w)] |= 1U << w;
      }
    }
  }
  for (int len = 3; len <= n; ++len) {
    if (!report.has_length[static_cast<std::size_t>(len)]) report.missing_lengths.push_back(len);
  }
  report.pancyclic = n >= 3 && report.missing_lengths.empty();
  return report;
}

/// Exact perfect matching search in a k-uniform hypergraph (n <= 7k).
inline std::optional<std::vector<HyperEdge>> find_perfect_matching_hypergraph_exact(const KUniformHypergraph& h) {
  const int n = h.order();
  const int k = h.uniformity();
  if (n > 7 * k || n > 63) {
    throw ResourceError("find_perfect_matching_hypergraph_exact: n = " + std::to_string(n) + " exceeds guard " +
                        std::to_string(std::min(7 * k, 63)));
  }
  if (n % k != 0) return std::nullopt;
  const auto& edges = h.edges();
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::uint64_t m = 0;
    for (Vertex v : edges[i]) m |= 1ULL << v;
    masks.push_back(m);
    incident[static_cast<std::size_t>(edges[i].front())].push_back(static_cast<int>(i));
  }
  // Every edge is indexed under its smallest vertex; the search always covers
  // the smallest uncovered vertex, which must then be that edge's minimum.
  const std::uint64_t full = n == 64 ? ~0ULL : ((1ULL << n) - 1ULL);
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> chosen;
  auto dfs = [&](auto&& self, std::uint64_t covered) -> bool {
    if (covered == full) return true;
    if (dead.count(covered)) return false;
    const int v = std::countr_zero(~covered);
    for (int id : incident[static_cast<std::size_t>(v)]) {
      if (masks[static_cast<std::size_t>(id)] & covered) continue;
      chosen.push_back(id);
      if (self(self, covered | masks[static_cast<std::size_t>(id)])) return true;
      chosen.pop_back();
    }
    dead.insert(covered);
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  std::vector<HyperEdge> matching;
  for (int id : chosen) matching.push_back(edges[static_cast<std::size_t>(id)]);
  PHL_ENSURE(validate_perfect_matching(h, matching), "exact perfect matching must validate");
  return matching;
}

/// Exact loose Hamilton cycle search (n <= 8(k-1)). The cycle is grown as a
/// loose path from a fixed start junction; each step picks an edge through the
/// current end junction and a fresh end junction inside it, and the closing
/// edge must be exactly {end, start} ∪ (all unused vertices).
inline std::optional<std::vector<HyperEdge>> find_loose_hamilton_exact(const KUniformHypergraph& h) {
  const int n = h.order();
  const int k = h.uniformity();
  if (n > 8 * (k - 1) || n > 63) {
    throw ResourceError("find_loose_hamilton_exact: n = " + std::to_string(n) + " exceeds guard " +
                        std::to_string(std::min(8 * (k - 1), 63)));
  }
  if (n == 0 || n % (k - 1) != 0) return std::nullopt;
  const int m = n / (k - 1);
  if (m < 2 || (k == 2 && n < 3)) return std::nullopt;

  const auto& edges = h.edges();
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::uint64_t mask = 0;
    for (Vertex v : edges[i]) {
      mask |= 1ULL << v;
      incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
    masks.push_back(mask);
  }
  const std::uint64_t full = (1ULL << n) - 1ULL;
  auto to_edge = [](std::uint64_t mask) {
    HyperEdge e;
    for (; mask; mask &= mask - 1) e.push_back(std::countr_zero(mask));
    return e;
  };

  std::vector<HyperEdge> sequence;
  std::unordered_set<std::uint64_t> dead;
  int start = -1;
  auto dfs = [&](auto&& self, std::uint64_t used, int end, int placed) -> bool {
    if (placed == m - 1) {
      const std::uint64_t closing = (full & ~used) | (1ULL << end) | (1ULL << start);
      HyperEdge e = to_edge(closing);
      if (static_cast<int>(e.size()) != k || !h.contains(e)) return false;
      sequence.push_back(std::move(e));
      return true;
    }
    const std::uint64_t key = (used << 6) | static_cast<std::uint64_t>(end);
    if (dead.count(key)) return false;
    for (int id : incident[static_cast<std::size_t>(end)]) {
      const std::uint64_t mask = masks[static_cast<std::size_t>(id)];
      const std::uint64_t fresh = mask & ~(1ULL << end);
      if (fresh & used) continue;
      for (std::uint64_t f = fresh; f; f &= f - 1) {
        const int next = std::countr_zero(f);
        sequence.push_back(edges[static_cast<std::size_t>(id)]);
        if (self(self, used | mask, next, placed + 1)) return true;
        sequence.pop_back();
      }
    }
    dead.insert(key);
    return false;
  };

  // Rotate so that the first edge contains vertex 0; try every ordered pair
  // of junctions inside it.
  for (int id : incident[0]) {
    const std::uint64_t mask = masks[static_cast<std::size_t>(id)];
    for (std::uint64_t a = mask; a; a &= a - 1) {
      for (std::uint64_t b = mask; b; b &= b - 1) {
        const int j0 = std::countr_zero(a);
        const int j1 = std::countr_zero(b);
        if (j0 == j1) continue;
        start = j0;
        dead.clear();
        sequence = {edges[static_cast<std::size_t>(id)]};
        if (dfs(dfs, mask, j1, 1)) {
          PHL_ENSURE(validate_loose_hamilton_cycle(h, sequence), "exact loose Hamilton cycle must validate");
          return sequence;
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bipartite matching with Hall certificates

enum class MatchingStatus { perfect, deficient };
enum class CertificateSide { a, b };

struct MatchingResult {
  MatchingStatus status = MatchingStatus::deficient;
  /// Matched (index in A, index in B) pairs, sorted by A index.
  std::vector<BipartiteGraph::IndexEdge> matching;
  /// Hall violator (indices on `certificate_side`), present iff deficient:
  /// |N(W)| < |W|.
  std::optional<std::vector<int>> certificate;
  CertificateSide certificate_side = CertificateSide::a;

  bool perfect() const { return status == MatchingStatus::perfect; }
};

/// Distinct neighbours of a set of indices on one side.
inline std::vector<int> neighborhood(const BipartiteGraph& g, std::span<const int> set, CertificateSide side) {
  std::vector<int> out;
  for (int x : set) {
    const auto& row = side == CertificateSide::a ? g.neighbors_of_a(x) : g.neighbors_of_b(x);
    out.insert(out.end(), row.begin(), row.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Maximum matching by Hopcroft-Karp. When not perfect, the certificate is
/// the set of vertices reachable by alternating paths from the unmatched
/// vertices of part A (or of part B if A is fully matched).
inline MatchingResult bipartite_max_matching(const BipartiteGraph& g) {
  const int na = g.size_a();
  const int nb = g.size_b();
  constexpr int kFree = -1;
  std::vector<int> mate_a(static_cast<std::size_t>(na), kFree), mate_b(static_cast<std::size_t>(nb), kFree);
  std::vector<int> dist(static_cast<std::size_t>(na));

  auto bfs = [&]() {
    std::queue<int> q;
    bool found = false;
    for (int a = 0; a < na; ++a) {
      if (mate_a[static_cast<std::size_t>(a)] == kFree) {
        dist[static_cast<std::size_t>(a)] = 0;
        q.push(a);
      } else {
        dist[static_cast<std::size_t>(a)] = -1;
      }
    }
    while (!q.empty()) {
      const int a = q.front();
      q.pop();
      for (int b : g.neighbors_of_a(a)) {
        const int next = mate_b[static_cast<std::size_t>(b)];
        if (next == kFree) {
          found = true;
        } else if (dist[static_cast<std::size_t>(next)] < 0) {
          dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(a)] + 1;
          q.push(next);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, int a) -> bool {
    for (int b : g.neighbors_of_a(a)) {
      const int next = mate_b[static_cast<std::size_t>(b)];
      if (next == kFree ||
          (dist[static_cast<std::size_t>(next)] == dist[static_cast<std::size_t>(a)] + 1 && self(self, next))) {
        mate_a[static_cast<std::size_t>(a)] = b;
        mate_b[static_cast<std::size_t>(b)] = a;
        return true;
      }
    }
    dist[static_cast<std::size_t>(a)] = -1;
    return false;
  };
  while (bfs()) {
    for (int a = 0; a < na; ++a) {
      if (mate_a[static_cast<std::size_t>(a)] == kFree) dfs(dfs, a);
    }
  }

  MatchingResult result;
  for (int a = 0; a < na; ++a) {
    if (mate_a[static_cast<std::size_t>(a)] != kFree) result.matching.emplace_back(a, mate_a[static_cast<std::size_t>(a)]);
  }
  const bool a_full = static_cast<int>(result.matching.size()) == na;
  const bool b_full = static_cast<int>(result.matching.size()) == nb;
  if (a_full && b_full) {
    result.status = MatchingStatus::perfect;
    return result;
  }

  result.status = MatchingStatus::deficient;
  result.certificate_side = a_full ? CertificateSide::b : CertificateSide::a;
  const bool from_a = result.certificate_side == CertificateSide::a;
  const int own = from_a ? na : nb;
  const auto& own_mate = from_a ? mate_a : mate_b;
  const auto& other_mate = from_a ? mate_b : mate_a;
  std::vector<char> in_w(static_cast<std::size_t>(own), 0);
  std::vector<int> stack;
  for (int x = 0; x < own; ++x) {
    if (own_mate[static_cast<std::size_t>(x)] == kFree) {
      in_w[static_cast<std::size_t>(x)] = 1;
      stack.push_back(x);
    }
  }
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    const auto& row = from_a ? g.neighbors_of_a(x) : g.neighbors_of_b(x);
    for (int y : row) {
      const int back = other_mate[static_cast<std::size_t>(y)];
      if (back != kFree && !in_w[static_cast<std::size_t>(back)]) {
        in_w[static_cast<std::size_t>(back)] = 1;
        stack.push_back(back);
      }
    }
  }
  std::vector<int> w;
  for (int x = 0; x < own; ++x) {
    if (in_w[static_cast<std::size_t>(x)]) w.push_back(x);
  }
  PHL_ENSURE(neighborhood(g, w, result.certificate_side).size() < w.size(),
             "Hall certificate must satisfy |N(W)| < |W|");
  result.certificate = std::move(w);
  return result;
}

// ---------------------------------------------------------------------------
// Vertex-disjoint paths

struct PathCount {
  int count = 0;
  /// True when the count comes from the greedy length-bounded packing and
  /// is only a lower bound on the true maximum.
  bool lower_bound = false;
};

namespace detail {

/// Vertex-split network: v_in = 2v, v_out = 2v+1; internal vertices carry
/// capacity 1, s and t are uncapped. Arcs are uncapped too, except s->t which
/// carries one path, so every finite cut consists of vertices.
inline MaxFlow split_network(const Digraph& d, Vertex s, Vertex t) {
  const int n = d.order();
  MaxFlow flow(2 * n);
  for (int v = 0; v < n; ++v) flow.add_edge(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
  for (auto [u, v] : d.arcs()) flow.add_edge(2 * u + 1, 2 * v, (u == s && v == t) ? 1 : n);
  return flow;
}

}  // namespace detail

/// Maximum number of internally vertex-disjoint s->t paths (Menger, via
/// unit-capacity vertex-split max flow; the arc s->t counts as one path).
/// With maxlen, a greedy family of shortest disjoint paths of length at most
/// maxlen is packed instead and the count is flagged as a lower bound.
inline PathCount vertex_disjoint_path_count(const Digraph& d, Vertex s, Vertex t,
                                            std::optional<int> maxlen = std::nullopt) {
  if (s == t) throw ParameterError("vertex_disjoint_path_count: s and t must differ");
  detail::check_vertex(d.order(), s, "vertex_disjoint_path_count");
  detail::check_vertex(d.order(), t, "vertex_disjoint_path_count");
  if (!maxlen) {
    MaxFlow flow = detail::split_network(d, s, t);
    return {flow.run(2 * s + 1, 2 * t), false};
  }
  const int n = d.order();
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  bool direct_used = false;
  PathCount result{0, true};
  while (true) {
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    bool reached = false;
    while (!q.empty() && !reached) {
      const int u = q.front();
      q.pop();
      if (dist[static_cast<std::size_t>(u)] >= *maxlen) continue;
      for (Vertex v : d.out_neighbors(u)) {
        if (v == t) {
          if (u == s && direct_used) continue;
          parent[static_cast<std::size_t>(t)] = u;
          dist[static_cast<std::size_t>(t)] = dist[static_cast<std::size_t>(u)] + 1;
          reached = true;
          break;
        }
        if (v == s || blocked[static_cast<std::size_t>(v)] || dist[static_cast<std::size_t>(v)] >= 0) continue;
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(v)] = u;
        q.push(v);
      }
    }
    if (!reached) break;
    ++result.count;
    const int before_t = parent[static_cast<std::size_t>(t)];
    if (before_t == s) direct_used = true;
    for (int v = before_t; v != s; v = parent[static_cast<std::size_t>(v)]) blocked[static_cast<std::size_t>(v)] = 1;
  }
  return result;
}

struct VertexSeparator {
  int paths = 0;
  /// Minimum set of vertices (excluding s, t) meeting every s->t path.
  /// Empty when s -> t is an arc (no separator exists) or t is unreachable.
  std::vector<Vertex> separator;
};

/// Minimum s-t vertex separator for a non-adjacent ordered pair.
inline VertexSeparator min_vertex_separator(const Digraph& d, Vertex s, Vertex t, int limit) {
  MaxFlow flow = detail::split_network(d, s, t);
  VertexSeparator out;
  out.paths = flow.run(2 * s + 1, 2 * t, limit);
  if (out.paths >= limit || d.has_arc(s, t)) return out;
  const auto seen = flow.residual_reachable(2 * s + 1);
  for (int v = 0; v < d.order(); ++v) {
    if (v != s && v != t && seen[static_cast<std::size_t>(2 * v)] && !seen[static_cast<std::size_t>(2 * v + 1)]) {
      out.separator.push_back(v);
    }
  }
  PHL_ENSURE(static_cast<int>(out.separator.size()) == out.paths, "min cut size must equal flow value");
  return out;
}

}  // namespace phl
