#pragma once

// Tournament analysis: extreme-degree census, core sets, t-strong
// connectivity, short internally disjoint paths, arc-disjoint Hamilton
// cycles and diameter.

#include <bit>
#include <limits>
#include <optional>
#include <queue>

#include "phl/exact.hpp"
#include "phl/structures.hpp"

namespace phl {

/// Diameter of a digraph that is not strongly connected.
inline constexpr int kInfiniteDiameter = std::numeric_limits<int>::max();

inline constexpr int kArcDisjointMaxN = 14;

enum class DegreeSide { in, out };

/// Vertices whose in- (or out-) degree is below (k-1)/2.
inline std::vector<Vertex> extreme_degree_census(const Tournament& t, int k, DegreeSide side = DegreeSide::in) {
  if (k < 1 || k > t.order()) throw ParameterError("extreme_degree_census: need 1 <= k <= n");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    const int deg = side == DegreeSide::in ? t.in_degree(v) : t.out_degree(v);
    if (2 * deg < k - 1) out.push_back(v);
  }
  return out;
}

/// t vertices with in- and out-degree both at least n/6 (at least n/3
/// vertices qualify in every tournament).
inline std::vector<Vertex> select_core_set(const Tournament& tour, int t) {
  const int n = tour.order();
  if (t < 0 || 3 * t > n) throw ParameterError("select_core_set: need 0 <= t <= n/3");
  std::vector<Vertex> qualified;
  for (Vertex v = 0; v < n; ++v) {
    if (6 * tour.in_degree(v) >= n && 6 * tour.out_degree(v) >= n) qualified.push_back(v);
  }
  PHL_ENSURE(3 * static_cast<int>(qualified.size()) >= n, "at least n/3 vertices must have both degrees >= n/6");
  qualified.resize(static_cast<std::size_t>(t));
  return qualified;
}

/// BFS distances from s; -1 where unreachable.
inline std::vector<int> bfs_distances(const Digraph& d, Vertex s, const std::vector<char>* deleted = nullptr) {
  std::vector<int> dist(static_cast<std::size_t>(d.order()), -1);
  std::queue<Vertex> q;
  dist[static_cast<std::size_t>(s)] = 0;
  q.push(s);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex v : d.out_neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] >= 0) continue;
      if (deleted && (*deleted)[static_cast<std::size_t>(v)]) continue;
      dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
      q.push(v);
    }
  }
  return dist;
}

/// Largest shortest-path distance over ordered pairs; kInfiniteDiameter if
/// some pair is unreachable.
inline int diameter(const Digraph& d) {
  int best = 0;
  for (Vertex s = 0; s < d.order(); ++s) {
    for (int x : bfs_distances(d, s)) {
      if (x < 0) return kInfiniteDiameter;
      best = std::max(best, x);
    }
  }
  return best;
}

inline int diameter(const Tournament& t) { return diameter(t.digraph()); }

/// Strong connectivity of d minus `deleted`.
inline bool strongly_connected_without(const Digraph& d, const std::vector<char>& deleted) {
  Vertex root = -1;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (!deleted[static_cast<std::size_t>(v)]) {
      root = v;
      break;
    }
  }
  if (root < 0) return true;
  const auto fwd = bfs_distances(d, root, &deleted);
  std::vector<VertexPair> rev;
  for (auto [u, v] : d.arcs()) rev.emplace_back(v, u);
  const auto back = bfs_distances(Digraph(d.order(), rev), root, &deleted);
  for (Vertex v = 0; v < d.order(); ++v) {
    if (deleted[static_cast<std::size_t>(v)]) continue;
    if (fwd[static_cast<std::size_t>(v)] < 0 || back[static_cast<std::size_t>(v)] < 0) return false;
  }
  return true;
}

struct ConnectivityReport {
  int t = 1;
  bool connected = false;
  /// t-1 vertices whose deletion leaves a digraph that is not strongly
  /// connected (present iff !connected).
  std::optional<std::vector<Vertex>> witness;
  int diameter = 0;
};

/// t-strong connectivity via Menger: every ordered non-adjacent pair (u, v)
/// needs t internally disjoint u->v paths. A failing pair's minimum vertex
/// separator, padded to t-1 vertices, is the witness.
inline ConnectivityReport is_t_strongly_connected(const Digraph& d, int t) {
  const int n = d.order();
  if (t < 1) throw ParameterError("is_t_strongly_connected: t must be positive");
  if (n <= t) throw ParameterError("is_t_strongly_connected: need n > t");
  ConnectivityReport report;
  report.t = t;
  report.diameter = diameter(d);
  if (report.diameter == kInfiniteDiameter) {
    // Already disconnected: pad with any t-1 vertices other than a bad pair.
    std::optional<VertexPair> bad;
    for (Vertex s = 0; s < n && !bad; ++s) {
      const auto dist = bfs_distances(d, s);
      for (Vertex v = 0; v < n; ++v) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          bad.emplace(s, v);
          break;
        }
      }
    }
    std::vector<Vertex> pad;
    for (Vertex x = 0; x < n && static_cast<int>(pad.size()) < t - 1; ++x) {
      if (x != bad->first && x != bad->second) pad.push_back(x);
    }
    report.witness = std::move(pad);
  } else if (t > 1) {
    // For t = 1 a finite diameter already means strongly connected.
    for (Vertex u = 0; u < n && !report.witness; ++u) {
      for (Vertex v = 0; v < n && !report.witness; ++v) {
        if (u == v || d.has_arc(u, v)) continue;
        auto sep = min_vertex_separator(d, u, v, t);
        if (sep.paths >= t) continue;
        std::vector<Vertex> w = std::move(sep.separator);
        std::vector<char> in_w(static_cast<std::size_t>(n), 0);
        for (Vertex x : w) in_w[static_cast<std::size_t>(x)] = 1;
        for (Vertex x = 0; x < n && static_cast<int>(w.size()) < t - 1; ++x) {
          if (x != u && x != v && !in_w[static_cast<std::size_t>(x)]) w.push_back(x);
        }
        std::sort(w.begin(), w.end());
        report.witness = std::move(w);
      }
    }
  }
  report.connected = !report.witness.has_value();
  if (report.witness) {
    std::vector<char> deleted(static_cast<std::size_t>(n), 0);
    for (Vertex x : *report.witness) deleted[static_cast<std::size_t>(x)] = 1;
    PHL_ENSURE(static_cast<int>(report.witness->size()) == t - 1, "witness must have t-1 vertices");
    PHL_ENSURE(!strongly_connected_without(d, deleted), "deleting the witness must disconnect");
  }
  return report;
}

inline ConnectivityReport is_t_strongly_connected(const Tournament& tour, int t) {
  return is_t_strongly_connected(tour.digraph(), t);
}

/// Internally vertex-disjoint w->v paths of length <= maxlen, collected in
/// order: the arc w->v, length-2 paths through N+(w) ∩ N-(v), length-3 paths
/// through a maximum set of independent arcs from U+ = N+(w) to U- = N-(v),
/// and (maxlen 4) length-4 paths through a fresh middle vertex. Stops at
/// `target` paths.
inline std::vector<std::vector<Vertex>> short_disjoint_paths(const Digraph& d, Vertex w, Vertex v, int target,
                                                             int maxlen = 3) {
  const int n = d.order();
  detail::check_vertex(n, w, "short_disjoint_paths");
  detail::check_vertex(n, v, "short_disjoint_paths");
  if (w == v) throw ParameterError("short_disjoint_paths: w and v must differ");
  if (maxlen != 3 && maxlen != 4) throw ParameterError("short_disjoint_paths: maxlen must be 3 or 4");
  std::vector<std::vector<Vertex>> family;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[static_cast<std::size_t>(w)] = used[static_cast<std::size_t>(v)] = 1;
  auto full = [&]() { return static_cast<int>(family.size()) >= target; };
  auto take = [&](std::vector<Vertex> p) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) used[static_cast<std::size_t>(p[i])] = 1;
    family.push_back(std::move(p));
  };

  if (!full() && d.has_arc(w, v)) take({w, v});
  for (Vertex x : d.out_neighbors(w)) {
    if (full()) break;
    if (!used[static_cast<std::size_t>(x)] && d.has_arc(x, v)) take({w, x, v});
  }

  if (!full()) {
    std::vector<Vertex> u_plus;
    std::vector<Vertex> u_minus;
    for (Vertex x : d.out_neighbors(w)) {
      if (!used[static_cast<std::size_t>(x)]) u_plus.push_back(x);
    }
    for (Vertex y : d.in_neighbors(v)) {
      if (!used[static_cast<std::size_t>(y)]) u_minus.push_back(y);
    }
    // After the length-2 pass U+ and U- are disjoint, so a matching of arcs
    // U+ -> U- is a set of independent arcs.
    std::vector<BipartiteGraph::IndexEdge> arcs;
    for (std::size_t i = 0; i < u_plus.size(); ++i) {
      for (std::size_t j = 0; j < u_minus.size(); ++j) {
        if (d.has_arc(u_plus[i], u_minus[j])) arcs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
    const auto mr = bipartite_max_matching(BipartiteGraph(u_plus, u_minus, std::move(arcs)));
    for (auto [i, j] : mr.matching) {
      if (full()) break;
      take({w, u_plus[static_cast<std::size_t>(i)], u_minus[static_cast<std::size_t>(j)], v});
    }
  }

  if (maxlen == 4) {
    // Each remaining in-neighbour y of v is tried as the last hop; the middle
    // vertex z comes from vertices not yet on any path.
    for (Vertex y : d.in_neighbors(v)) {
      if (full()) break;
      if (used[static_cast<std::size_t>(y)]) continue;
      bool found = false;
      for (Vertex x : d.out_neighbors(w)) {
        if (used[static_cast<std::size_t>(x)] || x == y) continue;
        for (Vertex z : d.out_neighbors(x)) {
          if (used[static_cast<std::size_t>(z)] || z == y || !d.has_arc(z, y)) continue;
          take({w, x, z, y, v});
          found = true;
          break;
        }
        if (found) break;
      }
    }
  }

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& p : family) {
    PHL_ENSURE(validate_path(d, p) && static_cast<int>(p.size()) - 1 <= maxlen, "short path must validate");
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      PHL_ENSURE(!seen[static_cast<std::size_t>(p[i])], "paths must be internally disjoint");
      seen[static_cast<std::size_t>(p[i])] = 1;
    }
  }
  return family;
}

inline std::vector<std::vector<Vertex>> short_disjoint_paths(const Tournament& t, Vertex w, Vertex v, int target,
                                                             int maxlen = 3) {
  return short_disjoint_paths(t.digraph(), w, v, target, maxlen);
}

/// q pairwise arc-disjoint Hamilton cycles by layered exact backtracking:
/// every Hamilton cycle of the current layer is tried in turn, its arcs are
/// removed, and the next layer is searched. n <= 14.
inline std::optional<std::vector<std::vector<Vertex>>> arc_disjoint_hamilton_cycles(const Tournament& t, int q) {
  const int n = t.order();
  if (q < 1) throw ParameterError("arc_disjoint_hamilton_cycles: q must be positive");
  if (n > kArcDisjointMaxN) {
    throw ResourceError("arc_disjoint_hamilton_cycles: n = " + std::to_string(n) + " exceeds guard " +
                        std::to_string(kArcDisjointMaxN));
  }
  if (n < 3) return std::nullopt;
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : t.digraph().arcs()) out[static_cast<std::size_t>(u)] |= 1U << v;
  const std::uint32_t all = (1U << n) - 1U;

  std::vector<std::vector<Vertex>> layers;
  std::vector<Vertex> path;
  // Enumerates Hamilton cycles from vertex 0 in the current arc set, calling
  // next_layer on each; stops when it returns true.
  auto layer = [&](auto&& self, int remaining) -> bool {
    if (remaining == 0) return true;
    path.assign(1, 0);
    auto dfs = [&](auto&& rec, std::uint32_t visited, int last) -> bool {
      if (visited == all) {
        if (!(out[static_cast<std::size_t>(last)] & 1U)) return false;
        std::vector<Vertex> cycle = path;
        const std::vector<Vertex> saved_path = path;
        for (int i = 0; i < n; ++i) {
          out[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] &=
              ~(1U << cycle[static_cast<std::size_t>((i + 1) % n)]);
        }
        layers.push_back(cycle);
        if (self(self, remaining - 1)) return true;
        layers.pop_back();
        for (int i = 0; i < n; ++i) {
          out[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] |=
              1U << cycle[static_cast<std::size_t>((i + 1) % n)];
        }
        path = saved_path;
        return false;
      }
      const std::uint32_t rest = all & ~visited;
      for (std::uint32_t r = rest; r; r &= r - 1) {
        const int u = std::countr_zero(r);
        if (!(out[static_cast<std::size_t>(u)] & (rest | 1U))) return false;
      }
      for (std::uint32_t c = out[static_cast<std::size_t>(last)] & rest; c; c &= c - 1) {
        const int v = std::countr_zero(c);
        path.push_back(v);
        if (rec(rec, visited | (1U << v), v)) return true;
        path.pop_back();
      }
      return false;
    };
    return dfs(dfs, 1U, 0);
  };
  if (!layer(layer, q)) return std::nullopt;

  std::vector<char> used(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const auto& c : layers) {
    PHL_ENSURE(validate_hamilton_cycle(t.digraph(), c), "each layer must be a Hamilton cycle");
    for (int i = 0; i < n; ++i) {
      auto& cell = used[static_cast<std::size_t>(c[static_cast<std::size_t>(i)]) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(c[static_cast<std::size_t>((i + 1) % n)])];
      PHL_ENSURE(!cell, "cycles must be arc-disjoint");
      cell = 1;
    }
  }
  return layers;
}

}  // namespace phl
