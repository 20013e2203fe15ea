#pragma once

// Extremal (tightness) instances and seeded dense random bases.

#include <cmath>
#include <cstdint>

#include "phl/combinatorics.hpp"
#include "phl/rng.hpp"
#include "phl/structures.hpp"

namespace phl {

struct DenseBaseConfig {
  int n = 0;
  double alpha = 0.5;
  std::uint64_t seed = 0;
};

/// ceil(alpha * n) with a small tolerance so that e.g. 0.3 * 10 yields 3.
inline int degree_target(double alpha, int n) {
  return static_cast<int>(std::ceil(alpha * n - 1e-9));
}

/// K_{a,b}; part one is [0, a), part two [a, a + b).
inline Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw ParameterError("complete_bipartite_graph: parts must be non-empty");
  std::vector<VertexPair> edges;
  edges.reserve(static_cast<std::size_t>(a) * b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) edges.emplace_back(u, v);
  }
  return Graph(a + b, edges);
}

/// Symmetric digraph of K_{a,b} (both orientations of every edge).
inline Digraph complete_bipartite_digraph(int a, int b) { return complete_bipartite_graph(a, b).as_digraph(); }

/// Complete k-uniform hypergraph on n vertices.
inline KUniformHypergraph complete_hypergraph(int k, int n) {
  if (binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)) > 5'000'000) {
    throw ResourceError("complete_hypergraph: too many edges");
  }
  std::vector<HyperEdge> edges;
  for_each_subset(n, k, [&](std::span<const int> s) { edges.emplace_back(s.begin(), s.end()); });
  return KUniformHypergraph(n, k, std::move(edges));
}

/// Two parts of sizes n and 2kn, all k-sets meeting both parts. Part one is
/// [0, n).
inline KUniformHypergraph complete_bipartite_hypergraph(int k, int n) {
  if (k < 3) throw ParameterError("complete_bipartite_hypergraph: k must be at least 3");
  if (n < 1) throw ParameterError("complete_bipartite_hypergraph: n must be positive");
  const int total = (2 * k + 1) * n;
  if (binomial(static_cast<std::uint64_t>(total), static_cast<std::uint64_t>(k)) > 5'000'000) {
    throw ResourceError("complete_bipartite_hypergraph: too many edges");
  }
  std::vector<HyperEdge> edges;
  for_each_subset(total, k, [&](std::span<const int> s) {
    const bool meets_one = s.front() < n;
    const bool meets_two = s.back() >= n;
    if (meets_one && meets_two) edges.emplace_back(s.begin(), s.end());
  });
  return KUniformHypergraph(total, k, std::move(edges));
}

/// Rotational regular tournament on 2d+1 vertices: i beats i+1, ..., i+d.
inline Tournament regular_tournament(int d) {
  if (d < 0) throw ParameterError("regular_tournament: d must be non-negative");
  const int n = 2 * d + 1;
  std::vector<VertexPair> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * d);
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= d; ++j) arcs.emplace_back(i, (i + j) % n);
  }
  Tournament t(n, arcs);
  for (int v = 0; v < n; ++v) {
    PHL_ENSURE(t.in_degree(v) == d && t.out_degree(v) == d, "regular tournament degrees");
  }
  return t;
}

/// Transitive tournament: i beats j iff i < j.
inline Tournament transitive_tournament(int n) {
  std::vector<VertexPair> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
  }
  return Tournament(n, arcs);
}

/// r copies of regular_tournament(d); copy c occupies [c(2d+1), (c+1)(2d+1))
/// and every vertex of a lower copy beats every vertex of a higher copy.
inline Tournament transitive_cluster_tournament(int r, int d) {
  if (r < 1) throw ParameterError("transitive_cluster_tournament: r must be positive");
  if (d < 0) throw ParameterError("transitive_cluster_tournament: d must be non-negative");
  const int size = 2 * d + 1;
  const int n = r * size;
  std::vector<VertexPair> arcs;
  for (int c = 0; c < r; ++c) {
    const int base = c * size;
    for (int i = 0; i < size; ++i) {
      for (int j = 1; j <= d; ++j) arcs.emplace_back(base + i, base + (i + j) % size);
    }
    for (int v = base; v < base + size; ++v) {
      for (int w = base + size; w < n; ++w) arcs.emplace_back(v, w);
    }
  }
  return Tournament(n, arcs);
}

/// Uniformly random tournament (one fair coin per pair, pairs in lex order).
inline Tournament random_tournament(int n, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<VertexPair> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) arcs.push_back(rng.coin() ? VertexPair{i, j} : VertexPair{j, i});
  }
  return Tournament(n, arcs);
}

/// Every vertex draws ceil(alpha n) distinct uniform out-neighbours and as
/// many in-neighbours; the digraph is the union of all draws.
inline Digraph random_min_degree_digraph(const DenseBaseConfig& cfg) {
  const int n = cfg.n;
  if (n < 2) throw ParameterError("random_min_degree_digraph: need n >= 2");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw ParameterError("random_min_degree_digraph: alpha must lie in (0,1)");
  const int target = degree_target(cfg.alpha, n);
  if (target > n - 1) {
    throw ParameterError("random_min_degree_digraph: ceil(alpha n) = " + std::to_string(target) +
                         " exceeds n - 1");
  }
  CounterRng rng(cfg.seed);
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
  const auto others = [&](Vertex v, std::uint64_t idx) {
    const auto w = static_cast<Vertex>(idx);
    return w < v ? w : w + 1;
  };
  for (Vertex v = 0; v < n; ++v) {
    for (auto idx : floyd_sample(rng, static_cast<std::uint64_t>(n - 1), static_cast<std::uint64_t>(target))) {
      m[static_cast<std::size_t>(v) * n + others(v, idx)] = 1;
    }
    for (auto idx : floyd_sample(rng, static_cast<std::uint64_t>(n - 1), static_cast<std::uint64_t>(target))) {
      m[static_cast<std::size_t>(others(v, idx)) * n + v] = 1;
    }
  }
  Digraph d = Digraph::from_matrix(n, std::move(m));
  PHL_ENSURE(d.min_semidegree() >= target, "random_min_degree_digraph minimum degree");
  return d;
}

/// For every (k-1)-subset draw ceil(alpha * n_total) distinct completing
/// vertices; the hypergraph is the union of all completions.
inline KUniformHypergraph random_min_qdegree_hypergraph(int k, int n_total, double alpha, std::uint64_t seed) {
  if (k < 2) throw ParameterError("random_min_qdegree_hypergraph: k must be at least 2");
  if (n_total < k) throw ParameterError("random_min_qdegree_hypergraph: need n_total >= k");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("random_min_qdegree_hypergraph: alpha must lie in (0,1)");
  const int target = degree_target(alpha, n_total);
  const int available = n_total - k + 1;
  if (target > available) {
    throw ParameterError("random_min_qdegree_hypergraph: ceil(alpha n) = " + std::to_string(target) +
                         " exceeds n_total - k + 1 = " + std::to_string(available));
  }
  if (binomial(static_cast<std::uint64_t>(n_total), static_cast<std::uint64_t>(k - 1)) > 2'000'000) {
    throw ResourceError("random_min_qdegree_hypergraph: too many (k-1)-subsets");
  }
  CounterRng rng(seed);
  std::vector<HyperEdge> edges;
  std::vector<Vertex> rest;
  for_each_subset(n_total, k - 1, [&](std::span<const int> s) {
    rest.clear();
    std::size_t j = 0;
    for (Vertex v = 0; v < n_total; ++v) {
      if (j < s.size() && s[j] == v) {
        ++j;
      } else {
        rest.push_back(v);
      }
    }
    for (auto idx : floyd_sample(rng, rest.size(), static_cast<std::uint64_t>(target))) {
      HyperEdge e(s.begin(), s.end());
      e.push_back(rest[static_cast<std::size_t>(idx)]);
      std::sort(e.begin(), e.end());
      edges.push_back(std::move(e));
    }
  });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return KUniformHypergraph(n_total, k, std::move(edges));
}

/// Bipartite graph with parts of size n (A = [0,n), B = [n,2n)): each vertex
/// draws ceil(alpha n) distinct uniform neighbours on the other side.
inline BipartiteGraph random_min_degree_bipartite(int n, double alpha, std::uint64_t seed) {
  if (n < 1) throw ParameterError("random_min_degree_bipartite: n must be positive");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("random_min_degree_bipartite: alpha must lie in (0,1]");
  const int target = degree_target(alpha, n);
  CounterRng rng(seed);
  std::vector<BipartiteGraph::IndexEdge> edges;
  for (int a = 0; a < n; ++a) {
    for (auto b : floyd_sample(rng, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(target))) {
      edges.emplace_back(a, static_cast<int>(b));
    }
  }
  for (int b = 0; b < n; ++b) {
    for (auto a : floyd_sample(rng, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(target))) {
      edges.emplace_back(static_cast<int>(a), b);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<Vertex> pa(static_cast<std::size_t>(n)), pb(static_cast<std::size_t>(n));
  std::iota(pa.begin(), pa.end(), 0);
  std::iota(pb.begin(), pb.end(), n);
  return BipartiteGraph(std::move(pa), std::move(pb), std::move(edges));
}

/// Uniform perfect matching between [0,n) and [0,n) as (a, b) index pairs,
/// sorted by a.
inline std::vector<BipartiteGraph::IndexEdge> random_perfect_matching(int n, CounterRng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  shuffle(perm, rng);
  std::vector<BipartiteGraph::IndexEdge> out;
  for (int a = 0; a < n; ++a) out.emplace_back(a, perm[static_cast<std::size_t>(a)]);
  return out;
}

}  // namespace phl
