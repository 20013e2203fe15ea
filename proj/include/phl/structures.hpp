#pragma once

// Core combinatorial types. Vertices are dense labels [0, n). Every type is
// immutable after construction; derived structures are built as new values.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "phl/combinatorics.hpp"
#include "phl/errors.hpp"

namespace phl {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;
using HyperEdge = std::vector<Vertex>;

namespace detail {

inline void check_vertex(int n, Vertex v, const char* what) {
  if (v < 0 || v >= n) {
    throw ParameterError(std::string(what) + ": vertex " + std::to_string(v) +
                         " outside [0, " + std::to_string(n) + ")");
  }
}

inline std::vector<std::vector<Vertex>> rows_from_matrix(int n, const std::vector<std::uint8_t>& adj,
                                                         bool transpose) {
  std::vector<std::vector<Vertex>> rows(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const std::size_t at = transpose ? static_cast<std::size_t>(v) * n + u
                                       : static_cast<std::size_t>(u) * n + v;
      if (adj[at]) rows[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  return rows;
}

}  // namespace detail

/// Directed graph with dense adjacency. 2-cycles are allowed; loops are not.
class Digraph {
 public:
  Digraph() = default;

  Digraph(int n, std::span<const VertexPair> arcs) : n_(n) {
    if (n < 0) throw ParameterError("Digraph: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [u, v] : arcs) {
      detail::check_vertex(n, u, "Digraph");
      detail::check_vertex(n, v, "Digraph");
      if (u == v) throw ParameterError("Digraph: self-loop at " + std::to_string(u));
      auto& cell = adj_[index(u, v)];
      if (cell) {
        throw ParameterError("Digraph: duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
      }
      cell = 1;
    }
    finish();
  }

  Digraph(int n, std::initializer_list<VertexPair> arcs)
      : Digraph(n, std::span<const VertexPair>(arcs.begin(), arcs.size())) {}

  /// Build from an n*n row-major 0/1 matrix. The diagonal must be zero.
  static Digraph from_matrix(int n, std::vector<std::uint8_t> matrix) {
    if (matrix.size() != static_cast<std::size_t>(n) * n) {
      throw ParameterError("Digraph::from_matrix: size mismatch");
    }
    Digraph d;
    d.n_ = n;
    d.adj_ = std::move(matrix);
    for (int v = 0; v < n; ++v) {
      if (d.adj_[d.index(v, v)]) throw ParameterError("Digraph: self-loop at " + std::to_string(v));
    }
    for (auto& cell : d.adj_) cell = cell ? 1 : 0;
    d.finish();
    return d;
  }

  static Digraph empty(int n) { return from_matrix(n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0)); }

  static Digraph complete(int n) {
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 1);
    for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(v) * n + v] = 0;
    return from_matrix(n, std::move(m));
  }

  static Digraph directed_cycle(int n) {
    std::vector<VertexPair> arcs;
    for (int v = 0; v < n && n >= 2; ++v) arcs.emplace_back(v, (v + 1) % n);
    return Digraph(n, arcs);
  }

  int order() const { return n_; }
  std::size_t arc_count() const { return arc_count_; }

  bool has_arc(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return adj_[index(u, v)] != 0;
  }

  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_neighbors(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_neighbors(v).size()); }

  /// min over vertices of min(indegree, outdegree); 0 for the empty digraph.
  int min_semidegree() const {
    if (n_ == 0) return 0;
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min({best, in_degree(v), out_degree(v)});
    return best;
  }

  /// Arcs in lexicographic order.
  std::vector<VertexPair> arcs() const {
    std::vector<VertexPair> out;
    out.reserve(arc_count_);
    for (int u = 0; u < n_; ++u) {
      for (Vertex v : out_neighbors(u)) out.emplace_back(u, v);
    }
    return out;
  }

  const std::vector<std::uint8_t>& matrix() const { return adj_; }

  /// Subdigraph induced by `keep`; vertex i of the result is keep[i].
  Digraph induced(std::span<const Vertex> keep) const {
    const int m = static_cast<int>(keep.size());
    std::vector<std::uint8_t> sub(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j && has_arc(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)])) {
          sub[static_cast<std::size_t>(i) * m + j] = 1;
        }
      }
    }
    return from_matrix(m, std::move(sub));
  }

  /// Union with another digraph on the same vertex set.
  Digraph united(const Digraph& other) const {
    if (other.n_ != n_) throw ParameterError("Digraph::united: vertex counts differ");
    std::vector<std::uint8_t> m = adj_;
    for (std::size_t i = 0; i < m.size(); ++i) m[i] |= other.adj_[i];
    return from_matrix(n_, std::move(m));
  }

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

  void finish() {
    out_ = detail::rows_from_matrix(n_, adj_, false);
    in_ = detail::rows_from_matrix(n_, adj_, true);
    arc_count_ = 0;
    for (const auto& row : out_) arc_count_ += row.size();
  }

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
};

/// Simple undirected graph.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::span<const VertexPair> edges) {
    if (n < 0) throw ParameterError("Graph: negative vertex count");
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : edges) {
      detail::check_vertex(n, u, "Graph");
      detail::check_vertex(n, v, "Graph");
      if (u == v) throw ParameterError("Graph: self-loop at " + std::to_string(u));
      auto& cell = m[static_cast<std::size_t>(u) * n + v];
      if (cell) {
        throw ParameterError("Graph: duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      }
      cell = 1;
      m[static_cast<std::size_t>(v) * n + u] = 1;
    }
    sym_ = Digraph::from_matrix(n, std::move(m));
  }

  Graph(int n, std::initializer_list<VertexPair> edges)
      : Graph(n, std::span<const VertexPair>(edges.begin(), edges.size())) {}

  int order() const { return sym_.order(); }
  std::size_t edge_count() const { return sym_.arc_count() / 2; }
  bool has_edge(Vertex u, Vertex v) const { return sym_.has_arc(u, v); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return sym_.out_neighbors(v); }
  int degree(Vertex v) const { return sym_.out_degree(v); }

  /// Edges as (u, v) with u < v, lexicographic.
  std::vector<VertexPair> edges() const {
    std::vector<VertexPair> out;
    for (auto [u, v] : sym_.arcs()) {
      if (u < v) out.emplace_back(u, v);
    }
    return out;
  }

  /// Symmetric digraph with both orientations of every edge.
  const Digraph& as_digraph() const { return sym_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.sym_ == b.sym_; }

 private:
  Digraph sym_;
};

/// Total orientation of K_n: exactly one arc per unordered pair.
class Tournament {
 public:
  Tournament() = default;

  explicit Tournament(Digraph d) : d_(std::move(d)) {
    const int n = d_.order();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (d_.has_arc(u, v) == d_.has_arc(v, u)) {
          throw ParameterError("Tournament: pair {" + std::to_string(u) + "," + std::to_string(v) +
                               "} must carry exactly one arc");
        }
      }
    }
    std::uint64_t in_sum = 0;
    std::uint64_t out_sum = 0;
    for (int v = 0; v < n; ++v) {
      in_sum += static_cast<std::uint64_t>(d_.in_degree(v));
      out_sum += static_cast<std::uint64_t>(d_.out_degree(v));
    }
    const auto pairs = binomial(static_cast<std::uint64_t>(n), 2);
    PHL_ENSURE(in_sum == pairs && out_sum == pairs, "tournament degree sums must equal C(n,2)");
  }

  Tournament(int n, std::span<const VertexPair> arcs) : Tournament(Digraph(n, arcs)) {}

  int order() const { return d_.order(); }
  bool beats(Vertex u, Vertex v) const { return d_.has_arc(u, v); }
  int in_degree(Vertex v) const { return d_.in_degree(v); }
  int out_degree(Vertex v) const { return d_.out_degree(v); }
  const Digraph& digraph() const { return d_; }

  friend bool operator==(const Tournament& a, const Tournament& b) { return a.d_ == b.d_; }

 private:
  Digraph d_;
};

/// k-uniform hypergraph; edges kept sorted and in canonical (lexicographic) order.
class KUniformHypergraph {
 public:
  KUniformHypergraph() = default;

  KUniformHypergraph(int n, int k, std::vector<HyperEdge> edges) : n_(n), k_(k) {
    if (n < 0) throw ParameterError("KUniformHypergraph: negative vertex count");
    if (k < 2) throw ParameterError("KUniformHypergraph: uniformity must be at least 2");
    for (auto& e : edges) {
      if (static_cast<int>(e.size()) != k) {
        throw ParameterError("KUniformHypergraph: edge of size " + std::to_string(e.size()) +
                             " in a " + std::to_string(k) + "-uniform hypergraph");
      }
      std::sort(e.begin(), e.end());
      for (Vertex v : e) detail::check_vertex(n, v, "KUniformHypergraph");
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
        throw ParameterError("KUniformHypergraph: edge with a repeated vertex");
      }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw ParameterError("KUniformHypergraph: duplicate edge");
    }
    edges_ = std::move(edges);
  }

  int order() const { return n_; }
  int uniformity() const { return k_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<HyperEdge>& edges() const { return edges_; }

  /// Membership test; `e` need not be sorted.
  bool contains(HyperEdge e) const {
    std::sort(e.begin(), e.end());
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  /// Edge set union with a hypergraph on the same (n, k).
  KUniformHypergraph united(const KUniformHypergraph& other) const {
    if (other.n_ != n_ || other.k_ != k_) throw ParameterError("KUniformHypergraph::united: shape mismatch");
    std::vector<HyperEdge> merged;
    merged.reserve(edges_.size() + other.edges_.size());
    std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                   std::back_inserter(merged));
    KUniformHypergraph h;
    h.n_ = n_;
    h.k_ = k_;
    h.edges_ = std::move(merged);
    return h;
  }

  friend bool operator==(const KUniformHypergraph& a, const KUniformHypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  int k_ = 2;
  std::vector<HyperEdge> edges_;
};

/// Two labelled parts with cross edges only. Edges are stored by position
/// (index into part A, index into part B).
class BipartiteGraph {
 public:
  using IndexEdge = std::pair<int, int>;

  BipartiteGraph() = default;

  BipartiteGraph(std::vector<Vertex> part_a, std::vector<Vertex> part_b, std::vector<IndexEdge> edges)
      : part_a_(std::move(part_a)), part_b_(std::move(part_b)) {
    const int na = static_cast<int>(part_a_.size());
    const int nb = static_cast<int>(part_b_.size());
    adj_a_.assign(static_cast<std::size_t>(na), {});
    adj_b_.assign(static_cast<std::size_t>(nb), {});
    for (auto [a, b] : edges) {
      if (a < 0 || a >= na || b < 0 || b >= nb) throw ParameterError("BipartiteGraph: edge index out of range");
      adj_a_[static_cast<std::size_t>(a)].push_back(b);
    }
    for (int a = 0; a < na; ++a) {
      auto& row = adj_a_[static_cast<std::size_t>(a)];
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
        throw ParameterError("BipartiteGraph: duplicate edge");
      }
      for (int b : row) adj_b_[static_cast<std::size_t>(b)].push_back(a);
      edge_count_ += row.size();
    }
  }

  /// Complete bipartite graph on parts of sizes na and nb labelled 0.. and na..
  static BipartiteGraph complete(int na, int nb) {
    std::vector<Vertex> a(static_cast<std::size_t>(na)), b(static_cast<std::size_t>(nb));
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), na);
    std::vector<IndexEdge> edges;
    for (int i = 0; i < na; ++i) {
      for (int j = 0; j < nb; ++j) edges.emplace_back(i, j);
    }
    return BipartiteGraph(std::move(a), std::move(b), std::move(edges));
  }

  int size_a() const { return static_cast<int>(part_a_.size()); }
  int size_b() const { return static_cast<int>(part_b_.size()); }
  const std::vector<Vertex>& part_a() const { return part_a_; }
  const std::vector<Vertex>& part_b() const { return part_b_; }
  const std::vector<int>& neighbors_of_a(int a) const { return adj_a_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& neighbors_of_b(int b) const { return adj_b_[static_cast<std::size_t>(b)]; }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(int a, int b) const {
    const auto& row = neighbors_of_a(a);
    return std::binary_search(row.begin(), row.end(), b);
  }

  std::vector<IndexEdge> edges() const {
    std::vector<IndexEdge> out;
    for (int a = 0; a < size_a(); ++a) {
      for (int b : neighbors_of_a(a)) out.emplace_back(a, b);
    }
    return out;
  }

  /// Same parts, edge set united with `extra` (duplicates ignored).
  BipartiteGraph with_edges(std::span<const IndexEdge> extra) const {
    std::vector<IndexEdge> all = edges();
    all.insert(all.end(), extra.begin(), extra.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return BipartiteGraph(part_a_, part_b_, std::move(all));
  }

 private:
  std::vector<Vertex> part_a_;
  std::vector<Vertex> part_b_;
  std::vector<std::vector<int>> adj_a_;
  std::vector<std::vector<int>> adj_b_;
  std::size_t edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Degree queries

/// Minimum, over all q-subsets S of the vertex set, of the number of edges
/// containing S. Enumerates every q-subset, so n is capped at 40 for q >= 2.
inline std::uint64_t min_q_degree(const KUniformHypergraph& h, int q) {
  const int n = h.order();
  const int k = h.uniformity();
  if (q < 1 || q > k - 1) {
    throw ParameterError("min_q_degree: q=" + std::to_string(q) + " outside [1, k-1] for k=" + std::to_string(k));
  }
  if (n < k) throw ParameterError("min_q_degree: need n >= k");
  if (q >= 2 && n > 40) throw ResourceError("min_q_degree: n > 40 refused for q >= 2");
  const std::uint64_t subsets = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(q));
  if (subsets > (1ULL << 27)) throw ResourceError("min_q_degree: too many q-subsets");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(subsets), 0);
  for (const auto& e : h.edges()) {
    for_each_subset_of(std::span<const int>(e), q, [&](std::span<const int> s) {
      ++counts[static_cast<std::size_t>(colex_rank(s))];
    });
  }
  return *std::min_element(counts.begin(), counts.end());
}

// ---------------------------------------------------------------------------
// Validators. All return false on malformed input rather than throwing.

namespace detail {

inline bool is_permutation_of_range(std::span<const Vertex> order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

}  // namespace detail

/// True iff `cycle` lists distinct vertices v0..v_{l-1} of d with every arc
/// v_i -> v_{i+1 mod l} present and l >= 2.
inline bool validate_cycle(const Digraph& d, std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  if (len < 2) return false;
  std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= d.order() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (!d.has_arc(cycle[i], cycle[(i + 1) % len])) return false;
  }
  return true;
}

/// True iff `order` is a permutation of all vertices and consecutive vertices
/// (cyclically) are joined by arcs.
inline bool validate_hamilton_cycle(const Digraph& d, std::span<const Vertex> order) {
  return detail::is_permutation_of_range(order, d.order()) && validate_cycle(d, order);
}

/// Undirected variant; a Hamilton cycle needs at least three vertices.
inline bool validate_hamilton_cycle(const Graph& g, std::span<const Vertex> order) {
  return g.order() >= 3 && validate_hamilton_cycle(g.as_digraph(), order);
}

/// Simple path check (distinct vertices, consecutive arcs present).
inline bool validate_path(const Digraph& d, std::span<const Vertex> path) {
  if (path.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
  for (Vertex v : path) {
    if (v < 0 || v >= d.order() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!d.has_arc(path[i], path[i + 1])) return false;
  }
  return true;
}

namespace detail {

inline std::size_t intersection_size(const HyperEdge& a, const HyperEdge& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count, ++i, ++j;
    }
  }
  return count;
}

}  // namespace detail

/// Loose Hamilton cycle check: n/(k-1) edges of h, cyclically consecutive
/// edges meet in exactly one vertex, other pairs are disjoint, and the union
/// is V. With only two edges the pair is consecutive at both junctions and so
/// shares exactly two vertices.
inline bool validate_loose_hamilton_cycle(const KUniformHypergraph& h, std::span<const HyperEdge> cycle) {
  const int n = h.order();
  const int k = h.uniformity();
  if (n == 0 || n % (k - 1) != 0) return false;
  const std::size_t m = static_cast<std::size_t>(n / (k - 1));
  if (cycle.size() != m || m < 2) return false;
  std::vector<HyperEdge> edges;
  edges.reserve(m);
  for (const auto& e : cycle) {
    HyperEdge s = e;
    std::sort(s.begin(), s.end());
    if (!h.contains(s)) return false;
    edges.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::size_t shared = detail::intersection_size(edges[i], edges[j]);
      std::size_t expected = 0;
      if (m == 2) {
        expected = 2;
      } else if (j == i + 1 || (i == 0 && j == m - 1)) {
        expected = 1;
      }
      if (shared != expected) return false;
    }
  }
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    for (Vertex v : e) covered[static_cast<std::size_t>(v)] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

/// Perfect matching check: edges of h, pairwise disjoint, covering V.
inline bool validate_perfect_matching(const KUniformHypergraph& h, std::span<const HyperEdge> matching) {
  const int n = h.order();
  const int k = h.uniformity();
  if (n % k != 0) return false;
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  std::size_t count = 0;
  for (const auto& e : matching) {
    if (!h.contains(e)) return false;
    for (Vertex v : e) {
      if (covered[static_cast<std::size_t>(v)]) return false;
      covered[static_cast<std::size_t>(v)] = 1;
      ++count;
    }
  }
  return count == static_cast<std::size_t>(n);
}

}  // namespace phl
