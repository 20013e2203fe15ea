#pragma once

// Perfect matchings and loose Hamilton cycles in H ∪ R through a bipartite
// reduction.
//
// A template splits the vertex set into linkers a^0..a^{n-1} and tuples
// b^0..b^{n-1} of k-1 vertices each. Matching mode keeps a flat b-sequence
// of (k-1)n entries with b^i = b[(k-1)i .. (k-1)(i+1)). Cycle mode keeps
// (k-2)n entries with b^i = b[(k-2)i .. (k-2)i + k-2] taken cyclically, so
// consecutive tuples share one vertex. Either way {a^{pi(i)}} ∪ b^i over a
// perfect matching pi of G_{A,B}(L) is a perfect matching (resp. loose
// Hamilton cycle, in slot order) of L.

#include <optional>

#include "phl/exact.hpp"
#include "phl/rng.hpp"
#include "phl/structures.hpp"

namespace phl {

enum class SpanningMode { matching, cycle };

inline std::string_view to_string(SpanningMode m) { return m == SpanningMode::matching ? "matching" : "cycle"; }

inline SpanningMode spanning_mode_from_string(std::string_view s) {
  if (s == "matching") return SpanningMode::matching;
  if (s == "cycle") return SpanningMode::cycle;
  throw ParameterError("unknown spanning mode '" + std::string(s) + "'");
}

/// Loose path of length l: vertex order of l(k-1)+1 vertices, edge j being
/// vertices [j(k-1), j(k-1)+k-1].
struct LoosePath {
  int k = 3;
  std::vector<Vertex> vertices;

  int length() const { return k > 1 ? (static_cast<int>(vertices.size()) - 1) / (k - 1) : 0; }

  HyperEdge edge(int j) const {
    const auto from = vertices.begin() + static_cast<std::ptrdiff_t>(j * (k - 1));
    HyperEdge e(from, from + k);
    std::sort(e.begin(), e.end());
    return e;
  }

  std::vector<HyperEdge> edges() const {
    std::vector<HyperEdge> out;
    for (int j = 0; j < length(); ++j) out.push_back(edge(j));
    return out;
  }
};

/// Well-formed loose path of H: distinct vertices, every edge in H.
inline bool validate_loose_path(const KUniformHypergraph& h, const LoosePath& p) {
  if (p.k != h.uniformity() || p.vertices.size() < static_cast<std::size_t>(p.k)) return false;
  if ((p.vertices.size() - 1) % static_cast<std::size_t>(p.k - 1) != 0) return false;
  std::vector<Vertex> sorted = p.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.front() < 0 || sorted.back() >= h.order()) return false;
  for (int j = 0; j < p.length(); ++j) {
    if (!h.contains(p.edge(j))) return false;
  }
  return true;
}

struct PartialCycleTemplate {
  SpanningMode mode = SpanningMode::matching;
  int k = 3;
  /// Number of slots n (edges of the target structure).
  int slots = 0;
  /// a^i; kUnassigned marks a free position.
  std::vector<Vertex> linkers;
  std::vector<Vertex> b_sequence;
  /// Slots whose edge {a^i} ∪ b^i is already present in the mined structure.
  std::vector<int> prematched;

  static constexpr Vertex kUnassigned = -1;

  int stride() const { return mode == SpanningMode::matching ? k - 1 : k - 2; }

  /// b^i as stored (not sorted).
  std::vector<Vertex> tuple(int i) const {
    std::vector<Vertex> t;
    const int s = stride();
    const int size = static_cast<int>(b_sequence.size());
    for (int j = 0; j < k - 1; ++j) t.push_back(b_sequence[static_cast<std::size_t>((s * i + j) % size)]);
    return t;
  }

  HyperEdge slot_edge(int i) const {
    HyperEdge e = tuple(i);
    e.push_back(linkers[static_cast<std::size_t>(i)]);
    std::sort(e.begin(), e.end());
    return e;
  }

  bool complete() const {
    auto free = [](Vertex v) { return v == kUnassigned; };
    return std::none_of(linkers.begin(), linkers.end(), free) && std::none_of(b_sequence.begin(), b_sequence.end(), free);
  }

  static PartialCycleTemplate empty(SpanningMode mode, int k, int total_vertices) {
    if (k < 2) throw ParameterError("template: k must be at least 2");
    if (mode == SpanningMode::cycle && k < 3) {
      throw StructuralError("template: cycle mode needs k >= 3 (a linker must be an interior vertex)");
    }
    const int part = mode == SpanningMode::matching ? k : k - 1;
    if (total_vertices <= 0 || total_vertices % part != 0) {
      throw StructuralError("template: " + std::to_string(total_vertices) + " vertices not divisible by " +
                            std::to_string(part));
    }
    PartialCycleTemplate t;
    t.mode = mode;
    t.k = k;
    t.slots = total_vertices / part;
    if (mode == SpanningMode::cycle && t.slots < 2) throw StructuralError("template: a loose cycle needs two edges");
    t.linkers.assign(static_cast<std::size_t>(t.slots), kUnassigned);
    t.b_sequence.assign(static_cast<std::size_t>(t.slots) * static_cast<std::size_t>(t.stride()), kUnassigned);
    return t;
  }
};

struct PipelineConfig {
  double epsilon = 0.1;
  /// Loose path length for cycle mode; 0 means ceil(1/epsilon).
  int ell = 0;
  std::uint64_t seed = 0;
  /// Mine the preliminary structure from H ∪ R instead of R alone.
  bool mine_union = false;
  std::uint64_t path_search_budget = 20000;

  int effective_ell() const {
    if (ell > 0) return ell;
    return static_cast<int>(std::ceil(1.0 / epsilon - 1e-9));
  }

  void validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("PipelineConfig: epsilon must lie in (0,1)");
    if (ell < 0) throw ParameterError("PipelineConfig: ell must be positive");
  }
};

// ---------------------------------------------------------------------------
// Mining the random part

/// Greedy inclusion-maximal matching in canonical edge order.
inline std::vector<HyperEdge> greedy_max_matching(const KUniformHypergraph& h) {
  std::vector<char> used(static_cast<std::size_t>(h.order()), 0);
  std::vector<HyperEdge> matching;
  for (const auto& e : h.edges()) {
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return used[static_cast<std::size_t>(v)] != 0; })) continue;
    for (Vertex v : e) used[static_cast<std::size_t>(v)] = 1;
    matching.push_back(e);
  }
  for (const auto& e : h.edges()) {
    PHL_ENSURE(std::any_of(e.begin(), e.end(), [&](Vertex v) { return used[static_cast<std::size_t>(v)] != 0; }),
               "greedy matching must leave no edge on uncovered vertices");
  }
  return matching;
}

/// Vertex-disjoint loose paths of length exactly `ell`, grown greedily from
/// each unused edge by a depth-first extension through the end junction
/// (bounded by `budget` steps per start). Shorter stubs are discarded.
inline std::vector<LoosePath> greedy_loose_paths(const KUniformHypergraph& h, int ell, std::uint64_t budget = 20000) {
  if (ell < 1) throw ParameterError("greedy_loose_paths: ell must be positive");
  const int n = h.order();
  const int k = h.uniformity();
  const auto& edges = h.edges();
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (Vertex v : edges[i]) incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
  }
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto is_free = [&](Vertex v) { return used[static_cast<std::size_t>(v)] == 0; };
  std::vector<LoosePath> paths;

  for (const auto& first : edges) {
    if (!std::all_of(first.begin(), first.end(), is_free)) continue;
    bool done = false;
    std::uint64_t steps = 0;
    for (int out = 0; out < k && !done; ++out) {
      // Order the first edge so that first[out] is the end junction.
      std::vector<Vertex> order;
      for (int j = 0; j < k; ++j) {
        if (j != out) order.push_back(first[static_cast<std::size_t>(j)]);
      }
      order.push_back(first[static_cast<std::size_t>(out)]);
      for (Vertex v : order) used[static_cast<std::size_t>(v)] = 1;
      auto grow = [&](auto&& self, int have) -> bool {
        if (have == ell) return true;
        if (++steps > budget) return false;
        const Vertex end = order.back();
        for (int id : incident[static_cast<std::size_t>(end)]) {
          const auto& e = edges[static_cast<std::size_t>(id)];
          if (!std::all_of(e.begin(), e.end(), [&](Vertex v) { return v == end || is_free(v); })) continue;
          std::vector<Vertex> fresh;
          for (Vertex v : e) {
            if (v != end) fresh.push_back(v);
          }
          for (std::size_t pick = 0; pick < fresh.size(); ++pick) {
            const std::size_t mark = order.size();
            for (std::size_t j = 0; j < fresh.size(); ++j) {
              if (j != pick) order.push_back(fresh[j]);
            }
            order.push_back(fresh[pick]);
            for (Vertex v : fresh) used[static_cast<std::size_t>(v)] = 1;
            if (self(self, have + 1)) return true;
            for (Vertex v : fresh) used[static_cast<std::size_t>(v)] = 0;
            order.resize(mark);
            if (steps > budget) return false;
          }
        }
        return false;
      };
      if (grow(grow, 1)) {
        LoosePath p{k, order};
        PHL_ENSURE(validate_loose_path(h, p) && p.length() == ell, "greedy loose path must validate");
        paths.push_back(std::move(p));
        done = true;
      } else {
        for (Vertex v : order) used[static_cast<std::size_t>(v)] = 0;
      }
      if (steps > budget) break;
    }
  }
  return paths;
}

// ---------------------------------------------------------------------------
// Templates

/// Template whose prematched slots are the given matching edges.
inline PartialCycleTemplate matching_template(const std::vector<HyperEdge>& matching, int k, int total_vertices) {
  auto t = PartialCycleTemplate::empty(SpanningMode::matching, k, total_vertices);
  const int use = std::min(static_cast<int>(matching.size()), t.slots);
  for (int i = 0; i < use; ++i) {
    const auto& e = matching[static_cast<std::size_t>(i)];
    t.linkers[static_cast<std::size_t>(i)] = e[0];
    for (int j = 1; j < k; ++j) t.b_sequence[static_cast<std::size_t>((k - 1) * i + j - 1)] = e[static_cast<std::size_t>(j)];
    t.prematched.push_back(i);
  }
  return t;
}

/// Places the largest feasible number q of paths (q(ell+1) <= n) in
/// consecutive slot blocks of ell edge slots followed by one link slot.
/// In each path edge the first interior vertex becomes the linker and the
/// remaining vertices fill the tuple, so consecutive edges share their
/// junction through the cyclic b-sequence.
inline PartialCycleTemplate assemble_partial_cycle(const std::vector<LoosePath>& paths, int slots, int k) {
  if (k < 3) throw StructuralError("assemble_partial_cycle: k must be at least 3");
  auto t = PartialCycleTemplate::empty(SpanningMode::cycle, k, slots * (k - 1));
  if (paths.empty()) return t;
  const int ell = paths.front().length();
  const int q = std::min(static_cast<int>(paths.size()), slots / (ell + 1));
  for (int p = 0; p < q; ++p) {
    const auto& path = paths[static_cast<std::size_t>(p)];
    PHL_ENSURE(path.length() == ell && path.k == k, "paths must share length and uniformity");
    for (int j = 0; j < ell; ++j) {
      const int slot = p * (ell + 1) + j;
      const auto at = [&](int idx) { return path.vertices[static_cast<std::size_t>(j * (k - 1) + idx)]; };
      t.linkers[static_cast<std::size_t>(slot)] = at(1);
      const auto base = static_cast<std::size_t>((k - 2) * slot);
      t.b_sequence[base] = at(0);
      for (int m = 2; m < k - 1; ++m) t.b_sequence[base + static_cast<std::size_t>(m - 1)] = at(m);
      t.b_sequence[(base + static_cast<std::size_t>(k - 2)) % t.b_sequence.size()] = at(k - 1);
      t.prematched.push_back(slot);
    }
  }
  return t;
}

/// Fills every free position with the unused vertices in seeded random order
/// and checks that the result is a partition (matching mode) or a loose
/// cyclic tuple sequence (cycle mode).
inline PartialCycleTemplate extend_template(PartialCycleTemplate t, int total_vertices, std::uint64_t seed) {
  const int part = t.mode == SpanningMode::matching ? t.k : t.k - 1;
  if (total_vertices != t.slots * part) {
    throw StructuralError("extend_template: " + std::to_string(total_vertices) + " vertices do not fit " +
                          std::to_string(t.slots) + " slots");
  }
  std::vector<char> placed(static_cast<std::size_t>(total_vertices), 0);
  auto mark = [&](Vertex v) {
    if (v == PartialCycleTemplate::kUnassigned) return;
    if (v < 0 || v >= total_vertices || placed[static_cast<std::size_t>(v)]) {
      throw StructuralError("extend_template: vertex " + std::to_string(v) + " placed twice or out of range");
    }
    placed[static_cast<std::size_t>(v)] = 1;
  };
  for (Vertex v : t.linkers) mark(v);
  for (Vertex v : t.b_sequence) mark(v);
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < total_vertices; ++v) {
    if (!placed[static_cast<std::size_t>(v)]) pool.push_back(v);
  }
  CounterRng rng(seed);
  shuffle(pool, rng);
  std::size_t next = 0;
  for (auto& v : t.linkers) {
    if (v == PartialCycleTemplate::kUnassigned) v = pool[next++];
  }
  for (auto& v : t.b_sequence) {
    if (v == PartialCycleTemplate::kUnassigned) v = pool[next++];
  }
  PHL_ENSURE(next == pool.size() && t.complete(), "extended template must use every vertex once");
  if (t.mode == SpanningMode::cycle) {
    for (int i = 0; i < t.slots; ++i) {
      const auto a = t.tuple(i);
      const auto b = t.tuple((i + 1) % t.slots);
      PHL_ENSURE(a.back() == b.front(), "consecutive tuples must share their junction");
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Reduction

/// G_{A,B}(L): linker index i ~ tuple index j iff {a^i} ∪ b^j is an edge of L.
inline BipartiteGraph build_gab(const KUniformHypergraph& l, const PartialCycleTemplate& t) {
  if (!t.complete()) throw ParameterError("build_gab: template is not fully extended");
  if (l.uniformity() != t.k) throw ParameterError("build_gab: uniformity mismatch");
  std::vector<BipartiteGraph::IndexEdge> edges;
  for (int j = 0; j < t.slots; ++j) {
    HyperEdge e = t.tuple(j);
    e.push_back(0);
    for (int i = 0; i < t.slots; ++i) {
      e.back() = t.linkers[static_cast<std::size_t>(i)];
      if (l.contains(e)) edges.emplace_back(i, j);
    }
  }
  std::vector<Vertex> tuple_labels(static_cast<std::size_t>(t.slots));
  std::iota(tuple_labels.begin(), tuple_labels.end(), 0);
  return BipartiteGraph(t.linkers, std::move(tuple_labels), std::move(edges));
}

struct SideMinima {
  int min_a = 0;
  int min_b = 0;
};

inline SideMinima measure_gab_min_degree(const BipartiteGraph& g) {
  SideMinima m;
  if (g.size_a() == 0 || g.size_b() == 0) return m;
  m.min_a = g.size_b();
  m.min_b = g.size_a();
  for (int a = 0; a < g.size_a(); ++a) m.min_a = std::min(m.min_a, static_cast<int>(g.neighbors_of_a(a).size()));
  for (int b = 0; b < g.size_b(); ++b) m.min_b = std::min(m.min_b, static_cast<int>(g.neighbors_of_b(b).size()));
  return m;
}

// ---------------------------------------------------------------------------
// Pipeline

struct SpanningResult {
  bool success = false;
  SpanningMode mode = SpanningMode::matching;
  /// Perfect matching, or loose Hamilton cycle edges in cyclic order.
  std::vector<HyperEdge> structure;
  /// Hall violator as linker vertices (side A) or tuple slots (side B).
  std::vector<Vertex> certificate;
  CertificateSide certificate_side = CertificateSide::a;
  /// Diagnostics.
  int slots = 0;
  int prematched = 0;
  int mined = 0;
  SideMinima gab_min_degree;
};

inline SpanningResult find_spanning_structure(const KUniformHypergraph& h, const KUniformHypergraph& r,
                                              SpanningMode mode, const PipelineConfig& cfg) {
  cfg.validate();
  if (h.order() != r.order() || h.uniformity() != r.uniformity()) {
    throw ParameterError("find_spanning_structure: H and R must share n and k");
  }
  const int n = h.order();
  const int k = h.uniformity();
  const KUniformHypergraph l = h.united(r);
  const KUniformHypergraph& source = cfg.mine_union ? l : r;

  SpanningResult result;
  result.mode = mode;
  PartialCycleTemplate partial;
  if (mode == SpanningMode::matching) {
    if (n % k != 0) throw StructuralError("find_spanning_structure: k does not divide n");
    const auto q = greedy_max_matching(source);
    result.mined = static_cast<int>(q.size());
    partial = matching_template(q, k, n);
  } else {
    if (k < 3) throw StructuralError("find_spanning_structure: cycle mode needs k >= 3");
    if (n % (k - 1) != 0) throw StructuralError("find_spanning_structure: k-1 does not divide n");
    const int slots = n / (k - 1);
    const auto paths = greedy_loose_paths(source, cfg.effective_ell(), cfg.path_search_budget);
    result.mined = static_cast<int>(paths.size());
    partial = assemble_partial_cycle(paths, slots, k);
  }
  const auto tpl = extend_template(std::move(partial), n, derive_seed(cfg.seed, 0xE7));
  result.slots = tpl.slots;
  result.prematched = static_cast<int>(tpl.prematched.size());

  const BipartiteGraph g = build_gab(l, tpl);
  for (int i : tpl.prematched) PHL_ENSURE(g.has_edge(i, i), "prematched slots must be edges of G_{A,B}");
  result.gab_min_degree = measure_gab_min_degree(g);

  const MatchingResult mr = bipartite_max_matching(g);
  if (!mr.perfect()) {
    result.certificate_side = mr.certificate_side;
    for (int x : *mr.certificate) {
      result.certificate.push_back(mr.certificate_side == CertificateSide::a ? tpl.linkers[static_cast<std::size_t>(x)]
                                                                             : x);
    }
    return result;
  }
  std::vector<int> linker_for(static_cast<std::size_t>(tpl.slots), -1);
  for (auto [a, b] : mr.matching) linker_for[static_cast<std::size_t>(b)] = a;
  for (int j = 0; j < tpl.slots; ++j) {
    HyperEdge e = tpl.tuple(j);
    e.push_back(tpl.linkers[static_cast<std::size_t>(linker_for[static_cast<std::size_t>(j)])]);
    std::sort(e.begin(), e.end());
    result.structure.push_back(std::move(e));
  }
  if (mode == SpanningMode::matching) {
    PHL_ENSURE(validate_perfect_matching(l, result.structure), "lifted perfect matching must validate");
  } else {
    PHL_ENSURE(validate_loose_hamilton_cycle(l, result.structure), "lifted loose Hamilton cycle must validate");
  }
  result.success = true;
  return result;
}

}  // namespace phl
