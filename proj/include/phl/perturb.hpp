#pragma once

// Random perturbation models. Each operation is a pure function of
// (input, spec): the spec carries its own seed.
//
// Index spaces used for sampling:
//   unordered pairs of [0,n): colex rank of {u < v}, i.e. v(v-1)/2 + u
//   ordered pairs:            u * (n-1) + (v < u ? v : v - 1)
//   k-sets:                   colex rank
// m distinct indices are drawn with Floyd's algorithm (rng.hpp).

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "phl/combinatorics.hpp"
#include "phl/rng.hpp"
#include "phl/structures.hpp"

namespace phl {

enum class PerturbMode { add_m, add_p, symmetric_difference, resample, tournament_flip };

inline std::string_view to_string(PerturbMode mode) {
  switch (mode) {
    case PerturbMode::add_m: return "add-m";
    case PerturbMode::add_p: return "add-p";
    case PerturbMode::symmetric_difference: return "symmetric-difference";
    case PerturbMode::resample: return "resample";
    case PerturbMode::tournament_flip: return "tournament-flip";
  }
  return "?";
}

inline PerturbMode perturb_mode_from_string(std::string_view s) {
  for (auto m : {PerturbMode::add_m, PerturbMode::add_p, PerturbMode::symmetric_difference, PerturbMode::resample,
                 PerturbMode::tournament_flip}) {
    if (to_string(m) == s) return m;
  }
  throw ParameterError("unknown perturbation mode '" + std::string(s) + "'");
}

struct PerturbSpec {
  PerturbMode mode = PerturbMode::add_m;
  std::optional<std::uint64_t> m;
  std::optional<double> p;
  std::uint64_t seed = 0;
  /// add-m only: draw the m edges from currently absent ones instead of
  /// from all possible edges.
  bool fresh_only = false;

  static PerturbSpec with_m(PerturbMode mode, std::uint64_t m, std::uint64_t seed) {
    PerturbSpec s;
    s.mode = mode;
    s.m = m;
    s.seed = seed;
    return s;
  }

  static PerturbSpec with_p(PerturbMode mode, double p, std::uint64_t seed) {
    PerturbSpec s;
    s.mode = mode;
    s.p = p;
    s.seed = seed;
    return s;
  }

  void validate() const {
    if (m.has_value() == p.has_value()) throw ParameterError("PerturbSpec: exactly one of m and p must be set");
    if (p && !(*p >= 0.0 && *p <= 1.0)) throw ParameterError("PerturbSpec: p must lie in [0,1]");
    if (mode == PerturbMode::add_m && !m) throw ParameterError("PerturbSpec: add-m needs m");
    if (mode == PerturbMode::add_p && !p) throw ParameterError("PerturbSpec: add-p needs p");
    if (fresh_only && mode != PerturbMode::add_m) throw ParameterError("PerturbSpec: fresh_only applies to add-m only");
  }
};

namespace detail {

inline VertexPair unrank_pair(std::uint64_t idx) {
  auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
  while (v * (v - 1) / 2 > idx) --v;
  while ((v + 1) * v / 2 <= idx) ++v;
  return {static_cast<Vertex>(idx - v * (v - 1) / 2), static_cast<Vertex>(v)};
}

inline VertexPair unrank_ordered_pair(std::uint64_t idx, int n) {
  const auto span = static_cast<std::uint64_t>(n - 1);
  const auto u = static_cast<Vertex>(idx / span);
  const auto r = static_cast<Vertex>(idx % span);
  return {u, r < u ? r : r + 1};
}

/// Selected indices out of `population` per `spec` (m distinct, or each with
/// probability p). `absent` lists candidate indices for fresh_only.
template <class AbsentFn>
std::vector<std::uint64_t> select_indices(const PerturbSpec& spec, std::uint64_t population, AbsentFn&& absent) {
  CounterRng rng(spec.seed);
  if (spec.p) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < population; ++i) {
      if (rng.bernoulli(*spec.p)) out.push_back(i);
    }
    return out;
  }
  const std::uint64_t m = *spec.m;
  if (spec.fresh_only) {
    const std::vector<std::uint64_t> pool = absent();
    if (m > pool.size()) {
      throw ParameterError("perturb: m = " + std::to_string(m) + " exceeds the " + std::to_string(pool.size()) +
                           " absent edges");
    }
    std::vector<std::uint64_t> out;
    for (auto i : floyd_sample(rng, pool.size(), m)) out.push_back(pool[static_cast<std::size_t>(i)]);
    std::sort(out.begin(), out.end());
    return out;
  }
  if (m > population) {
    throw ParameterError("perturb: m = " + std::to_string(m) + " exceeds the " + std::to_string(population) +
                         " possible edges");
  }
  return floyd_sample(rng, population, m);
}

inline void require_mode(const PerturbSpec& spec, std::initializer_list<PerturbMode> allowed, const char* op) {
  spec.validate();
  for (auto m : allowed) {
    if (spec.mode == m) return;
  }
  throw ParameterError(std::string(op) + ": unsupported mode " + std::string(to_string(spec.mode)));
}

}  // namespace detail

/// X ∪ R for R uniform over m-edge graphs (add-m) or binomial (add-p).
inline Graph add_random_edges(const Graph& g, const PerturbSpec& spec) {
  detail::require_mode(spec, {PerturbMode::add_m, PerturbMode::add_p}, "add_random_edges");
  const int n = g.order();
  const auto population = binomial(static_cast<std::uint64_t>(n), 2);
  auto absent = [&] {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t i = 0; i < population; ++i) {
      auto [u, v] = detail::unrank_pair(i);
      if (!g.has_edge(u, v)) pool.push_back(i);
    }
    return pool;
  };
  std::vector<VertexPair> edges = g.edges();
  for (auto idx : detail::select_indices(spec, population, absent)) {
    auto [u, v] = detail::unrank_pair(idx);
    if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

/// D ∪ R where R is drawn from all n(n-1) ordered pairs (2-cycles allowed).
inline Digraph add_random_edges(const Digraph& d, const PerturbSpec& spec) {
  detail::require_mode(spec, {PerturbMode::add_m, PerturbMode::add_p}, "add_random_edges");
  const int n = d.order();
  const auto population = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n > 0 ? n - 1 : 0);
  auto absent = [&] {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t i = 0; i < population; ++i) {
      auto [u, v] = detail::unrank_ordered_pair(i, n);
      if (!d.has_arc(u, v)) pool.push_back(i);
    }
    return pool;
  };
  std::vector<std::uint8_t> m = d.matrix();
  for (auto idx : detail::select_indices(spec, population, absent)) {
    auto [u, v] = detail::unrank_ordered_pair(idx, n);
    m[static_cast<std::size_t>(u) * n + v] = 1;
  }
  return Digraph::from_matrix(n, std::move(m));
}

/// H ∪ R with R uniform over m-edge k-uniform hypergraphs (or binomial).
inline KUniformHypergraph add_random_edges(const KUniformHypergraph& h, const PerturbSpec& spec) {
  detail::require_mode(spec, {PerturbMode::add_m, PerturbMode::add_p}, "add_random_edges");
  const int n = h.order();
  const int k = h.uniformity();
  const auto population = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  if (population == std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceError("add_random_edges: C(n,k) overflows");
  }
  if (spec.p && population > 50'000'000) throw ResourceError("add_random_edges: add-p over too many k-sets");
  auto absent = [&] {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t i = 0; i < population; ++i) {
      if (!h.contains(colex_unrank(i, n, k))) pool.push_back(i);
    }
    return pool;
  };
  std::vector<HyperEdge> edges = h.edges();
  for (auto idx : detail::select_indices(spec, population, absent)) {
    HyperEdge e = colex_unrank(idx, n, k);
    if (!h.contains(e)) edges.push_back(std::move(e));
  }
  return KUniformHypergraph(n, k, std::move(edges));
}

/// Sample of the binomial/uniform random hypergraph H_k(n, m).
inline KUniformHypergraph random_hypergraph(int n, int k, std::uint64_t m, std::uint64_t seed) {
  return add_random_edges(KUniformHypergraph(n, k, {}), PerturbSpec::with_m(PerturbMode::add_m, m, seed));
}

/// Toggles m uniformly chosen distinct vertex pairs (or each pair with
/// probability p).
inline Graph symmetric_difference(const Graph& g, const PerturbSpec& spec) {
  detail::require_mode(spec, {PerturbMode::symmetric_difference}, "symmetric_difference");
  const int n = g.order();
  const auto population = binomial(static_cast<std::uint64_t>(n), 2);
  std::vector<std::uint8_t> m = g.as_digraph().matrix();
  for (auto idx : detail::select_indices(spec, population, [] { return std::vector<std::uint64_t>{}; })) {
    auto [u, v] = detail::unrank_pair(idx);
    const auto at = static_cast<std::size_t>(u) * n + v;
    const std::uint8_t flipped = m[at] ? 0 : 1;
    m[at] = flipped;
    m[static_cast<std::size_t>(v) * n + u] = flipped;
  }
  std::vector<VertexPair> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (m[static_cast<std::size_t>(u) * n + v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

/// Re-decides m uniformly chosen distinct pairs with a fair coin each.
inline Graph resample(const Graph& g, const PerturbSpec& spec) {
  detail::require_mode(spec, {PerturbMode::resample}, "resample");
  const int n = g.order();
  const auto population = binomial(static_cast<std::uint64_t>(n), 2);
  const auto chosen = detail::select_indices(spec, population, [] { return std::vector<std::uint64_t>{}; });
  CounterRng coins(derive_seed(spec.seed, 0x5E5A)); // independent of the selection stream
  std::vector<std::uint8_t> m = g.as_digraph().matrix();
  for (auto idx : chosen) {
    auto [u, v] = detail::unrank_pair(idx);
    const std::uint8_t present = coins.coin() ? 1 : 0;
    m[static_cast<std::size_t>(u) * n + v] = present;
    m[static_cast<std::size_t>(v) * n + u] = present;
  }
  std::vector<VertexPair> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (m[static_cast<std::size_t>(u) * n + v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

/// Selects m distinct pairs and orients each by a fair coin (so each selected
/// arc reverses with probability 1/2). With p set, each pair reverses
/// independently with probability p.
inline Tournament tournament_flip(const Tournament& t, const PerturbSpec& spec) {
  detail::require_mode(spec, {PerturbMode::tournament_flip}, "tournament_flip");
  const int n = t.order();
  const auto population = binomial(static_cast<std::uint64_t>(n), 2);
  std::vector<std::uint8_t> m = t.digraph().matrix();
  auto orient = [&](Vertex u, Vertex v, bool low_beats_high) {
    m[static_cast<std::size_t>(u) * n + v] = low_beats_high ? 1 : 0;
    m[static_cast<std::size_t>(v) * n + u] = low_beats_high ? 0 : 1;
  };
  if (spec.p) {
    CounterRng rng(spec.seed);
    for (std::uint64_t idx = 0; idx < population; ++idx) {
      if (rng.bernoulli(*spec.p)) {
        auto [u, v] = detail::unrank_pair(idx);
        orient(u, v, !t.beats(u, v));
      }
    }
  } else {
    const auto chosen = detail::select_indices(spec, population, [] { return std::vector<std::uint64_t>{}; });
    CounterRng coins(derive_seed(spec.seed, 0x5E5A));
    for (auto idx : chosen) {
      auto [u, v] = detail::unrank_pair(idx);
      orient(u, v, coins.coin());
    }
  }
  return Tournament(Digraph::from_matrix(n, std::move(m)));
}

}  // namespace phl
