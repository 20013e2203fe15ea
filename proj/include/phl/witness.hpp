#pragma once

// Budgeted witness search for digraphs too large for the exact oracles
// (n <= 64). Every returned cycle is validated; a negative answer is only
// definitive when `refuted` is set, which happens when the digraph has no
// cycle factor (Hall violator in the out/in split graph) or is not strongly
// connected.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>

#include "phl/exact.hpp"
#include "phl/rng.hpp"
#include "phl/structures.hpp"

namespace phl {

inline constexpr int kWitnessMaxN = 64;

struct WitnessBudget {
  std::uint64_t nodes_per_attempt = 100000;
  int attempts = 4;
  std::uint64_t nodes_per_length = 50000;
};

namespace detail {

inline std::vector<std::uint64_t> out_masks(const Digraph& d) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(d.order()), 0);
  for (auto [u, v] : d.arcs()) out[static_cast<std::size_t>(u)] |= 1ULL << v;
  return out;
}

inline bool strongly_connected(const std::vector<std::uint64_t>& out, std::uint64_t full) {
  if (!full) return true;
  const int n = std::popcount(full);
  std::vector<std::uint64_t> in(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (std::uint64_t m = out[static_cast<std::size_t>(u)]; m; m &= m - 1) {
      in[static_cast<std::size_t>(std::countr_zero(m))] |= 1ULL << u;
    }
  }
  auto closure = [&](const std::vector<std::uint64_t>& adj) {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  };
  return closure(out) == full && closure(in) == full;
}

/// True iff the digraph has a spanning collection of disjoint cycles.
inline bool has_cycle_factor(const Digraph& d) {
  const int n = d.order();
  std::vector<Vertex> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<BipartiteGraph::IndexEdge> edges;
  for (auto [u, v] : d.arcs()) edges.emplace_back(u, v);
  return bipartite_max_matching(BipartiteGraph(labels, labels, std::move(edges))).perfect();
}

}  // namespace detail

struct HamiltonWitness {
  std::optional<std::vector<Vertex>> cycle;
  /// Set when non-Hamiltonicity is proven (not strongly connected, no cycle
  /// factor, or an exhausted search); otherwise a missing cycle means the
  /// budget ran out.
  bool refuted = false;
  std::uint64_t nodes = 0;
};

/// Randomised DFS with fewest-continuations-first ordering and restarts.
inline HamiltonWitness find_hamilton_cycle_witness(const Digraph& d, std::uint64_t seed,
                                                   const WitnessBudget& budget = {}) {
  const int n = d.order();
  if (n > kWitnessMaxN) throw ResourceError("find_hamilton_cycle_witness: n > 64");
  HamiltonWitness result;
  if (n < 2) return result;
  const auto out = detail::out_masks(d);
  const std::uint64_t full = n == 64 ? ~0ULL : ((1ULL << n) - 1ULL);
  if (!detail::strongly_connected(out, full) || !detail::has_cycle_factor(d)) {
    result.refuted = true;
    return result;
  }
  std::vector<std::uint64_t> in(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : d.arcs()) in[static_cast<std::size_t>(v)] |= 1ULL << u;

  CounterRng rng(seed);
  std::vector<Vertex> path;
  for (int attempt = 0; attempt < budget.attempts; ++attempt) {
    const auto start = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    const std::uint64_t home = 1ULL << start;
    std::uint64_t nodes = 0;
    path.assign(1, start);
    auto dfs = [&](auto&& self, std::uint64_t visited, Vertex last) -> bool {
      if (++nodes > budget.nodes_per_attempt) return false;
      if (visited == full) return (out[static_cast<std::size_t>(last)] & home) != 0;
      const std::uint64_t rest = full & ~visited;
      for (std::uint64_t r = rest; r; r &= r - 1) {
        const int u = std::countr_zero(r);
        if (!(in[static_cast<std::size_t>(u)] & (rest | (1ULL << last)))) return false;
        if (!(out[static_cast<std::size_t>(u)] & (rest | home))) return false;
      }
      std::vector<std::pair<std::uint64_t, Vertex>> next;
      for (std::uint64_t c = out[static_cast<std::size_t>(last)] & rest; c; c &= c - 1) {
        const Vertex v = std::countr_zero(c);
        const auto deg = static_cast<std::uint64_t>(std::popcount(out[static_cast<std::size_t>(v)] & rest));
        next.emplace_back((deg << 32) | (rng() & 0xFFFFFFFFULL), v);
      }
      std::sort(next.begin(), next.end());
      for (auto [unused, v] : next) {
        path.push_back(v);
        if (self(self, visited | (1ULL << v), v)) return true;
        path.pop_back();
        if (nodes > budget.nodes_per_attempt) return false;
      }
      return false;
    };
    const bool found = dfs(dfs, home, start);
    result.nodes += nodes;
    if (found) {
      PHL_ENSURE(validate_hamilton_cycle(d, path), "witness Hamilton cycle must validate");
      result.cycle = path;
      return result;
    }
    // Every Hamilton cycle passes through `start`, so a search that ran to
    // completion is a refutation.
    if (nodes <= budget.nodes_per_attempt) {
      result.refuted = true;
      return result;
    }
  }
  return result;
}

struct CycleSpectrum {
  /// length -> validated cycle.
  std::map<int, std::vector<Vertex>> cycles;
  std::vector<int> missing_lengths;
  bool hamilton_refuted = false;

  bool pancyclic(int n) const { return n >= 3 && missing_lengths.empty(); }
};

/// Cycles of every length 3..n: a Hamilton witness, then chord shortcuts
/// (a chord c_i -> c_{i+s} of an l-cycle yields an (l-s+1)-cycle) applied to
/// every cycle found, then a budgeted DFS for any length still missing.
inline CycleSpectrum find_cycle_spectrum_witness(const Digraph& d, std::uint64_t seed,
                                                 const WitnessBudget& budget = {}) {
  const int n = d.order();
  if (n > kWitnessMaxN) throw ResourceError("find_cycle_spectrum_witness: n > 64");
  CycleSpectrum spectrum;
  auto record = [&](std::vector<Vertex> c) {
    const int len = static_cast<int>(c.size());
    if (len < 3 || spectrum.cycles.count(len)) return false;
    PHL_ENSURE(validate_cycle(d, c), "witness cycle must validate");
    spectrum.cycles.emplace(len, std::move(c));
    return true;
  };

  const auto ham = find_hamilton_cycle_witness(d, seed, budget);
  spectrum.hamilton_refuted = ham.refuted;
  std::vector<std::vector<Vertex>> work;
  if (ham.cycle && record(*ham.cycle)) work.push_back(*ham.cycle);
  while (!work.empty()) {
    const auto c = std::move(work.back());
    work.pop_back();
    const int len = static_cast<int>(c.size());
    for (int i = 0; i < len; ++i) {
      for (int s = 2; s <= len - 2; ++s) {
        const int j = (i + s) % len;
        if (!d.has_arc(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)])) continue;
        if (spectrum.cycles.count(len - s + 1)) continue;
        std::vector<Vertex> shorter;
        for (int t = 0; t <= len - s; ++t) shorter.push_back(c[static_cast<std::size_t>((j + t) % len)]);
        if (record(shorter)) work.push_back(std::move(shorter));
      }
    }
  }

  const auto out = n > 0 ? detail::out_masks(d) : std::vector<std::uint64_t>{};
  for (int len = 3; len <= n; ++len) {
    if (spectrum.cycles.count(len)) continue;
    if (len == n && spectrum.hamilton_refuted) continue;
    std::uint64_t nodes = 0;
    std::vector<Vertex> path;
    bool found = false;
    for (Vertex s = 0; s < n && !found && nodes < budget.nodes_per_length; ++s) {
      // Cycles through s that use only vertices >= s, so each is met once.
      const std::uint64_t allowed = ~((1ULL << s) - 1ULL) & (n == 64 ? ~0ULL : ((1ULL << n) - 1ULL));
      path.assign(1, s);
      auto dfs = [&](auto&& self, std::uint64_t visited, Vertex last) -> bool {
        if (++nodes > budget.nodes_per_length) return false;
        if (static_cast<int>(path.size()) == len) return (out[static_cast<std::size_t>(last)] >> s) & 1ULL;
        for (std::uint64_t c = out[static_cast<std::size_t>(last)] & allowed & ~visited; c; c &= c - 1) {
          const Vertex v = std::countr_zero(c);
          path.push_back(v);
          if (self(self, visited | (1ULL << v), v)) return true;
          path.pop_back();
        }
        return false;
      };
      found = dfs(dfs, 1ULL << s, s);
    }
    if (found) record(path);
  }
  for (int len = 3; len <= n; ++len) {
    if (!spectrum.cycles.count(len)) spectrum.missing_lengths.push_back(len);
  }
  return spectrum;
}

}  // namespace phl
