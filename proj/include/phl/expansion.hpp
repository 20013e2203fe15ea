#pragma once

// Expansion certificates and the constructive Hamilton / pancyclic solvers
// for digraphs in which every two disjoint k-sets A, B span an arc A -> B.
//
// Path-position notation: for a vertex v on a path P, v+ and v- are its
// successor and predecessor on P; U+ and U- apply this to each vertex of U.

#include <bit>
#include <deque>
#include <map>
#include <optional>

#include "phl/combinatorics.hpp"
#include "phl/rng.hpp"
#include "phl/structures.hpp"

namespace phl {

inline constexpr int kExpansionExactMaxN = 22;

enum class CertificateMode { exact, sampled };

inline std::string_view to_string(CertificateMode m) { return m == CertificateMode::exact ? "exact" : "sampled"; }

struct ExpansionCertificate {
  int k = 1;
  CertificateMode mode = CertificateMode::exact;
  /// Disjoint k-sets (A, B) with no arc from A to B.
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> violated;
  /// Number of k-sets A tested (sampled mode); each is tested against every
  /// disjoint B.
  std::uint64_t samples_checked = 0;

  bool holds() const { return !violated.has_value(); }
  /// True only for an exhaustive check without violation.
  bool proven() const { return mode == CertificateMode::exact && holds(); }
};

namespace detail {

/// Given A, returns a k-set B disjoint from A and from N+(A), if any.
/// A violation at size > k contains one at size k, so testing |A| = |B| = k
/// covers every size.
inline std::optional<std::vector<Vertex>> blocked_partner(const Digraph& d, std::span<const int> a, int k) {
  const int n = d.order();
  std::vector<char> reach(static_cast<std::size_t>(n), 0);
  for (int x : a) {
    reach[static_cast<std::size_t>(x)] = 1;
    for (Vertex y : d.out_neighbors(x)) reach[static_cast<std::size_t>(y)] = 1;
  }
  std::vector<Vertex> b;
  for (int v = 0; v < n && static_cast<int>(b.size()) < k; ++v) {
    if (!reach[static_cast<std::size_t>(v)]) b.push_back(v);
  }
  if (static_cast<int>(b.size()) < k) return std::nullopt;
  return b;
}

}  // namespace detail

/// Checks the expansion hypothesis at parameter k. Exact mode enumerates
/// every k-set A (n <= 22); sampled mode draws `budget` uniform k-sets.
inline ExpansionCertificate check_expansion(const Digraph& d, int k, CertificateMode mode,
                                            std::uint64_t budget = 10000, std::uint64_t seed = 0) {
  const int n = d.order();
  if (k < 1 || 2 * k > n) {
    throw ParameterError("check_expansion: need 1 <= k <= n/2, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  ExpansionCertificate cert;
  cert.k = k;
  cert.mode = mode;
  if (mode == CertificateMode::exact) {
    if (n > kExpansionExactMaxN) {
      throw ResourceError("check_expansion: exact mode refused for n = " + std::to_string(n) + " > " +
                          std::to_string(kExpansionExactMaxN));
    }
    for_each_subset(n, k, [&](std::span<const int> a) {
      ++cert.samples_checked;
      if (auto b = detail::blocked_partner(d, a, k)) {
        cert.violated.emplace(std::vector<Vertex>(a.begin(), a.end()), std::move(*b));
        return false;
      }
      return true;
    });
    return cert;
  }
  CounterRng rng(seed);
  for (std::uint64_t s = 0; s < budget; ++s) {
    const auto pick = floyd_sample(rng, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    std::vector<int> a(pick.begin(), pick.end());
    ++cert.samples_checked;
    if (auto b = detail::blocked_partner(d, a, k)) {
      cert.violated.emplace(std::move(a), std::move(*b));
      break;
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Hypothesis failures

enum class Assumption { min_degree, expansion, non_extendable, strong_connectivity };

inline std::string_view to_string(Assumption a) {
  switch (a) {
    case Assumption::min_degree: return "min-degree";
    case Assumption::expansion: return "expansion";
    case Assumption::non_extendable: return "non-extendable";
    case Assumption::strong_connectivity: return "strong-connectivity";
  }
  return "unknown";
}

/// A construction step could not be carried out; the input therefore does
/// not satisfy the stated hypothesis.
class HypothesisViolation : public StructuralError {
 public:
  HypothesisViolation(Assumption assumption, const std::string& what)
      : StructuralError(std::string(to_string(assumption)) + ": " + what), assumption_(assumption) {}

  Assumption assumption() const { return assumption_; }

 private:
  Assumption assumption_;
};

// ---------------------------------------------------------------------------
// Non-extendable paths

inline bool is_non_extendable(const Digraph& d, std::span<const Vertex> path) {
  if (path.empty()) return false;
  std::vector<char> on(static_cast<std::size_t>(d.order()), 0);
  for (Vertex v : path) on[static_cast<std::size_t>(v)] = 1;
  for (Vertex x : d.out_neighbors(path.back())) {
    if (!on[static_cast<std::size_t>(x)]) return false;
  }
  for (Vertex x : d.in_neighbors(path.front())) {
    if (!on[static_cast<std::size_t>(x)]) return false;
  }
  return true;
}

/// Extends `start` at both ends until neither end can grow, with an
/// insertion pass (v_j -> x -> v_{j+1} for an off-path x) between rounds.
/// Ties are broken by the seeded stream.
inline std::vector<Vertex> extend_to_maximal(const Digraph& d, std::vector<Vertex> start, std::uint64_t seed) {
  PHL_ENSURE(validate_path(d, start), "extend_to_maximal needs a valid path");
  const int n = d.order();
  CounterRng rng(seed);
  std::deque<Vertex> path(start.begin(), start.end());
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  for (Vertex v : path) on[static_cast<std::size_t>(v)] = 1;

  auto pick = [&](const std::vector<Vertex>& candidates) -> std::optional<Vertex> {
    std::vector<Vertex> free;
    for (Vertex x : candidates) {
      if (!on[static_cast<std::size_t>(x)]) free.push_back(x);
    }
    if (free.empty()) return std::nullopt;
    return free[static_cast<std::size_t>(rng.below(free.size()))];
  };

  while (true) {
    bool grew = false;
    while (auto x = pick(d.out_neighbors(path.back()))) {
      path.push_back(*x);
      on[static_cast<std::size_t>(*x)] = 1;
      grew = true;
    }
    while (auto x = pick(d.in_neighbors(path.front()))) {
      path.push_front(*x);
      on[static_cast<std::size_t>(*x)] = 1;
      grew = true;
    }
    for (Vertex x = 0; x < n; ++x) {
      if (on[static_cast<std::size_t>(x)]) continue;
      for (std::size_t j = 0; j + 1 < path.size(); ++j) {
        if (d.has_arc(path[j], x) && d.has_arc(x, path[j + 1])) {
          path.insert(path.begin() + static_cast<std::ptrdiff_t>(j + 1), x);
          on[static_cast<std::size_t>(x)] = 1;
          grew = true;
          break;
        }
      }
    }
    if (!grew) break;
  }
  std::vector<Vertex> out(path.begin(), path.end());
  PHL_ENSURE(validate_path(d, out), "extended path must be valid");
  PHL_ENSURE(is_non_extendable(d, out), "extended path must be non-extendable");
  return out;
}

/// A directed path P = u..w with N+(w) and N-(u) inside V(P).
inline std::vector<Vertex> maximal_path(const Digraph& d, std::uint64_t seed) {
  if (d.order() < 1) throw ParameterError("maximal_path: empty digraph");
  CounterRng rng(derive_seed(seed, 0x9A7B));
  const auto first = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(d.order())));
  return extend_to_maximal(d, {first}, seed);
}

// ---------------------------------------------------------------------------
// Closing a non-extendable path

enum class ClosureCase { direct, splice_one, splice_two };

inline std::string_view to_string(ClosureCase c) {
  switch (c) {
    case ClosureCase::direct: return "direct";
    case ClosureCase::splice_one: return "splice-one";
    case ClosureCase::splice_two: return "splice-two";
  }
  return "unknown";
}

struct Closure {
  std::vector<Vertex> cycle;
  ClosureCase which = ClosureCase::direct;
};

namespace detail {

inline void append_range(std::vector<Vertex>& out, std::span<const Vertex> p, int from, int to) {
  for (int i = from; i <= to; ++i) out.push_back(p[static_cast<std::size_t>(i)]);
}

struct PathIndex {
  explicit PathIndex(int n, std::span<const Vertex> p) : pos(static_cast<std::size_t>(n), -1) {
    for (std::size_t i = 0; i < p.size(); ++i) pos[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  }
  int operator[](Vertex v) const { return pos[static_cast<std::size_t>(v)]; }
  std::vector<int> pos;
};

/// Positions on P of the given neighbours, ascending.
inline std::vector<int> positions_of(const PathIndex& at, const std::vector<Vertex>& vs) {
  std::vector<int> out;
  for (Vertex v : vs) out.push_back(at[v]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Second case: U1 precedes W2. `u12_from` selects which k consecutive
/// entries of U1 form U12 (the last k by default). Returns nullopt only when
/// the chosen U12 makes the splice degenerate (u12 = w21+).
inline std::optional<std::vector<Vertex>> splice_two(const Digraph& d, std::span<const Vertex> p,
                                                     const std::vector<int>& u1, const std::vector<int>& w2, int k,
                                                     int u12_from) {
  const int len = static_cast<int>(p.size());
  auto vert = [&](int i) { return p[static_cast<std::size_t>(i)]; };

  // U12+ positions; U11 = positions among the first 2k with an arc into U12+.
  std::vector<int> u12_plus;
  for (int i = u12_from; i < u12_from + k; ++i) u12_plus.push_back(u1[static_cast<std::size_t>(i)] + 1);
  std::vector<int> u11;
  for (int i = 0; i < 2 * k; ++i) {
    for (int y : u12_plus) {
      if (d.has_arc(vert(i), vert(y))) {
        u11.push_back(i);
        break;
      }
    }
  }
  if (static_cast<int>(u11.size()) < k) {
    throw HypothesisViolation(Assumption::expansion, "U11 has " + std::to_string(u11.size()) + " < k vertices");
  }
  // W21- positions; W22 = positions among the last 2k with an arc from W21-.
  std::vector<int> w21_minus;
  for (int i = 0; i < k; ++i) w21_minus.push_back(w2[static_cast<std::size_t>(i)] - 1);
  std::vector<int> w22;
  for (int i = len - 2 * k; i < len; ++i) {
    for (int x : w21_minus) {
      if (d.has_arc(vert(x), vert(i))) {
        w22.push_back(i);
        break;
      }
    }
  }
  if (static_cast<int>(w22.size()) < k) {
    throw HypothesisViolation(Assumption::expansion, "W22 has " + std::to_string(w22.size()) + " < k vertices");
  }

  bool saw_arc = false;
  for (int i : w22) {
    const int dpos = i - 1;  // w22 in W22-
    for (int j : u11) {
      const int apos = j + 1;  // u11 in U11+
      if (!d.has_arc(vert(dpos), vert(apos))) continue;
      saw_arc = true;
      for (int bpos : u12_plus) {
        if (!d.has_arc(vert(j), vert(bpos))) continue;
        for (int cpos : w21_minus) {
          if (!d.has_arc(vert(cpos), vert(i))) continue;
          if (!(apos < bpos && bpos <= cpos && cpos < dpos && dpos + 1 <= len - 1)) continue;
          // u11..u12- , u..u11- , u12..w21 , w22+..w , w21+..w22 , back to u11
          std::vector<Vertex> cycle;
          append_range(cycle, p, apos, bpos - 1);
          append_range(cycle, p, 0, apos - 1);
          append_range(cycle, p, bpos, cpos);
          append_range(cycle, p, dpos + 1, len - 1);
          append_range(cycle, p, cpos + 1, dpos);
          return cycle;
        }
      }
    }
  }
  if (!saw_arc) throw HypothesisViolation(Assumption::expansion, "no arc from W22- to U11+");
  return std::nullopt;
}

}  // namespace detail

/// Turns a non-extendable path into a cycle on exactly V(P), following the
/// three-way case split: arc w -> u, an arc W1- -> U2+ when W1 precedes U2,
/// and the two-shortcut splice when U1 precedes W2.
inline Closure close_path_to_cycle(const Digraph& d, std::span<const Vertex> p, int k) {
  if (k < 1) throw ParameterError("close_path_to_cycle: k must be positive");
  if (!validate_path(d, p)) throw ParameterError("close_path_to_cycle: not a directed path");
  if (!is_non_extendable(d, p)) throw HypothesisViolation(Assumption::non_extendable, "path can be extended");
  const int len = static_cast<int>(p.size());
  const Vertex u = p.front();
  const Vertex w = p.back();
  if (len >= 2 && d.has_arc(w, u)) return {std::vector<Vertex>(p.begin(), p.end()), ClosureCase::direct};

  if (d.in_degree(u) < 4 * k || d.out_degree(w) < 4 * k) {
    throw HypothesisViolation(Assumption::min_degree, "path ends need in/out degree >= 4k");
  }
  const detail::PathIndex at(d.order(), p);
  const auto in_u = detail::positions_of(at, d.in_neighbors(u));
  const auto out_w = detail::positions_of(at, d.out_neighbors(w));
  auto vert = [&](int i) { return p[static_cast<std::size_t>(i)]; };

  const std::vector<int> u1(in_u.begin(), in_u.begin() + 3 * k);
  const std::vector<int> u2(in_u.end() - k, in_u.end());
  const std::vector<int> w1(out_w.begin(), out_w.begin() + k);
  const std::vector<int> w2(out_w.end() - 3 * k, out_w.end());

  if (w1.back() < u2.front()) {
    bool found = false;
    int x = -1;
    int y = -1;
    for (int i : w1) {
      for (int j : u2) {
        if (d.has_arc(vert(i - 1), vert(j + 1))) {
          x = i - 1;
          y = j + 1;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw HypothesisViolation(Assumption::expansion, "no arc from W1- to U2+");
    // u2..w , w1+..u2- , u..w1 , back to u2
    std::vector<Vertex> cycle;
    detail::append_range(cycle, p, y, len - 1);
    detail::append_range(cycle, p, x + 1, y - 1);
    detail::append_range(cycle, p, 0, x);
    PHL_ENSURE(static_cast<int>(cycle.size()) == len && validate_cycle(d, cycle), "splice-one cycle must validate");
    return {std::move(cycle), ClosureCase::splice_one};
  }

  PHL_ENSURE(u1.back() < w2.front(), "case split: U1 must precede W2 when W1 does not precede U2");
  auto cycle = detail::splice_two(d, p, u1, w2, k, 2 * k);
  // If every choice makes u12 = w21+, shifting U12 one step toward u keeps at
  // least 2k vertices before it and forces u12 to precede w21.
  if (!cycle) cycle = detail::splice_two(d, p, u1, w2, k, 2 * k - 1);
  if (!cycle) throw HypothesisViolation(Assumption::expansion, "no usable shortcut pair for the two-splice closure");
  PHL_ENSURE(static_cast<int>(cycle->size()) == len && validate_cycle(d, *cycle), "splice-two cycle must validate");
  return {std::move(*cycle), ClosureCase::splice_two};
}

// ---------------------------------------------------------------------------
// Hamilton cycles and pancyclicity

struct HamiltonRun {
  std::vector<Vertex> cycle;
  int rounds = 0;
  std::vector<ClosureCase> closures;
};

/// Hamilton cycle under the expansion hypothesis (min semidegree >= 4k and
/// expansion at k, certified by the caller). Each round closes a
/// non-extendable path into a cycle C; if C misses a vertex, an arc leaving C
/// unrolls it into a strictly longer path.
inline HamiltonRun hamilton_via_expansion_run(const Digraph& d, int k, std::uint64_t seed = 0) {
  const int n = d.order();
  if (k < 1) throw ParameterError("hamilton_via_expansion: k must be positive");
  if (n < 2) throw ParameterError("hamilton_via_expansion: need n >= 2");
  if (d.min_semidegree() < 4 * k) {
    throw HypothesisViolation(Assumption::min_degree, "min semidegree " + std::to_string(d.min_semidegree()) +
                                                          " < 4k = " + std::to_string(4 * k));
  }
  HamiltonRun run;
  std::vector<Vertex> path = maximal_path(d, seed);
  for (int round = 0; round <= n; ++round) {
    Closure c = close_path_to_cycle(d, path, k);
    run.closures.push_back(c.which);
    run.rounds = round + 1;
    const int len = static_cast<int>(c.cycle.size());
    if (len == n) {
      PHL_ENSURE(validate_hamilton_cycle(d, c.cycle), "Hamilton cycle must validate");
      run.cycle = std::move(c.cycle);
      return run;
    }
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    for (Vertex v : c.cycle) on[static_cast<std::size_t>(v)] = 1;
    std::optional<std::pair<int, Vertex>> exit;
    for (int i = 0; i < len && !exit; ++i) {
      for (Vertex x : d.out_neighbors(c.cycle[static_cast<std::size_t>(i)])) {
        if (!on[static_cast<std::size_t>(x)]) {
          exit.emplace(i, x);
          break;
        }
      }
    }
    if (!exit) throw HypothesisViolation(Assumption::strong_connectivity, "no arc leaves a non-spanning cycle");
    // c_{i+1}, ..., c_i, x
    std::vector<Vertex> longer;
    for (int j = 1; j <= len; ++j) longer.push_back(c.cycle[static_cast<std::size_t>((exit->first + j) % len)]);
    longer.push_back(exit->second);
    const std::size_t before = path.size();
    path = extend_to_maximal(d, std::move(longer), derive_seed(seed, static_cast<std::uint64_t>(round) + 1));
    PHL_ENSURE(path.size() > before, "path length must strictly increase each round");
  }
  PHL_ENSURE(false, "hamilton_via_expansion exceeded n rounds");
  return run;
}

inline std::vector<Vertex> hamilton_via_expansion(const Digraph& d, int k, std::uint64_t seed = 0) {
  return hamilton_via_expansion_run(d, k, seed).cycle;
}

struct LengthFailure {
  int length = 0;
  Assumption assumption = Assumption::expansion;
  std::string message;
};

struct PancyclicRun {
  /// length -> cycle, for every length produced.
  std::map<int, std::vector<Vertex>> cycles;
  std::vector<LengthFailure> failures;

  bool complete(int n) const { return failures.empty() && static_cast<int>(cycles.size()) == std::max(0, n - 2); }
};

/// Cycles of every length 3..n under min semidegree >= 8k and expansion at k.
/// Length 3 comes from one arc U+ -> U- between k-subsets of N+(v), N-(v);
/// lengths 4..n-4k route a Hamilton path segment of D' through v; longer
/// lengths delete n-l random vertices and take a Hamilton cycle of the rest.
inline PancyclicRun pancyclic_via_expansion(const Digraph& d, int k, std::uint64_t seed = 0) {
  const int n = d.order();
  if (k < 1) throw ParameterError("pancyclic_via_expansion: k must be positive");
  if (d.min_semidegree() < 8 * k) {
    throw HypothesisViolation(Assumption::min_degree, "min semidegree " + std::to_string(d.min_semidegree()) +
                                                          " < 8k = " + std::to_string(8 * k));
  }
  PancyclicRun run;
  auto record = [&](std::vector<Vertex> cycle, int len) {
    PHL_ENSURE(static_cast<int>(cycle.size()) == len && validate_cycle(d, cycle), "cycle of requested length");
    run.cycles.emplace(len, std::move(cycle));
  };
  auto fail = [&](int len, const HypothesisViolation& e) { run.failures.push_back({len, e.assumption(), e.what()}); };

  const Vertex v = 0;
  std::vector<Vertex> u_plus(d.out_neighbors(v).begin(), d.out_neighbors(v).begin() + k);
  std::vector<Vertex> u_minus;
  for (Vertex x : d.in_neighbors(v)) {
    if (static_cast<int>(u_minus.size()) == k) break;
    if (std::find(u_plus.begin(), u_plus.end(), x) == u_plus.end()) u_minus.push_back(x);
  }

  std::optional<std::pair<Vertex, Vertex>> tri;
  for (Vertex x : u_plus) {
    for (Vertex y : u_minus) {
      if (d.has_arc(x, y)) {
        tri.emplace(x, y);
        break;
      }
    }
    if (tri) break;
  }
  if (tri) {
    record({v, tri->first, tri->second}, 3);
  } else {
    run.failures.push_back({3, Assumption::expansion, "no arc from U+ to U-"});
  }

  // W+ : no arc from U+;  W- : no arc into U-.
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  removed[static_cast<std::size_t>(v)] = 1;
  for (Vertex x : u_plus) removed[static_cast<std::size_t>(x)] = 1;
  for (Vertex x : u_minus) removed[static_cast<std::size_t>(x)] = 1;
  int w_plus = 0;
  int w_minus = 0;
  std::vector<char> drop = removed;
  for (Vertex x = 0; x < n; ++x) {
    if (removed[static_cast<std::size_t>(x)]) continue;
    const bool from_plus = std::any_of(u_plus.begin(), u_plus.end(), [&](Vertex y) { return d.has_arc(y, x); });
    const bool into_minus = std::any_of(u_minus.begin(), u_minus.end(), [&](Vertex y) { return d.has_arc(x, y); });
    if (!from_plus) ++w_plus;
    if (!into_minus) ++w_minus;
    if (!from_plus || !into_minus) drop[static_cast<std::size_t>(x)] = 1;
  }
  const int mid_hi = n - 4 * k;
  if (mid_hi >= 4) {
    try {
      if (w_plus >= k || w_minus >= k) {
        throw HypothesisViolation(Assumption::expansion, "|W+| or |W-| reaches k");
      }
      std::vector<Vertex> keep;
      for (Vertex x = 0; x < n; ++x) {
        if (!drop[static_cast<std::size_t>(x)]) keep.push_back(x);
      }
      const Digraph sub = d.induced(keep);
      const auto h = hamilton_via_expansion(sub, k, derive_seed(seed, 0xD1));
      const int m = static_cast<int>(h.size());
      for (int len = 4; len <= mid_hi; ++len) {
        const int seg = len - 3;
        PHL_ENSURE(seg <= m, "D' must be long enough for every middle length");
        std::vector<Vertex> path;
        for (int i = 0; i < seg; ++i) path.push_back(keep[static_cast<std::size_t>(h[static_cast<std::size_t>(i)])]);
        const auto x = std::find_if(u_plus.begin(), u_plus.end(), [&](Vertex y) { return d.has_arc(y, path.front()); });
        const auto y = std::find_if(u_minus.begin(), u_minus.end(), [&](Vertex z) { return d.has_arc(path.back(), z); });
        PHL_ENSURE(x != u_plus.end() && y != u_minus.end(), "segment ends must attach to U+ and U-");
        std::vector<Vertex> cycle{v, *x};
        cycle.insert(cycle.end(), path.begin(), path.end());
        cycle.push_back(*y);
        record(std::move(cycle), len);
      }
    } catch (const HypothesisViolation& e) {
      for (int len = 4; len <= mid_hi; ++len) fail(len, e);
    }
  }

  CounterRng rng(derive_seed(seed, 0xD2));
  for (int len = std::max(4, mid_hi + 1); len <= n; ++len) {
    try {
      std::vector<Vertex> keep(static_cast<std::size_t>(n));
      std::iota(keep.begin(), keep.end(), 0);
      shuffle(keep, rng);
      keep.resize(static_cast<std::size_t>(len));
      std::sort(keep.begin(), keep.end());
      const Digraph sub = d.induced(keep);
      const auto h = hamilton_via_expansion(sub, k, derive_seed(seed, 0xD3, static_cast<std::uint64_t>(len)));
      std::vector<Vertex> cycle;
      for (Vertex x : h) cycle.push_back(keep[static_cast<std::size_t>(x)]);
      record(std::move(cycle), len);
    } catch (const HypothesisViolation& e) {
      fail(len, e);
    }
  }
  return run;
}

}  // namespace phl
