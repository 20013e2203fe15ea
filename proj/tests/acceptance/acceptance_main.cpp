// Acceptance suite: ten criteria, one PASS/FAIL line each.
// Usage: acceptance [criterion numbers...]   (default: all)

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "phl/phl.hpp"

namespace {

using phl::json;

struct Verdict {
  bool pass = false;
  std::string detail;
};

int jobs() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

phl::ExperimentConfig make_config(const json& j) { return phl::config_from_json(j); }

std::string frequencies(const phl::SweepResult& r) {
  std::ostringstream os;
  for (const auto& p : r.points) {
    os << " m=" << p.m << ":" << p.successes << "/" << p.trials;
  }
  return os.str();
}

// 1. Degree census over every tournament with n <= 6.
Verdict degree_census() {
  std::uint64_t tournaments = 0, violations = 0, expected = 0;
  for (int n = 1; n <= 6; ++n) {
    expected += 1ULL << (n * (n - 1) / 2);
    std::vector<phl::VertexPair> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const std::uint64_t count = 1ULL << pairs.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      std::vector<phl::VertexPair> arcs;
      std::vector<int> indeg(static_cast<std::size_t>(n), 0), outdeg(static_cast<std::size_t>(n), 0);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if ((mask >> i) & 1ULL) std::swap(u, v);
        arcs.emplace_back(u, v);
        ++outdeg[static_cast<std::size_t>(u)];
        ++indeg[static_cast<std::size_t>(v)];
      }
      const phl::Tournament t(n, arcs);
      ++tournaments;
      for (int k = 1; k <= n; ++k) {
        int low_in = 0, low_out = 0;
        for (int v = 0; v < n; ++v) {
          low_in += 2 * indeg[static_cast<std::size_t>(v)] < k - 1;
          low_out += 2 * outdeg[static_cast<std::size_t>(v)] < k - 1;
        }
        const auto in_census = phl::extreme_degree_census(t, k, phl::DegreeSide::in);
        const auto out_census = phl::extreme_degree_census(t, k, phl::DegreeSide::out);
        if (low_in >= k || low_out >= k) ++violations;
        if (static_cast<int>(in_census.size()) != low_in || static_cast<int>(out_census.size()) != low_out) ++violations;
      }
    }
  }
  return {violations == 0 && tournaments == expected,
          std::to_string(tournaments) + " tournaments, " + std::to_string(violations) + " violations"};
}

// Digraphs with min semidegree >= 8 and an exact expansion certificate at
// k = 1. The certificate forces an arc between every ordered pair, so the
// only candidates are complete digraphs on n >= 9 vertices; n and the solver
// seed are drawn at random and every candidate is certified, not assumed.
struct Certified {
  phl::Digraph d;
  std::uint64_t seed = 0;
};

std::optional<Certified> draw_certified(phl::CounterRng& rng, int n_lo, int n_hi) {
  const int n = n_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_hi - n_lo + 1)));
  // Candidate: a dense random digraph, completed with probability 1/2, so
  // that the certificate check has real work to reject.
  const std::uint64_t seed = rng();
  phl::Digraph d = phl::Digraph::complete(n);
  if (rng.coin()) {
    const int drop = 1 + static_cast<int>(rng.below(3));
    std::vector<phl::VertexPair> arcs = d.arcs();
    phl::shuffle(arcs, rng);
    arcs.resize(arcs.size() - static_cast<std::size_t>(drop));
    d = phl::Digraph(n, arcs);
  }
  if (d.min_semidegree() < 8) return std::nullopt;
  if (!phl::check_expansion(d, 1, phl::CertificateMode::exact).proven()) return std::nullopt;
  return Certified{d, seed};
}

// 2. Constructive Hamilton cycle versus the exact oracle.
Verdict hamilton_equivalence() {
  phl::CounterRng rng(0xACCE5502ULL);
  int tested = 0, rejected = 0, agree = 0;
  while (tested < 500) {
    auto c = draw_certified(rng, 8, 16);
    if (!c) {
      ++rejected;
      continue;
    }
    ++tested;
    const auto cycle = phl::hamilton_via_expansion(c->d, 1, c->seed);
    const auto oracle = phl::find_hamilton_cycle_exact(c->d);
    if (phl::validate_hamilton_cycle(c->d, cycle) && oracle && phl::validate_hamilton_cycle(c->d, *oracle)) ++agree;
  }
  return {agree == tested, std::to_string(agree) + "/" + std::to_string(tested) + " agree, " +
                               std::to_string(rejected) + " uncertified candidates rejected"};
}

// 3. Constructive pancyclicity versus the exact oracle.
Verdict pancyclic_equivalence() {
  phl::CounterRng rng(0xACCE5503ULL);
  int tested = 0, produced = 0, oracle_checked = 0, oracle_agree = 0;
  while (tested < 200) {
    auto c = draw_certified(rng, 8, 16);
    if (!c) continue;
    ++tested;
    const int n = c->d.order();
    const auto run = phl::pancyclic_via_expansion(c->d, 1, c->seed);
    bool ok = run.complete(n);
    for (int len = 3; ok && len <= n; ++len) {
      const auto it = run.cycles.find(len);
      ok = it != run.cycles.end() && static_cast<int>(it->second.size()) == len && phl::validate_cycle(c->d, it->second);
    }
    produced += ok;
    if (n <= 14) {
      ++oracle_checked;
      oracle_agree += ok && phl::is_pancyclic_exact(c->d).pancyclic;
    }
  }
  return {produced == tested && oracle_agree == oracle_checked,
          std::to_string(produced) + "/" + std::to_string(tested) + " produced all lengths, oracle agrees on " +
              std::to_string(oracle_agree) + "/" + std::to_string(oracle_checked)};
}

// 4. Pancyclicity trend on the complete bipartite digraph with parts 20, 40.
Verdict digraph_trend() {
  const auto base = phl::complete_bipartite_digraph(20, 40);
  const auto proof = phl::find_hamilton_cycle_witness(base, 1);
  const auto cfg = make_config({{"scenario", "digraph-pancyclic"},
                                {"base", {{"kind", "complete-bipartite-digraph"}, {"a", 20}, {"b", 40}}},
                                {"perturb", {{"mode", "add-m"}, {"m", {0, 60, 300, 1200}}}},
                                {"trials", 100},
                                {"seed", 20240604},
                                {"solver", "witness"}});
  const auto r = phl::sweep(cfg, jobs());
  bool monotone = true;
  for (std::size_t i = 1; i < r.points.size(); ++i) monotone = monotone && r.points[i].frequency >= r.points[i - 1].ci_low;
  const bool pass = proof.refuted && r.points.front().successes == 0 && r.points.back().frequency >= 0.95 && monotone;
  return {pass, std::string("base non-Hamiltonian certified: ") + (proof.refuted ? "yes" : "no") + ";" + frequencies(r) +
                    (monotone ? "" : " (not monotone)")};
}

// 5. Perfect matching pipeline.
Verdict matching_pipeline() {
  const auto cfg = make_config({{"scenario", "hyper-matching"},
                                {"base", {{"kind", "random-min-qdegree-hypergraph"}, {"k", 3}, {"n", 36}, {"alpha", 0.5}}},
                                {"perturb", {{"mode", "add-m"}, {"m", {300}}}},
                                {"trials", 100},
                                {"seed", 20240605},
                                {"solver", "pipeline"}});
  const auto null_cfg = make_config({{"scenario", "hyper-matching"},
                                     {"base", {{"kind", "empty-hypergraph"}, {"k", 3}, {"n", 36}}},
                                     {"perturb", {{"mode", "add-m"}, {"m", {0}}}},
                                     {"trials", 100},
                                     {"seed", 20240605},
                                     {"solver", "pipeline"}});
  const auto r = phl::sweep(cfg, jobs());
  const auto z = phl::sweep(null_cfg, jobs());
  const bool pass = r.points[0].frequency >= 0.90 && z.points[0].successes == 0;
  return {pass, "dense+R:" + frequencies(r) + "; empty:" + frequencies(z)};
}

// 6. Loose Hamilton cycle pipeline.
Verdict cycle_pipeline() {
  const auto cfg = make_config({{"scenario", "hyper-cycle"},
                                {"base", {{"kind", "random-min-qdegree-hypergraph"}, {"k", 3}, {"n", 36}, {"alpha", 0.5}}},
                                {"perturb", {{"mode", "add-m"}, {"m", {300}}}},
                                {"trials", 100},
                                {"seed", 20240606},
                                {"solver", "pipeline"},
                                {"options", {{"epsilon", 0.1}}}});
  const auto r = phl::sweep(cfg, jobs());
  return {r.points[0].frequency >= 0.85, frequencies(r)};
}

// 7. Random bipartite graph plus a damaged perfect matching.
Verdict damaged_matching() {
  const auto cfg = make_config({{"scenario", "bipartite-lemma5"},
                                {"base", {{"kind", "random-min-degree-bipartite"}, {"n", 50}, {"alpha", 0.2}}},
                                {"perturb", {{"mode", "add-m"}, {"m", {47}}}},
                                {"trials", 500},
                                {"seed", 20240607},
                                {"solver", "exact"}});
  const auto r = phl::sweep(cfg, jobs());
  // Independent replay: the same trials, checking every deficient answer's
  // Hall certificate directly.
  int perfect = 0, certified = 0, deficient = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const std::uint64_t seed = phl::trial_seed(cfg, 47, i);
    const auto g = phl::random_min_degree_bipartite(50, 0.2, phl::derive_seed(seed, 1));
    phl::CounterRng rng(phl::derive_seed(seed, 2));
    const auto full = phl::random_perfect_matching(50, rng);
    std::vector<phl::BipartiteGraph::IndexEdge> kept;
    for (auto j : phl::floyd_sample(rng, 50, 47)) kept.push_back(full[static_cast<std::size_t>(j)]);
    const auto u = g.with_edges(kept);
    const auto res = phl::bipartite_max_matching(u);
    if (res.perfect()) {
      ++perfect;
      continue;
    }
    ++deficient;
    const auto& w = *res.certificate;
    std::set<int> nbrs;
    for (int x : w) {
      const auto& row = res.certificate_side == phl::CertificateSide::a ? u.neighbors_of_a(x) : u.neighbors_of_b(x);
      nbrs.insert(row.begin(), row.end());
    }
    certified += nbrs.size() < w.size();
  }
  const bool pass = r.points[0].frequency >= 0.99 && perfect == r.points[0].successes && certified == deficient;
  return {pass, frequencies(r) + ", deficient " + std::to_string(deficient) + " with verified certificates " +
                    std::to_string(certified)};
}

// 8. Tournament scaling: cluster size 1 (n=120) versus 19 (n=114).
Verdict tournament_scaling() {
  const std::vector<std::uint64_t> grid{5, 15, 45, 135, 405};
  auto threshold = [&](int r, int d, const phl::SweepResult*& keep) {
    static std::vector<phl::SweepResult> store;
    const auto cfg = make_config({{"scenario", "tournament-hamilton"},
                                  {"base", {{"kind", "transitive-cluster-tournament"}, {"r", r}, {"d", d}}},
                                  {"perturb", {{"mode", "tournament-flip"}, {"m", grid}}},
                                  {"trials", 100},
                                  {"seed", 20240608},
                                  {"solver", "exact"}});
    store.push_back(phl::sweep(cfg, jobs()));
    keep = &store.back();
    for (const auto& p : store.back().points) {
      if (p.frequency >= 0.90) return static_cast<double>(p.m);
    }
    return std::numeric_limits<double>::infinity();
  };
  const phl::SweepResult* r0 = nullptr;
  const double t0 = threshold(120, 0, r0);
  const std::string f0 = frequencies(*r0);
  const phl::SweepResult* r9 = nullptr;
  const double t9 = threshold(6, 9, r9);
  const std::string f9 = frequencies(*r9);
  auto show = [](double t) { return std::isinf(t) ? std::string("none") : std::to_string(static_cast<int>(t)); };
  return {t9 < t0, "d=0 threshold " + show(t0) + " [" + f0 + " ], d=9 threshold " + show(t9) + " [" + f9 + " ]"};
}

// 9. Tightness examples.
Verdict tightness() {
  const auto kb = phl::complete_bipartite_graph(3, 6);
  const bool kb_ok = !phl::find_hamilton_cycle_exact(kb).has_value();
  const auto tc = phl::transitive_cluster_tournament(2, 1);
  const bool tc_ok = !phl::find_hamilton_cycle_exact(tc.digraph()).has_value();

  // complete_bipartite_hypergraph(3, 1): enumerate every edge subset.
  const int n = 1;
  const auto h = phl::complete_bipartite_hypergraph(3, n);
  const auto& edges = h.edges();
  const std::size_t m = edges.size();
  std::size_t best_matching = 0, best_partial = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
    std::vector<int> load(static_cast<std::size_t>(h.order()), 0);
    bool disjoint = true, loose = true;
    std::size_t size = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((mask >> i) & 1ULL)) continue;
      ++size;
      for (int v : edges[i]) {
        const int c = ++load[static_cast<std::size_t>(v)];
        disjoint = disjoint && c <= 1;
        loose = loose && c <= 2;
      }
      for (std::size_t j = 0; j < i && loose; ++j) {
        if ((mask >> j) & 1ULL) loose = phl::detail::intersection_size(edges[i], edges[j]) <= 1;
      }
    }
    // A partial loose cycle is a set of edges meeting pairwise in at most
    // one vertex with every vertex in at most two edges.
    if (disjoint) best_matching = std::max(best_matching, size);
    if (loose) best_partial = std::max(best_partial, size);
  }
  const bool h_ok = best_matching <= static_cast<std::size_t>(n) && best_partial <= static_cast<std::size_t>(2 * n) &&
                    !phl::find_perfect_matching_hypergraph_exact(h).has_value();
  return {kb_ok && tc_ok && h_ok, std::string("K(3,6) non-Hamiltonian: ") + (kb_ok ? "yes" : "no") +
                                      ", cluster(2,1) non-Hamiltonian: " + (tc_ok ? "yes" : "no") +
                                      ", hypergraph max matching " + std::to_string(best_matching) +
                                      ", max partial cycle " + std::to_string(best_partial)};
}

// 10. delta_q * C(k-q, p-q) >= delta_p * C(n-q, p-q) for q <= p <= k-1.
Verdict degree_inequality() {
  phl::CounterRng rng(0xACCE5510ULL);
  int instances = 0, checks = 0, violations = 0, nontrivial = 0;
  for (; instances < 500; ++instances) {
    const int k = rng.coin() ? 3 : 4;
    const int n = k + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(12 - k)));
    const double density = 0.5 + 0.5 * rng.uniform01();
    std::vector<phl::HyperEdge> edges;
    phl::for_each_subset(n, k, [&](std::span<const int> s) {
      if (rng.bernoulli(density)) edges.emplace_back(s.begin(), s.end());
    });
    const phl::KUniformHypergraph h(n, k, edges);
    std::vector<std::uint64_t> delta(static_cast<std::size_t>(k), 0);
    for (int q = 1; q < k; ++q) {
      delta[static_cast<std::size_t>(q)] = phl::min_q_degree(h, q);
      // Brute-force oracle for the degree itself.
      std::uint64_t brute = std::numeric_limits<std::uint64_t>::max();
      phl::for_each_subset(n, q, [&](std::span<const int> s) {
        std::uint64_t c = 0;
        for (const auto& e : edges) c += std::includes(e.begin(), e.end(), s.begin(), s.end());
        brute = std::min(brute, c);
      });
      if (brute != delta[static_cast<std::size_t>(q)]) ++violations;
    }
    for (int q = 1; q < k; ++q) {
      for (int p = q; p < k; ++p) {
        ++checks;
        const auto lhs = delta[static_cast<std::size_t>(q)] * phl::binomial(static_cast<std::uint64_t>(k - q), static_cast<std::uint64_t>(p - q));
        const auto rhs = delta[static_cast<std::size_t>(p)] * phl::binomial(static_cast<std::uint64_t>(n - q), static_cast<std::uint64_t>(p - q));
        if (lhs < rhs) ++violations;
        nontrivial += rhs > 0;
      }
    }
  }
  return {violations == 0, std::to_string(instances) + " hypergraphs, " + std::to_string(checks) + " inequalities (" +
                               std::to_string(nontrivial) + " non-trivial), " + std::to_string(violations) + " violations"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "tournament degree census, n <= 6", 60, degree_census},
      {2, "constructive Hamilton cycle vs exact oracle", 300, hamilton_equivalence},
      {3, "constructive pancyclicity vs exact oracle", 600, pancyclic_equivalence},
      {4, "pancyclicity trend, bipartite digraph (20,40)", 600, digraph_trend},
      {5, "perfect matching pipeline, k=3, n=36", 300, matching_pipeline},
      {6, "loose Hamilton cycle pipeline, k=3, n=36", 600, cycle_pipeline},
      {7, "bipartite matching with damaged perfect matching", 120, damaged_matching},
      {8, "tournament flip scaling, d=0 vs d=9", 600, tournament_scaling},
      {9, "tightness certificates", 60, tightness},
      {10, "q-degree double-counting inequality", 120, degree_inequality},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = v.pass && secs <= c.limit_s;
    failed += !pass;
    std::printf("[%s] criterion %2d: %s | %s | %.1fs (limit %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                v.detail.c_str(), secs, c.limit_s);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
