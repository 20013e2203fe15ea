#include <gtest/gtest.h>

#include <numeric>

#include "phl/generators.hpp"
#include "phl/hyperpipe.hpp"
#include "phl/perturb.hpp"

namespace {

using phl::HyperEdge;
using phl::KUniformHypergraph;
using phl::SpanningMode;
using phl::Vertex;

bool is_matching(const std::vector<HyperEdge>& edges, int n) {
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    for (Vertex v : e) {
      if (used[static_cast<std::size_t>(v)]++) return false;
    }
  }
  return true;
}

TEST(GreedyMaxMatching, NamedInstances) {
  EXPECT_TRUE(phl::greedy_max_matching(KUniformHypergraph(9, 3, {})).empty());
  EXPECT_EQ(phl::greedy_max_matching(phl::complete_hypergraph(3, 9)).size(), 3U);
}

TEST(GreedyMaxMatching, MaximalAndLargeOnRandomInstances) {
  // H_3(3n, cn) with n = 12, c = 30.
  const int n = 12, trials = 300;
  int large = 0;
  for (int r = 0; r < trials; ++r) {
    const auto h = phl::random_hypergraph(3 * n, 3, 30 * n, phl::derive_seed(61, r));
    const auto m = phl::greedy_max_matching(h);
    ASSERT_TRUE(is_matching(m, 3 * n));
    for (const auto& e : m) ASSERT_TRUE(h.contains(e));
    std::vector<char> covered(static_cast<std::size_t>(3 * n), 0);
    for (const auto& e : m) {
      for (Vertex v : e) covered[static_cast<std::size_t>(v)] = 1;
    }
    for (const auto& e : h.edges()) {
      ASSERT_TRUE(covered[static_cast<std::size_t>(e[0])] || covered[static_cast<std::size_t>(e[1])] ||
                  covered[static_cast<std::size_t>(e[2])]);
    }
    large += static_cast<double>(m.size()) >= 0.8 * n;
  }
  EXPECT_GE(large, 285);
}

TEST(GreedyLoosePaths, LengthOneIsAMaximalMatching) {
  for (int r = 0; r < 20; ++r) {
    const auto h = phl::random_hypergraph(15, 3, 40, phl::derive_seed(62, r));
    const auto paths = phl::greedy_loose_paths(h, 1);
    std::vector<HyperEdge> edges;
    for (const auto& p : paths) {
      ASSERT_EQ(p.length(), 1);
      edges.push_back(p.edge(0));
    }
    EXPECT_TRUE(is_matching(edges, 15));
    std::sort(edges.begin(), edges.end());
    auto greedy = phl::greedy_max_matching(h);
    std::sort(greedy.begin(), greedy.end());
    EXPECT_EQ(edges, greedy);
  }
}

TEST(GreedyLoosePaths, PacksCompleteHypergraphs) {
  // 2(2 ell + 1) vertices hold exactly two disjoint loose paths of length ell.
  for (int ell = 1; ell <= 2; ++ell) {
    const int n = 2 * (2 * ell + 1);
    const auto paths = phl::greedy_loose_paths(phl::complete_hypergraph(3, n), ell);
    EXPECT_EQ(paths.size(), 2U);
  }
  EXPECT_EQ(phl::greedy_loose_paths(phl::complete_hypergraph(3, 9), 2).size(), 1U);
}

TEST(GreedyLoosePaths, OutputsValidDisjointPaths) {
  for (int r = 0; r < 30; ++r) {
    const auto h = phl::random_hypergraph(30, 3, 200, phl::derive_seed(63, r));
    const int ell = 2 + r % 4;
    const auto paths = phl::greedy_loose_paths(h, ell);
    std::vector<char> used(30, 0);
    for (const auto& p : paths) {
      EXPECT_EQ(p.length(), ell);
      EXPECT_TRUE(phl::validate_loose_path(h, p));
      for (Vertex v : p.vertices) EXPECT_FALSE(used[static_cast<std::size_t>(v)]++);
    }
  }
}

TEST(AssemblePartialCycle, UsesLargestFeasibleQ) {
  // k = 3, ell = 4, n = 10 slots: q(ell + 1) <= n allows two paths.
  const auto paths = phl::greedy_loose_paths(phl::complete_hypergraph(3, 20), 4);
  ASSERT_GE(paths.size(), 2U);
  const auto t = phl::assemble_partial_cycle(paths, 10, 3);
  EXPECT_EQ(t.slots, 10);
  EXPECT_EQ(t.prematched.size(), 8U);
  const auto full = phl::extend_template(t, 20, 1);
  for (int slot : t.prematched) {
    const auto e = full.slot_edge(slot);
    bool from_path = false;
    for (std::size_t p = 0; p < 2; ++p) {
      for (const auto& pe : paths[p].edges()) from_path = from_path || pe == e;
    }
    EXPECT_TRUE(from_path);
  }
  // ell q = (1 - 1/(ell+1)) n exceeds (1 - eps) n for eps = 1/ell.
  EXPECT_GT(8.0, (1.0 - 1.0 / 4) * 10);
}

TEST(AssemblePartialCycle, SinglePathLeavesTheRestFree) {
  const auto paths = phl::greedy_loose_paths(phl::complete_hypergraph(3, 12), 3);
  const auto t = phl::assemble_partial_cycle({paths.front()}, 6, 3);
  EXPECT_EQ(t.prematched.size(), 3U);
  EXPECT_EQ(std::count(t.linkers.begin(), t.linkers.end(), phl::PartialCycleTemplate::kUnassigned), 3);
  EXPECT_THROW(phl::assemble_partial_cycle(paths, 6, 2), phl::StructuralError);
}

TEST(ExtendTemplate, MatchingModePartitionsVertices) {
  const auto t = phl::extend_template(phl::PartialCycleTemplate::empty(SpanningMode::matching, 3, 12), 12, 5);
  ASSERT_TRUE(t.complete());
  std::vector<HyperEdge> slots;
  for (int i = 0; i < t.slots; ++i) slots.push_back(t.slot_edge(i));
  EXPECT_TRUE(is_matching(slots, 12));
  EXPECT_EQ(slots.size(), 4U);
  EXPECT_THROW(phl::extend_template(phl::PartialCycleTemplate::empty(SpanningMode::matching, 3, 12), 15, 5),
               phl::StructuralError);
  EXPECT_THROW(phl::PartialCycleTemplate::empty(SpanningMode::matching, 3, 10), phl::StructuralError);
}

TEST(ExtendTemplate, CycleModeTuplesShareJunctions) {
  const auto t = phl::extend_template(phl::PartialCycleTemplate::empty(SpanningMode::cycle, 3, 8), 8, 6);
  ASSERT_EQ(t.slots, 4);
  for (int i = 0; i < 4; ++i) {
    const auto a = t.tuple(i), b = t.tuple((i + 1) % 4);
    EXPECT_EQ(a.back(), b.front());
    EXPECT_NE(a.front(), b.back());
  }
  EXPECT_THROW(phl::PartialCycleTemplate::empty(SpanningMode::cycle, 2, 8), phl::StructuralError);
}

TEST(ExtendTemplate, FullyPrematchedIsIdentity) {
  const auto m = phl::greedy_max_matching(phl::complete_hypergraph(3, 9));
  const auto t = phl::matching_template(m, 3, 9);
  ASSERT_TRUE(t.complete());
  const auto e = phl::extend_template(t, 9, 11);
  EXPECT_EQ(e.linkers, t.linkers);
  EXPECT_EQ(e.b_sequence, t.b_sequence);
}

TEST(BuildGab, CompleteAndTemplateOnly) {
  const auto t = phl::extend_template(phl::PartialCycleTemplate::empty(SpanningMode::matching, 3, 9), 9, 2);
  const auto g = phl::build_gab(phl::complete_hypergraph(3, 9), t);
  EXPECT_EQ(g.edge_count(), 9U);
  const auto mins = phl::measure_gab_min_degree(g);
  EXPECT_EQ(mins.min_a, 3);
  EXPECT_EQ(mins.min_b, 3);

  std::vector<HyperEdge> q;
  for (int i = 0; i < t.slots; ++i) q.push_back(t.slot_edge(i));
  const auto only = phl::build_gab(KUniformHypergraph(9, 3, q), t);
  EXPECT_EQ(only.edges(), (std::vector<phl::BipartiteGraph::IndexEdge>{{0, 0}, {1, 1}, {2, 2}}));
  EXPECT_THROW(phl::build_gab(phl::complete_hypergraph(3, 9), phl::PartialCycleTemplate::empty(SpanningMode::matching, 3, 9)),
               phl::ParameterError);
}

TEST(BuildGab, AgreesWithMembershipTests) {
  // k = 3 on 6 vertices, cycle mode: three slots over a 3-vertex b-ordering.
  const KUniformHypergraph l(6, 3, {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}, {0, 3, 5}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (auto mode : {SpanningMode::matching, SpanningMode::cycle}) {
      const auto t = phl::extend_template(phl::PartialCycleTemplate::empty(mode, 3, 6), 6, seed);
      const auto g = phl::build_gab(l, t);
      for (int i = 0; i < t.slots; ++i) {
        for (int j = 0; j < t.slots; ++j) {
          HyperEdge e = t.tuple(j);
          e.push_back(t.linkers[static_cast<std::size_t>(i)]);
          std::sort(e.begin(), e.end());
          EXPECT_EQ(g.has_edge(i, j), std::binary_search(l.edges().begin(), l.edges().end(), e));
        }
      }
    }
  }
}

TEST(MeasureGabMinDegree, Examples) {
  const auto m = phl::measure_gab_min_degree(phl::BipartiteGraph::complete(5, 5));
  EXPECT_EQ(m.min_a, 5);
  EXPECT_EQ(m.min_b, 5);
  const phl::BipartiteGraph g({0, 1}, {2, 3}, {{0, 0}, {0, 1}});
  EXPECT_EQ(phl::measure_gab_min_degree(g).min_a, 0);
  EXPECT_EQ(phl::measure_gab_min_degree(g).min_b, 1);
}

TEST(MeasureGabMinDegree, PositiveOnDenseBases) {
  int positive = 0;
  for (int r = 0; r < 100; ++r) {
    const auto h = phl::random_min_qdegree_hypergraph(3, 36, 0.5, phl::derive_seed(64, r));
    const auto t = phl::extend_template(phl::PartialCycleTemplate::empty(SpanningMode::matching, 3, 36), 36,
                                        phl::derive_seed(65, r));
    const auto m = phl::measure_gab_min_degree(phl::build_gab(h, t));
    positive += m.min_a > 0 && m.min_b > 0;
  }
  EXPECT_GE(positive, 99);
}

// Counts perfect matchings of G by permutations and spanning structures of L
// built from the tuples of t by subsets of edges.
std::pair<int, int> count_both_sides(const KUniformHypergraph& l, const phl::PartialCycleTemplate& t) {
  const auto g = phl::build_gab(l, t);
  std::vector<int> perm(static_cast<std::size_t>(t.slots));
  std::iota(perm.begin(), perm.end(), 0);
  int matchings = 0;
  do {
    bool ok = true;
    for (int j = 0; j < t.slots; ++j) ok = ok && g.has_edge(perm[static_cast<std::size_t>(j)], j);
    matchings += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));

  const auto& edges = l.edges();
  int structures = 0;
  phl::for_each_subset(static_cast<int>(edges.size()), t.slots, [&](std::span<const int> pick) {
    // Assign each edge to the tuple it contains, with the rest a linker.
    std::vector<HyperEdge> by_slot(static_cast<std::size_t>(t.slots));
    std::vector<char> linker_used(static_cast<std::size_t>(t.slots), 0);
    for (int idx : pick) {
      const auto& e = edges[static_cast<std::size_t>(idx)];
      bool placed = false;
      for (int j = 0; j < t.slots && !placed; ++j) {
        auto b = t.tuple(j);
        std::sort(b.begin(), b.end());
        if (!by_slot[static_cast<std::size_t>(j)].empty() || !std::includes(e.begin(), e.end(), b.begin(), b.end())) {
          continue;
        }
        for (int i = 0; i < t.slots; ++i) {
          if (!linker_used[static_cast<std::size_t>(i)] &&
              std::find(e.begin(), e.end(), t.linkers[static_cast<std::size_t>(i)]) != e.end()) {
            linker_used[static_cast<std::size_t>(i)] = 1;
            by_slot[static_cast<std::size_t>(j)] = e;
            placed = true;
            break;
          }
        }
      }
      if (!placed) return;
    }
    const bool valid = t.mode == SpanningMode::matching ? phl::validate_perfect_matching(l, by_slot)
                                                        : phl::validate_loose_hamilton_cycle(l, by_slot);
    structures += valid;
  });
  return {matchings, structures};
}

TEST(BuildGab, PerfectMatchingsBijectWithSpanningStructures) {
  int nonzero = 0;
  for (int r = 0; r < 60; ++r) {
    const auto mode = r % 2 ? SpanningMode::cycle : SpanningMode::matching;
    // Two cycle slots would repeat the same tuple, so cycles use three.
    const int slots = mode == SpanningMode::cycle ? 3 : 2 + r % 4 / 2;
    const int n = slots * (mode == SpanningMode::matching ? 3 : 2);
    const auto total = phl::binomial(static_cast<std::uint64_t>(n), 3);
    const auto l = phl::random_hypergraph(n, 3, std::min<std::uint64_t>(total, 6 + r % 10), phl::derive_seed(66, r));
    const auto t = phl::extend_template(phl::PartialCycleTemplate::empty(mode, 3, n), n, phl::derive_seed(67, r));
    const auto [matchings, structures] = count_both_sides(l, t);
    EXPECT_EQ(matchings, structures) << r;
    nonzero += matchings > 0;
  }
  EXPECT_GT(nonzero, 5);
}

TEST(FindSpanningStructure, TrivialInputs) {
  const phl::PipelineConfig cfg;
  for (auto mode : {SpanningMode::matching, SpanningMode::cycle}) {
    const int n = 12;
    const auto res = phl::find_spanning_structure(phl::complete_hypergraph(3, n), KUniformHypergraph(n, 3, {}), mode, cfg);
    EXPECT_TRUE(res.success);
    EXPECT_EQ(res.structure.size(), static_cast<std::size_t>(mode == SpanningMode::matching ? 4 : 6));
    const auto fail = phl::find_spanning_structure(KUniformHypergraph(n, 3, {}), KUniformHypergraph(n, 3, {}), mode, cfg);
    EXPECT_FALSE(fail.success);
    EXPECT_FALSE(fail.certificate.empty());
    EXPECT_TRUE(fail.structure.empty());
  }
}

TEST(FindSpanningStructure, GraphCaseAndErrors) {
  const phl::PipelineConfig cfg;
  const auto res = phl::find_spanning_structure(phl::complete_hypergraph(2, 10), KUniformHypergraph(10, 2, {}),
                                                SpanningMode::matching, cfg);
  EXPECT_TRUE(res.success);
  EXPECT_EQ(res.structure.size(), 5U);
  EXPECT_THROW(phl::find_spanning_structure(phl::complete_hypergraph(2, 10), KUniformHypergraph(10, 2, {}),
                                            SpanningMode::cycle, cfg),
               phl::StructuralError);
  EXPECT_THROW(phl::find_spanning_structure(phl::complete_hypergraph(3, 10), KUniformHypergraph(10, 3, {}),
                                            SpanningMode::matching, cfg),
               phl::StructuralError);
  EXPECT_THROW(phl::find_spanning_structure(phl::complete_hypergraph(3, 9), KUniformHypergraph(12, 3, {}),
                                            SpanningMode::matching, cfg),
               phl::ParameterError);
  phl::PipelineConfig bad;
  bad.epsilon = 1.0;
  EXPECT_THROW(bad.validate(), phl::ParameterError);
  EXPECT_EQ(cfg.effective_ell(), 10);
}

TEST(FindSpanningStructure, CertificateIsAHallViolator) {
  // A sparse union leaves some linkers without usable tuples.
  int failures = 0;
  for (int r = 0; r < 30; ++r) {
    const auto h = phl::random_hypergraph(12, 3, 20, phl::derive_seed(68, r));
    phl::PipelineConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(r);
    const auto res = phl::find_spanning_structure(h, KUniformHypergraph(12, 3, {}), SpanningMode::matching, cfg);
    if (res.success) {
      EXPECT_TRUE(phl::validate_perfect_matching(h, res.structure));
      continue;
    }
    ++failures;
    EXPECT_FALSE(res.certificate.empty());
  }
  EXPECT_GT(failures, 0);
}

}  // namespace
