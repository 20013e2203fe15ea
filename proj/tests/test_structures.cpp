#include <gtest/gtest.h>

#include <set>

#include "phl/generators.hpp"
#include "phl/structures.hpp"

namespace {

using phl::HyperEdge;
using phl::Vertex;

TEST(Digraph, BasicQueries) {
  const phl::Digraph d(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  EXPECT_EQ(d.order(), 4);
  EXPECT_EQ(d.arc_count(), 4U);
  EXPECT_TRUE(d.has_arc(2, 3));
  EXPECT_FALSE(d.has_arc(3, 2));
  EXPECT_EQ(d.out_degree(2), 2);
  EXPECT_EQ(d.in_degree(3), 1);
  EXPECT_EQ(d.min_semidegree(), 0);
  EXPECT_THROW(phl::Digraph(3, {{0, 0}}), phl::ParameterError);
  EXPECT_THROW(phl::Digraph(3, {{0, 3}}), phl::ParameterError);
}

TEST(Digraph, InducedAndUnited) {
  const auto c = phl::Digraph::directed_cycle(5);
  EXPECT_EQ(c.arc_count(), 5U);
  const std::vector<Vertex> keep{0, 1, 2};
  const auto sub = c.induced(keep);
  EXPECT_EQ(sub.order(), 3);
  EXPECT_EQ(sub.arc_count(), 2U);
  const auto u = c.united(phl::Digraph(5, {{1, 0}}));
  EXPECT_EQ(u.arc_count(), 6U);
  EXPECT_EQ(phl::Digraph::complete(6).arc_count(), 30U);
}

TEST(Graph, IsSymmetric) {
  const phl::Graph g(4, {{0, 1}, {2, 1}});
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(g.as_digraph().arc_count(), 4U);
  EXPECT_THROW(phl::Graph(3, {{0, 1}, {1, 0}}), phl::ParameterError);
}

TEST(Tournament, EnforcesOneArcPerPair) {
  EXPECT_NO_THROW(phl::Tournament(3, std::vector<phl::VertexPair>{{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_THROW(phl::Tournament(3, std::vector<phl::VertexPair>{{0, 1}, {1, 2}}), phl::ParameterError);
  EXPECT_THROW(phl::Tournament(phl::Digraph::complete(3)), phl::ParameterError);
}

TEST(Tournament, DegreeSumsEqualPairCount) {
  const auto t = phl::random_tournament(15, 4);
  int in = 0, out = 0;
  for (Vertex v = 0; v < 15; ++v) {
    in += t.in_degree(v);
    out += t.out_degree(v);
  }
  EXPECT_EQ(in, 105);
  EXPECT_EQ(out, 105);
}

TEST(Hypergraph, CanonicalAndValidated) {
  const phl::KUniformHypergraph h(5, 3, {{2, 0, 1}, {4, 3, 2}});
  EXPECT_EQ(h.edges()[0], (HyperEdge{0, 1, 2}));
  EXPECT_TRUE(h.contains({1, 2, 0}));
  EXPECT_FALSE(h.contains({0, 1, 3}));
  EXPECT_THROW(phl::KUniformHypergraph(5, 3, {{0, 1}}), phl::ParameterError);
  EXPECT_THROW(phl::KUniformHypergraph(5, 3, {{0, 1, 1}}), phl::ParameterError);
  EXPECT_THROW(phl::KUniformHypergraph(5, 3, {{0, 1, 2}, {2, 1, 0}}), phl::ParameterError);
  EXPECT_THROW(phl::KUniformHypergraph(5, 3, {{0, 1, 5}}), phl::ParameterError);
  const phl::KUniformHypergraph a(5, 3, {{0, 1, 2}, {1, 2, 3}});
  const phl::KUniformHypergraph b(5, 3, {{1, 2, 3}, {0, 1, 2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.united(h).edge_count(), 3U);
}

TEST(BipartiteGraph, CrossEdgesOnly) {
  const phl::BipartiteGraph g({10, 11}, {20, 21, 22}, {{0, 1}, {1, 2}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 3U);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(g.neighbors_of_b(0).size(), 1U);
  EXPECT_THROW(phl::BipartiteGraph({0}, {1}, {{0, 0}, {0, 0}}), phl::ParameterError);
  EXPECT_THROW(phl::BipartiteGraph({0}, {1}, {{0, 1}}), phl::ParameterError);
  EXPECT_EQ(phl::BipartiteGraph::complete(3, 4).edge_count(), 12U);
}

TEST(MinQDegree, Examples) {
  EXPECT_EQ(phl::min_q_degree(phl::complete_hypergraph(3, 5), 2), 3U);
  EXPECT_EQ(phl::min_q_degree(phl::KUniformHypergraph(6, 3, {}), 1), 0U);
  EXPECT_EQ(phl::min_q_degree(phl::KUniformHypergraph(6, 3, {}), 2), 0U);
  EXPECT_THROW(phl::min_q_degree(phl::complete_hypergraph(3, 5), 3), phl::ParameterError);
  EXPECT_THROW(phl::min_q_degree(phl::complete_hypergraph(3, 5), 0), phl::ParameterError);
}

TEST(MinQDegree, BipartiteHypergraphMatchesPairEnumeration) {
  const auto h = phl::complete_bipartite_hypergraph(3, 2);
  ASSERT_EQ(h.order(), 14);
  std::uint64_t best = ~0ULL;
  for (int u = 0; u < 14; ++u) {
    for (int v = u + 1; v < 14; ++v) {
      std::uint64_t c = 0;
      for (const auto& e : h.edges()) c += std::count(e.begin(), e.end(), u) && std::count(e.begin(), e.end(), v);
      best = std::min(best, c);
    }
  }
  // Pairs inside the big part extend only through part one: 2.
  EXPECT_EQ(best, 2U);
  EXPECT_EQ(phl::min_q_degree(h, 2), best);
}

TEST(ValidateHamiltonCycle, Examples) {
  const auto c = phl::Digraph::directed_cycle(5);
  EXPECT_TRUE(phl::validate_hamilton_cycle(c, std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(phl::validate_hamilton_cycle(c, std::vector<Vertex>{2, 3, 4, 0, 1}));
  EXPECT_FALSE(phl::validate_hamilton_cycle(c, std::vector<Vertex>{0, 1, 2, 3, 3}));
  EXPECT_FALSE(phl::validate_hamilton_cycle(c, std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(phl::validate_hamilton_cycle(c, std::vector<Vertex>{4, 3, 2, 1, 0}));
  EXPECT_FALSE(phl::validate_hamilton_cycle(c, std::vector<Vertex>{0, 1, 2, 3, 7}));
  const phl::Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_TRUE(phl::validate_hamilton_cycle(g, std::vector<Vertex>{3, 2, 1, 0}));
}

TEST(ValidateCycleAndPath, Basics) {
  const auto k = phl::Digraph::complete(5);
  EXPECT_TRUE(phl::validate_cycle(k, std::vector<Vertex>{4, 1, 3}));
  EXPECT_FALSE(phl::validate_cycle(k, std::vector<Vertex>{4, 1, 4}));
  EXPECT_TRUE(phl::validate_path(phl::Digraph::directed_cycle(4), std::vector<Vertex>{1, 2, 3}));
  EXPECT_FALSE(phl::validate_path(phl::Digraph::directed_cycle(4), std::vector<Vertex>{1, 3}));
}

TEST(ValidateLooseCycle, Examples) {
  const phl::KUniformHypergraph h(4, 3, {{0, 1, 2}, {0, 2, 3}});
  EXPECT_TRUE(phl::validate_loose_hamilton_cycle(h, std::vector<HyperEdge>{{0, 1, 2}, {2, 3, 0}}));
  // {1,2,3} is not an edge of h.
  EXPECT_FALSE(phl::validate_loose_hamilton_cycle(h, std::vector<HyperEdge>{{0, 1, 2}, {1, 2, 3}}));
  EXPECT_FALSE(phl::validate_loose_hamilton_cycle(h, std::vector<HyperEdge>{}));
  // n not divisible by k - 1.
  EXPECT_FALSE(phl::validate_loose_hamilton_cycle(phl::complete_hypergraph(3, 5), std::vector<HyperEdge>{{0, 1, 2}}));
  // Three edges on six vertices: consecutive share one, cyclically.
  const auto k6 = phl::complete_hypergraph(3, 6);
  EXPECT_TRUE(phl::validate_loose_hamilton_cycle(k6, std::vector<HyperEdge>{{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}));
  EXPECT_FALSE(phl::validate_loose_hamilton_cycle(k6, std::vector<HyperEdge>{{0, 1, 2}, {2, 3, 4}, {2, 5, 0}}));
}

// Oracle: every cyclic vertex order yields the loose cycle of consecutive
// k-blocks; collect those edge sequences and compare with the validator over
// every sequence of edges of h.
void check_loose_validator_against_orders(const phl::KUniformHypergraph& h) {
  const int n = h.order();
  const int m = n / 2;
  std::set<std::vector<HyperEdge>> from_orders;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<HyperEdge> seq;
    bool inside = true;
    for (int i = 0; i < m; ++i) {
      HyperEdge e{perm[static_cast<std::size_t>(2 * i)], perm[static_cast<std::size_t>(2 * i + 1)],
                  perm[static_cast<std::size_t>((2 * i + 2) % n)]};
      std::sort(e.begin(), e.end());
      inside = inside && h.contains(e);
      seq.push_back(e);
    }
    if (inside) from_orders.insert(seq);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const auto& edges = h.edges();
  const std::size_t ne = edges.size();
  std::size_t accepted = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  while (true) {
    std::vector<HyperEdge> seq;
    for (auto i : idx) seq.push_back(edges[i]);
    if (phl::validate_loose_hamilton_cycle(h, seq)) {
      ++accepted;
      EXPECT_TRUE(from_orders.count(seq)) << "validator accepted a sequence no vertex order produces";
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == ne) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  EXPECT_EQ(accepted, from_orders.size());
}

TEST(ValidateLooseCycle, MatchesVertexOrderEnumeration) {
  check_loose_validator_against_orders(phl::complete_hypergraph(3, 4));
  check_loose_validator_against_orders(phl::complete_hypergraph(3, 6));
  phl::CounterRng rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<HyperEdge> edges;
    phl::for_each_subset(8, 3, [&](std::span<const int> s) {
      if (rng.bernoulli(0.35)) edges.emplace_back(s.begin(), s.end());
    });
    check_loose_validator_against_orders(phl::KUniformHypergraph(8, 3, edges));
  }
}

TEST(ValidatePerfectMatching, Examples) {
  EXPECT_TRUE(phl::validate_perfect_matching(phl::complete_hypergraph(3, 3), std::vector<HyperEdge>{{0, 1, 2}}));
  const auto k6 = phl::complete_hypergraph(3, 6);
  EXPECT_FALSE(phl::validate_perfect_matching(k6, std::vector<HyperEdge>{{0, 1, 2}, {2, 3, 4}}));
  EXPECT_FALSE(phl::validate_perfect_matching(k6, std::vector<HyperEdge>{{0, 1, 2}}));
  EXPECT_TRUE(phl::validate_perfect_matching(k6, std::vector<HyperEdge>{{0, 1, 5}, {2, 3, 4}}));
}

}  // namespace
