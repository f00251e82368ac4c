#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "neumaier/cayley.hpp"
#include "neumaier/clique.hpp"
#include "neumaier/error.hpp"
#include "neumaier/search.hpp"
#include "oracles.hpp"

using namespace neumaier;
using cayley::CayleySpec;
using graph::Vertex;

TEST(Cayley, GenSetExamples) {
  EXPECT_EQ(cayley::gen_set(21, 17).elements, (std::vector<cayley::u64>{1, 17, 16, 20, 4, 5}));
  EXPECT_EQ(cayley::gen_set(65, 2).elements.size(), 12u);
  EXPECT_EQ(cayley::gen_set(7, 6).sorted(), (std::vector<cayley::u64>{1, 6}));
  EXPECT_TRUE(cayley::gen_set(65, 2).contains(64));
  EXPECT_THROW(cayley::gen_set(21, 7), InputError);
  EXPECT_THROW(cayley::gen_set(21, 4), InputError);  // 4 has odd order
}

TEST(Cayley, ValidateNamesCondition) {
  EXPECT_NO_THROW(cayley::validate({13, 5, 2}));
  auto message = [](CayleySpec s) {
    try {
      cayley::validate(s);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message({15, 5, 2}).find("prime"), std::string::npos);
  EXPECT_NE(message({13, 4, 2}).find("odd"), std::string::npos);
  EXPECT_NE(message({13, 5, 3}).find("generate"), std::string::npos);
  EXPECT_NE(message({13, 5, 5}).find("unit"), std::string::npos);
}

TEST(Cayley, Gamma65) {
  const auto c = cayley::gamma_pq({13, 5, 2});
  EXPECT_EQ(c.lambda, oracle::shift_count(2, 65));
  EXPECT_EQ(c.lambda, 3u);
  const auto r = graph::regularity_report(c.graph);
  EXPECT_EQ(r.k, 12u);
  EXPECT_EQ(r.lambda, 3u);
  EXPECT_FALSE(r.is_co_edge_regular);
  ASSERT_EQ(c.spread.blocks.size(), 13u);
  auto h = c.spread.blocks[0];
  std::sort(h.begin(), h.end());
  EXPECT_EQ(h, (std::vector<Vertex>{0, 13, 26, 39, 52}));
}

TEST(Cayley, SpreadIsOneRegularCocliques) {
  for (CayleySpec s : {CayleySpec{13, 5, 2}, CayleySpec{37, 5, 2}, CayleySpec{79, 7, 54}, CayleySpec{7, 3, 17}}) {
    const auto c = cayley::gamma_pq(s);
    const auto n = s.p * s.q;
    EXPECT_EQ(c.lambda, oracle::shift_count(s.a, n));
    EXPECT_EQ(c.spread.blocks.size(), s.p);
    const auto set = c.connection.sorted();
    EXPECT_FALSE(std::binary_search(set.begin(), set.end(), 0u));
    std::vector<int> seen(n, 0);
    for (const auto& block : c.spread.blocks) {
      EXPECT_EQ(block.size(), s.q);
      EXPECT_TRUE(graph::is_coclique(c.graph, block));
      EXPECT_EQ(graph::is_regular_subset(c.graph, {block, graph::SubsetKind::Coclique}), 1u);
      std::size_t hits = 0;
      for (Vertex x : block) {
        ++seen[x];
        hits += x == 0 || std::binary_search(set.begin(), set.end(), x);
      }
      EXPECT_EQ(hits, 1u);
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
  }
}

TEST(Cayley, Gamma185) {
  const auto c = cayley::gamma_pq({37, 5, 2});
  const auto r = graph::edge_regularity(c.graph);
  EXPECT_EQ(c.graph.order(), 185u);
  EXPECT_EQ(r.k, 36u);
  EXPECT_EQ(r.lambda, 3u);
}

TEST(Cayley, FusedSmallestGraph) {
  const auto built = cayley::construct_neumaier(5, 13, 2);
  EXPECT_EQ(built.t, 1u);
  EXPECT_EQ(built.params, (feasibility::NeumaierParams{65, 16, 3, 1, 5}));
  EXPECT_TRUE(graph::verify_neumaier(built.fused.graph, built.params, built.witness));
  EXPECT_TRUE(graph::is_strictly_neumaier(built.fused.graph, built.params, built.witness));
  EXPECT_FALSE(graph::verify_neumaier(built.fused.graph, {65, 16, 3, 2, 5}, built.witness));
  for (const auto& c : built.fused.cliques.blocks) {
    EXPECT_EQ(graph::is_regular_subset(built.fused.graph, {c, graph::SubsetKind::Clique}), 1u);
  }
  const auto s = cayley::strictness_check(built.fusion, built.fused.graph);
  EXPECT_TRUE(s.strict);
  EXPECT_EQ(s.basis, cayley::StrictnessBasis::SufficientCondition);
  EXPECT_EQ(graph::maximum_clique(built.fused.graph).size(), 5u);
}

TEST(Cayley, DistanceThreePairAcrossBlocks) {
  const auto c = cayley::gamma_pq({13, 5, 2});
  const auto block = cayley::block_index(c.spread, 65);
  bool found = false;
  for (Vertex u = 0; u < 65 && !found; ++u) {
    const auto d = graph::bfs_distances(c.graph, u);
    for (Vertex v = 0; v < 65; ++v) found = found || (d[v] >= 3 && d[v] != SIZE_MAX && block[u] != block[v]);
  }
  EXPECT_TRUE(found);
}

TEST(Cayley, ExhaustiveFallbackAgreesWithDirectCheck) {
  // Exhaustive strong-regularity refutation on the same graph.
  const auto built = cayley::construct_neumaier(5, 13, 2);
  const auto r = graph::regularity_report(built.fused.graph);
  EXPECT_TRUE(r.is_edge_regular);
  EXPECT_FALSE(r.is_co_edge_regular);
  ASSERT_TRUE(r.co_edge_violation.has_value());
  const auto [u, v] = *r.co_edge_violation;
  EXPECT_FALSE(built.fused.graph.adjacent(u, v));
}

TEST(Cayley, CompleteMultipartiteFallback) {
  // K_{3,3,3} with its parts as blocks: diameter 2, so the fallback runs, and
  // the fused graph is complete.
  graph::Graph g(9);
  for (Vertex u = 0; u < 9; ++u) {
    for (Vertex v = u + 1; v < 9; ++v) {
      if (u / 3 != v / 3) g.add_edge(u, v);
    }
  }
  cayley::FusionSpec fs{{{g, {{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}}}}, {}};
  const auto fused = cayley::fuse(fs);
  EXPECT_EQ(fused.graph.edge_count(), 36u);
  const auto s = cayley::strictness_check(fs, fused.graph);
  EXPECT_FALSE(s.strict);
  EXPECT_EQ(s.basis, cayley::StrictnessBasis::VerifiedByExhaustion);
  EXPECT_EQ(cayley::to_string(s.basis), "verified-by-exhaustion");
}

TEST(Cayley, MixedPermutationFusion) {
  // q = 5, p = 61, a = 17: lambda = 18, t = 4, fused clique size 20.
  std::mt19937_64 rng(61);
  std::vector<std::vector<std::size_t>> perms(3, std::vector<std::size_t>(61));
  for (auto& perm : perms) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
  }
  const auto built = cayley::construct_neumaier(5, 61, 17, perms);
  EXPECT_EQ(built.t, 4u);
  EXPECT_EQ(built.params, (feasibility::NeumaierParams{1220, 79, 18, 1, 20}));
  EXPECT_EQ(built.witness.members.size(), 20u);
  const auto& g = built.fused.graph;
  EXPECT_TRUE(graph::verify_neumaier(g, built.params, built.witness));
  EXPECT_TRUE(graph::is_strictly_neumaier(g, built.params, built.witness));
  // Fused clique c takes block perms[i-1][c] from copy i.
  const auto& base = built.fusion.copies[0].spread.blocks;
  for (std::size_t c : {0u, 7u, 60u}) {
    std::set<Vertex> want(base[c].begin(), base[c].end());
    for (std::size_t i = 1; i < 4; ++i) {
      for (Vertex x : base[perms[i - 1][c]]) want.insert(i * 305 + x);
    }
    const auto& got = built.fused.cliques.blocks[c];
    EXPECT_EQ(std::set<Vertex>(got.begin(), got.end()), want);
  }
  const auto s = cayley::strictness_check(built.fusion, g);
  EXPECT_TRUE(s.strict);
  EXPECT_EQ(s.basis, cayley::StrictnessBasis::SufficientCondition);
}

TEST(Cayley, TableRowsConstruct) {
  const auto b = cayley::construct_neumaier(7, 139, 26);
  EXPECT_EQ(b.t, 4u);
  EXPECT_EQ(b.params, (feasibility::NeumaierParams{3892, 165, 26, 1, 28}));
  EXPECT_TRUE(graph::verify_neumaier(b.fused.graph, b.params, b.witness, Workers(2)));
}

TEST(Cayley, ConstructErrors) {
  const auto bad = search::find_a(7, 5);
  ASSERT_FALSE(bad.empty());
  try {
    cayley::construct_neumaier(5, 7, bad.front());
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("mod q"), std::string::npos);
  }
  EXPECT_THROW(cayley::construct_neumaier(5, 61, 17, {}), InputError);
  std::vector<std::vector<std::size_t>> not_bijective(3, std::vector<std::size_t>(61, 0));
  EXPECT_THROW(cayley::construct_neumaier(5, 61, 17, not_bijective), InputError);
}

TEST(Cayley, FuseRejectsMismatchedCopies) {
  const auto a = cayley::gamma_pq({13, 5, 2});
  const auto b = cayley::gamma_pq({37, 5, 2});
  cayley::FusionSpec fs{{{a.graph, a.spread}, {b.graph, b.spread}}, {std::vector<std::size_t>(13)}};
  std::iota(fs.perms[0].begin(), fs.perms[0].end(), std::size_t{0});
  EXPECT_THROW(cayley::fuse(fs), InputError);
  EXPECT_THROW(cayley::fuse({}), InputError);
}

TEST(Cayley, ParsePermutation) {
  using P = std::vector<std::size_t>;
  EXPECT_EQ(cayley::parse_permutation("2 0 1", 3), (P{2, 0, 1}));
  EXPECT_EQ(cayley::parse_permutation("2,0,1", 3), (P{2, 0, 1}));
  EXPECT_EQ(cayley::parse_permutation("(0 2)(1 3)", 4), (P{2, 3, 0, 1}));
  EXPECT_EQ(cayley::parse_permutation("(0 1 2)", 4), (P{1, 2, 0, 3}));
  EXPECT_EQ(cayley::parse_permutation("()", 2), (P{0, 1}));
  for (const char* bad : {"0 0 1", "0 1", "(0 5)", "(0 1", "(0 1)(1 2)", "a b c", "0 1 3"}) {
    EXPECT_THROW(cayley::parse_permutation(bad, 3), InputError) << bad;
  }
}
