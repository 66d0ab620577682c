#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "divgraph/error.hpp"
#include "divgraph/graph.hpp"
#include "divgraph/planarity.hpp"
#include "oracles.hpp"

using namespace divgraph;
using namespace divgraph::graph;

namespace {

IntMatrix adjacency_of(const DivGraph& g) { return to_int_matrix(g.adjacency()); }

}  // namespace

TEST(Build, MatchesOdometerOracle) {
  for (const Shape& s : std::vector<Shape>{{}, {1}, {3}, {1, 1}, {2, 1}, {1, 2, 3}, {2, 2, 2}, {1, 1, 1, 1}})
    ASSERT_EQ(adjacency_of(DivGraph::build(s)), oracle::shape_adjacency(s));
}

TEST(Build, VertexOrder) {
  const auto g = DivGraph::build(Shape{2, 1});
  EXPECT_EQ(g.vertex(1), (ExponentVector{1, 0}));
  EXPECT_EQ(g.vertex(3), (ExponentVector{0, 1}));
  EXPECT_EQ(g.index_of(ExponentVector{2, 1}), 5u);
  EXPECT_EQ(g.weight(5), 3u);
  for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.index_of(g.vertex(i)), i);
}

TEST(Build, Guards) {
  EXPECT_THROW(DivGraph::build(Shape(17, 1)), GuardError);
  EXPECT_THROW(DivGraph::build(Shape{1024, 1024}), GuardError);
  EXPECT_THROW(DivGraph::build(Shape{0, 1}), PreconditionError);
}

TEST(BuildFromInteger, MatchesTrialDivision) {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    std::vector<std::uint64_t> labels;
    const IntMatrix expected = oracle::divisor_adjacency(n, &labels);
    const auto ig = build_from_integer(n);
    std::vector<std::uint64_t> sorted = ig.labels;
    std::sort(sorted.begin(), sorted.end());
    ASSERT_EQ(sorted, labels) << n;
    // Adjacency on labels agrees with divisibility.
    for (std::size_t i = 0; i < ig.labels.size(); ++i)
      for (std::size_t j = 0; j < ig.labels.size(); ++j) {
        const auto a = ig.labels[i], b = ig.labels[j];
        ASSERT_EQ(ig.graph.adjacent(i, j), i != j && (a % b == 0 || b % a == 0));
      }
    // Relabelling to the canonical type order is a graph isomorphism.
    const auto canonical = DivGraph::build(arith::factorization_type(n));
    ASSERT_EQ(ig.graph.adjacency().permuted(ig.to_canonical), canonical.adjacency()) << n;
  }
}

TEST(BuildFromInteger, LabelOrder) {
  EXPECT_EQ(build_from_integer(45).labels, (std::vector<std::uint64_t>{1, 3, 9, 5, 15, 45}));
  EXPECT_EQ(build_from_integer(12).labels, (std::vector<std::uint64_t>{1, 2, 4, 3, 6, 12}));
}

TEST(Counts, Examples) {
  EXPECT_EQ(counts(Shape{}).vertices, 1u);
  EXPECT_EQ(counts(Shape{}).edges, 0u);
  EXPECT_EQ(counts(Shape{1, 1}).edges, 5u);
  EXPECT_EQ(counts(Shape{2, 2}).vertices, 9u);
  EXPECT_EQ(counts(Shape{2, 2}).edges, 27u);
  EXPECT_EQ(counts(Shape{1, 1, 1}).edges, 19u);
}

TEST(Counts, MatchBuiltGraph) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Shape s = oracle::random_shape(rng, 400);
    const auto g = DivGraph::build(s);
    const auto c = counts(s);
    ASSERT_EQ(c.vertices, g.order());
    ASSERT_EQ(c.edges, g.edge_count());
  }
  // Large shapes stay exact.
  const auto big = counts(Shape(16, 1));
  EXPECT_EQ(big.vertices, 65536u);
  EXPECT_EQ(big.edges, 43046721u - 65536u);
}

TEST(Degree, ClosedFormAndDelta) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Shape s = oracle::random_shape(rng, 300);
    const auto g = DivGraph::build(s);
    for (std::size_t x = 0; x < g.order(); ++x) {
      const auto alpha = g.vertex(x);
      ASSERT_EQ(degree(s, alpha), static_cast<std::int64_t>(g.degree(x)));
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (alpha[i] == s[i]) continue;
        auto up = alpha;
        ++up[i];
        ASSERT_EQ(degree(s, up) - degree(s, alpha), delta(s, alpha, i));
      }
    }
  }
}

TEST(Degree, MinimumAnalysis) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Shape s = oracle::random_shape(rng, 500);
    const auto profile = min_degree_analysis(s);
    ASSERT_TRUE(profile.ok());
    const auto g = DivGraph::build(s);
    std::size_t m = g.order() ? g.degree(0) : 0;
    for (std::size_t x = 0; x < g.order(); ++x) m = std::min(m, g.degree(x));
    ASSERT_EQ(profile.min_degree, static_cast<std::int64_t>(m));
  }
}

TEST(Lucas, MatchesSquarefreeGraph) {
  for (unsigned k = 0; k <= 8; ++k) {
    const auto g = DivGraph::build(Shape(k, 1));
    ASSERT_EQ(lucas_adjacency(k), g.adjacency()) << k;
  }
  EXPECT_THROW(lucas_adjacency(17), PreconditionError);
}

TEST(Distance, AtMostTwo) {
  const auto g = DivGraph::build(Shape{1, 2, 1});
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      const unsigned d = distance(g, x, y);
      ASSERT_EQ(d == 0, x == y);
      ASSERT_EQ(d == 1, g.adjacent(x, y));
      const auto bfs = bfs_distances(g.adjacency(), x);
      ASSERT_EQ(bfs[y], d);
    }
}

TEST(Connectivity, PredictedClasses) {
  for (const Shape& s : std::vector<Shape>{{}, {1}, {2}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {3, 1, 2}}) {
    const auto r = connectivity_checks(s);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.connected);
  }
  EXPECT_FALSE(connectivity_checks(Shape{1, 1}).middle_connected);
  EXPECT_TRUE(connectivity_checks(Shape{1}).bipartite);
  EXPECT_FALSE(connectivity_checks(Shape{2}).bipartite);
  EXPECT_EQ(connectivity_checks(Shape{1, 1}).diameter, 2u);
  EXPECT_EQ(connectivity_checks(Shape{3}).diameter, 1u);
}

TEST(Cliques, AgainstBruteForce) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const Shape s = oracle::random_shape(rng, 48);
    const auto g = DivGraph::build(s);
    const auto c = clique_number(s);
    const auto i = independence_number(s);
    ASSERT_TRUE(c.ok());
    ASSERT_TRUE(i.ok());
    ASSERT_EQ(c.size, max_clique_size(g.adjacency()));
    ASSERT_EQ(i.size, max_independent_set_size(g.adjacency()));
    const auto col = omega_coloring(s);
    ASSERT_TRUE(col.ok());
  }
  EXPECT_EQ(clique_number(Shape{2, 2}).size, 5u);
  EXPECT_EQ(independence_number(Shape{2, 2}).size, 3u);
  EXPECT_EQ(independence_number(Shape{1, 1, 1, 1}).size, 6u);
}

TEST(Planarity, MinimalTypes) {
  for (const Shape& s : std::vector<Shape>{{}, {1}, {2}, {3}, {1, 1}, {1, 2}, {2, 1}})
    EXPECT_TRUE(planarity_class(s).planar);
  const std::vector<std::pair<Shape, WitnessKind>> minimal{{{4}, WitnessKind::k5},
                                                           {{1, 3}, WitnessKind::k33},
                                                           {{2, 2}, WitnessKind::k5_subdivision},
                                                           {{1, 1, 1}, WitnessKind::k5_subdivision}};
  for (const auto& [s, kind] : minimal) {
    const auto pc = planarity_class(s);
    ASSERT_FALSE(pc.planar);
    EXPECT_EQ(pc.witness.kind, kind);
    EXPECT_TRUE(witness_is_valid(DivGraph::build(s), pc.witness));
    EXPECT_FALSE(planarity_oracle(DivGraph::build(s)));
  }
}

TEST(Planarity, ClassificationMatchesOracle) {
  for (const auto& t : arith::types_up_to(120)) {
    const auto g = DivGraph::build(t);
    const auto pc = planarity_class(t.parts());
    ASSERT_EQ(pc.planar, planarity_oracle(g)) << t.to_string();
    if (!pc.planar) {
      ASSERT_TRUE(pc.offending_subtype);
      ASSERT_TRUE(witness_is_valid(g, pc.witness)) << t.to_string();
    }
  }
}

TEST(Planarity, PermutedShapes) {
  // Coordinate order must not matter for the witness.
  for (const Shape& s : std::vector<Shape>{{3, 1}, {2, 1, 1}, {1, 2, 1}, {1, 5}, {2, 3}}) {
    const auto pc = planarity_class(s);
    ASSERT_FALSE(pc.planar);
    EXPECT_TRUE(witness_is_valid(DivGraph::build(s), pc.witness));
  }
}

TEST(Planarity, InvalidWitnessRejected) {
  const auto g = DivGraph::build(Shape{1, 1});
  KuratowskiWitness w;
  w.kind = WitnessKind::k5;
  w.branch = {0, 1, 2, 3};
  EXPECT_FALSE(witness_is_valid(g, w));
  EXPECT_THROW(planarity_oracle(BitMatrix(300)), GuardError);
}

TEST(Dot, Export) {
  const auto ig = build_from_integer(6);
  const std::string dot = to_dot(ig.graph, &ig.labels);
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("\"6\""), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '-') / 2, 5);
  EXPECT_EQ(dot, to_dot(ig.graph, &ig.labels));
}
