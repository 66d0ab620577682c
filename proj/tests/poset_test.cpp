#include <gtest/gtest.h>

#include <random>

#include "divgraph/error.hpp"
#include "divgraph/exactla.hpp"
#include "divgraph/graph.hpp"
#include "divgraph/poset.hpp"

using namespace divgraph;
using namespace divgraph::poset;

TEST(Poset, ValidatesRelation) {
  BitMatrix reflexive(2);
  reflexive.set(0, 0);
  EXPECT_THROW(FinitePoset{reflexive}, PreconditionError);
  BitMatrix cyclic(2);
  cyclic.set(0, 1);
  cyclic.set(1, 0);
  EXPECT_THROW(FinitePoset{cyclic}, PreconditionError);
  BitMatrix open(3);
  open.set(0, 1);
  open.set(1, 2);
  EXPECT_THROW(FinitePoset{open}, PreconditionError);
  open.set(0, 2);
  EXPECT_NO_THROW(FinitePoset{open});
}

TEST(Poset, Constructions) {
  const auto c = chain(4);
  EXPECT_TRUE(c.less(0, 3));
  EXPECT_FALSE(c.less(3, 0));
  EXPECT_EQ(antichain(3).relation().total_count(), 0u);

  const auto s = s0();
  EXPECT_TRUE(s.less(0, 3));
  EXPECT_TRUE(s.less(1, 3));
  EXPECT_FALSE(s.comparable(1, 2));

  EXPECT_EQ(product(chain(2), chain(2)), s);
  EXPECT_TRUE(order_isomorphic(divisor_poset(graph::Shape{1, 1}), s));
  EXPECT_EQ(cube_extension(chain(1), 2), s);
  EXPECT_EQ(comparability_graph(divisor_poset(graph::Shape{2, 1})),
            graph::DivGraph::build(graph::Shape{2, 1}).adjacency());
}

TEST(Poset, OrderIsomorphism) {
  EXPECT_TRUE(order_isomorphic(divisor_poset(graph::Shape{2, 1}), divisor_poset(graph::Shape{1, 2})));
  EXPECT_FALSE(order_isomorphic(chain(4), s0()));
  EXPECT_FALSE(order_isomorphic(chain(3), chain(4)));
}

TEST(Poset, RandomPosetsAreValid) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_poset(1 + trial % 12, 0.3, rng);
    EXPECT_EQ(p.size(), 1u + trial % 12);
    // Reconstructing from the relation revalidates it.
    EXPECT_NO_THROW(FinitePoset{p.relation()});
  }
}

TEST(Lift, ChainOfTwo) {
  const auto r = verify_poset_lift(chain(2));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.f_base, (IntPolynomial{-1, 0, 1}));
  ASSERT_TRUE(r.quotient);
  EXPECT_EQ(r.f_base * *r.quotient, r.f_lifted);
}

TEST(Lift, TensorWithH) {
  // g tensor h is an eigenvector of P x S0 for every eigenvector g of P.
  const auto h = h_vector();
  ASSERT_EQ(h.size(), 4u);
  EXPECT_EQ(h[1], -1);
  EXPECT_EQ(h[2], 1);
  const auto p = chain(3);
  const std::vector<mpq_class> g{1, -1, 0};  // eigenvalue -1 of K3
  const auto f = tensor_lift(g, h);
  const auto m = to_int_matrix(comparability_graph(product(p, s0())));
  EXPECT_TRUE(exactla::is_eigenvector(m, f, mpq_class(-1)));
}

TEST(Lift, RandomPosets) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = random_poset(1 + trial % 8, 0.4, rng);
    const auto r = verify_poset_lift(p);
    ASSERT_TRUE(r.ok()) << trial;
    for (const auto& e : r.eigen_checks) ASSERT_TRUE(e.ok());
  }
  EXPECT_THROW(verify_poset_lift(chain(11)), PreconditionError);
}

TEST(Lift, Squared) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 12; ++trial) {
    const auto p = random_poset(1 + trial % 5, 0.5, rng);
    ASSERT_TRUE(verify_poset_lift_squared(p).ok()) << trial;
  }
  EXPECT_THROW(verify_poset_lift_squared(chain(7)), PreconditionError);
}
