#include <gtest/gtest.h>

#include "divgraph/arith.hpp"
#include "divgraph/error.hpp"
#include "divgraph/exactla.hpp"
#include "divgraph/spectra.hpp"
#include "oracles.hpp"

using namespace divgraph;
using namespace divgraph::spectra;
using arith::FactorizationType;

namespace {

FactorizationType ft(std::vector<unsigned> parts) { return FactorizationType(parts); }

}  // namespace

TEST(Divisibility, QuotientsAgainstOracle) {
  const auto r = verify_f_divides(ft({1, 1}));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.f_base * *r.quotient, oracle::charpoly(oracle::shape_adjacency({1, 1, 1, 1})));
  ASSERT_TRUE(r.integer_spot_check);
  EXPECT_TRUE(*r.integer_spot_check);

  const auto sq = verify_f_squared_divides(ft({1, 1}));
  ASSERT_TRUE(sq.ok());
  EXPECT_EQ(sq.quotient->to_string(), "x^8 - 55x^6 - 212x^5 - 53x^4 + 1096x^3 + 2347x^2 + 1932x + 576");

  const auto r2 = verify_f_divides(ft({2}));
  ASSERT_TRUE(r2.ok());
  EXPECT_EQ(r2.quotient->to_string(), "x^9 - 39x^7 - 126x^6 - 28x^5 + 416x^4 + 631x^3 + 228x^2 - 117x - 70");
  EXPECT_EQ(r2.f_extended, oracle::charpoly(oracle::shape_adjacency({2, 1, 1})));
}

TEST(Divisibility, SmallTypes) {
  for (const auto& t : arith::types_up_to(24)) {
    ASSERT_TRUE(verify_f_divides(t).ok()) << t.to_string();
    if (t.has_part_one()) ASSERT_TRUE(verify_f_squared_divides(t).ok()) << t.to_string();
  }
  EXPECT_THROW(verify_f_squared_divides(ft({2})), PreconditionError);
}

TEST(Witness, Mobius) {
  for (std::uint64_t n : {30u, 42u, 105u, 2310u, 510510u}) {
    const auto w = mobius_eigenvector(n);
    EXPECT_TRUE(w.verified) << n;
    EXPECT_TRUE(verify_witness(w));
    EXPECT_EQ(w.eigenvalue, -2);
  }
  EXPECT_THROW(mobius_eigenvector(6), PreconditionError);   // mu = 1
  EXPECT_THROW(mobius_eigenvector(7), PreconditionError);   // Omega = 1
  EXPECT_THROW(mobius_eigenvector(12), PreconditionError);  // mu = 0
}

TEST(Witness, MinusOne) {
  for (const auto& t : arith::types_up_to(96)) {
    if (t.empty()) continue;
    const auto w = minus_one_eigenvector(t);
    ASSERT_TRUE(w.verified) << t.to_string();
    const auto a = adjacency_matrix(t);
    ASSERT_TRUE(exactla::is_eigenvector(a, w.canonical_vector(), -1)) << t.to_string();
  }
}

TEST(Witness, TamperedVectorRejected) {
  auto w = mobius_eigenvector(30);
  w.vector[0] += 1;
  EXPECT_FALSE(verify_witness(w));
}

TEST(Spectrum, SquarefreeTriple) {
  const auto r = special_multiplicities(ft({1, 1, 1}), {-2, -1, 0, 1});
  EXPECT_EQ(r.vertices, 8u);
  EXPECT_EQ(r.edges, 19u);
  ASSERT_TRUE(r.determinant);
  EXPECT_EQ(*r.determinant, -20);
  EXPECT_EQ(r.multiplicity(-2), 2u);
  EXPECT_EQ(r.multiplicity(-1), 3u);
  EXPECT_EQ(r.multiplicity(0), 0u);
  EXPECT_EQ(r.multiplicity(1), 2u);
  EXPECT_TRUE(r.consistent());
}

TEST(Spectrum, AgreesWithCharpolyMultiplicities) {
  for (const auto& t : arith::types_up_to(36)) {
    const auto r = special_multiplicities(t, {-2, -1, 0, 1, 2});
    const auto f = charpoly_of_type(t);
    for (long l = -2; l <= 2; ++l) ASSERT_EQ(r.multiplicity(l), eval_multiplicity(f, l)) << t.to_string() << l;
    ASSERT_TRUE(r.consistent()) << t.to_string();
  }
}

TEST(Spectrum, Guard) {
  SpectrumOptions options;
  options.max_vertices = 10;
  EXPECT_THROW(special_multiplicities(ft({1, 1, 1, 1}), {0}, options), GuardError);
}

TEST(Tables, SmallSquarefree) {
  const auto table = multiplicity_table({-2, -1, 0, 1}, 2, 6);
  ASSERT_EQ(table.size(), 20u);
  // omega = 3 row from the triple above; omega = 2 from x^4 - 5x^2 - 4x.
  for (const auto& c : table) {
    if (c.omega == 2 && c.lambda == 0) EXPECT_EQ(c.multiplicity, 1u);
    if (c.omega == 2 && c.lambda == -1) EXPECT_EQ(c.multiplicity, 1u);
    if (c.omega == 3 && c.lambda == -2) EXPECT_EQ(c.multiplicity, 2u);
  }
  EXPECT_TRUE(oeis_pattern_checks(table).all_hold());
}

TEST(Tables, Catalan) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(5), 42);
  EXPECT_EQ(catalan(10), 16796);
}

TEST(Vm, Dimensions) {
  const std::vector<std::size_t> expected{1, 1, 2, 5};
  for (unsigned m = 0; m < expected.size(); ++m) {
    const auto s = vm_space(m);
    EXPECT_EQ(s.dimension, expected[m]) << m;
    EXPECT_TRUE(s.in_nullspace);
    for (const auto& f : s.basis) EXPECT_TRUE(satisfies_vm_constraints(m, f));
  }
  EXPECT_TRUE(vm_tensor_inclusion(1, 1).ok());
  EXPECT_TRUE(vm_tensor_inclusion(1, 2).ok());
}

TEST(Determinants, Sequence) {
  const auto r = det_sequence_pq_power(24);
  EXPECT_TRUE(r.ok());
  const std::vector<long> base{-1, 0, 3, 5, 4, 1};
  for (std::size_t a = 0; a < r.determinants.size(); ++a) EXPECT_EQ(r.determinants[a], base[a % 6]);
  EXPECT_EQ(pq_power_matrix(5), reference_m5());
  for (unsigned a = 0; a <= 8; ++a) {
    // The displayed order is a relabelling of the canonical one.
    const auto t = a == 0 ? ft({1}) : ft({1, a});
    EXPECT_EQ(exactla::charpoly(pq_power_matrix(a)), charpoly_of_type(t)) << a;
  }
}

TEST(ZeroEigenvalue, Mod6) {
  for (unsigned a = 0; a <= 20; ++a) {
    const auto z = zero_iff_mod6(a);
    EXPECT_TRUE(z.ok()) << a;
    EXPECT_EQ(z.predicted, a % 6 == 1);
  }
}

TEST(KernelVectors, TwoPrimePowers) {
  for (auto [u, v] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {1, 7}, {7, 1}, {7, 13}, {13, 13}}) {
    const auto w = kernel_vector_two_prime_powers(u, v);
    ASSERT_TRUE(w.verified) << u << "," << v;
    const auto a = adjacency_matrix(ft({u, v}));
    ASSERT_TRUE(exactla::is_eigenvector(a, w.canonical_vector(), 0));
  }
  EXPECT_THROW(kernel_vector_two_prime_powers(2, 7), PreconditionError);
}

TEST(KernelVectors, BlockIdentities) {
  for (unsigned v : {1u, 7u, 13u, 19u}) {
    const auto r = six_case_identities(v);
    EXPECT_TRUE(r.ok()) << v;
    EXPECT_EQ(r.s, -2);
  }
  EXPECT_EQ(pq_block("A", 1).size(), 2u);
}
