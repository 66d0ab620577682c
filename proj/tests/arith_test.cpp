#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "divgraph/arith.hpp"
#include "divgraph/error.hpp"

using namespace divgraph;
using namespace divgraph::arith;

TEST(Factor, SmallIntegers) {
  EXPECT_TRUE(factor(1).empty());
  EXPECT_EQ(factor(45), (Factorization{{3, 2}, {5, 1}}));
  EXPECT_EQ(factor(36), (Factorization{{2, 2}, {3, 2}}));
  EXPECT_THROW(factor(0), PreconditionError);
}

TEST(Factor, LargeSemiprimeAndPrime) {
  EXPECT_EQ(factor(1000000007ULL * 998244353ULL), (Factorization{{998244353, 1}, {1000000007, 1}}));
  EXPECT_EQ(factor(18446744073709551557ULL), (Factorization{{18446744073709551557ULL, 1}}));
  EXPECT_TRUE(is_prime(2147483647));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Factor, ProductRoundTrip) {
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    std::uint64_t product = 1;
    std::uint64_t last = 0;
    for (const auto& pp : factor(n)) {
      ASSERT_GT(pp.prime, last);
      ASSERT_TRUE(is_prime(pp.prime));
      last = pp.prime;
      for (unsigned e = 0; e < pp.exponent; ++e) product *= pp.prime;
    }
    ASSERT_EQ(product, n);
  }
}

TEST(FactorizationTypeTest, Examples) {
  EXPECT_EQ(factorization_type(45).exponents(), (std::vector<unsigned>{1, 2}));
  EXPECT_EQ(factorization_type(27).exponents(), (std::vector<unsigned>{3}));
  EXPECT_TRUE(factorization_type(1).empty());
  EXPECT_EQ(FactorizationType::parse("2, 1").to_string(), "(1,2)");
  EXPECT_EQ(FactorizationType::parse("").to_string(), "()");
  EXPECT_THROW(FactorizationType::parse("1,x"), PreconditionError);
  EXPECT_THROW(FactorizationType({0, 1}), PreconditionError);
}

TEST(FactorizationTypeTest, Queries) {
  const FactorizationType t({2, 1, 1});
  EXPECT_EQ(t.big_omega(), 4u);
  EXPECT_EQ(t.divisor_count(), 12u);
  EXPECT_FALSE(t.is_squarefree());
  EXPECT_EQ(t.mobius(), 0);
  EXPECT_TRUE(t.has_part_one());
  EXPECT_EQ(t.with_parts({1, 1}).to_string(), "(1,1,1,1,2)");
  EXPECT_EQ(FactorizationType::squarefree(3).mobius(), -1);
  EXPECT_EQ(FactorizationType().mobius(), 1);
  EXPECT_THROW(FactorizationType(std::vector<unsigned>(70, 1)).divisor_count(), GuardError);
}

TEST(Functions, Examples) {
  EXPECT_EQ(big_omega(36), 4u);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(divisors(6), (std::vector<std::uint64_t>{1, 2, 3, 6}));
  EXPECT_EQ(big_omega(1), 0u);
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(small_omega(360), 3u);
  EXPECT_EQ(mobius(12), 0);
}

TEST(Functions, MobiusSumsOverDivisors) {
  for (std::uint64_t m = 1; m <= 10000; ++m) {
    int sum = 0;
    for (auto d : divisors(m)) sum += mobius(d);
    ASSERT_EQ(sum, m == 1 ? 1 : 0) << m;
  }
}

TEST(Functions, DivisorCountMatchesType) {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const auto d = divisors(n);
    ASSERT_EQ(d.size(), factorization_type(n).divisor_count()) << n;
    ASSERT_TRUE(std::is_sorted(d.begin(), d.end()));
    ASSERT_EQ(mobius(n) == 0, !factorization_type(n).is_squarefree());
  }
}

TEST(Functions, TypeIsInvariantUnderRelabelling) {
  std::mt19937_64 rng(11);
  const auto pool = first_primes(12);
  for (const auto& t : types_up_to(200)) {
    if (t.length() > 4) continue;
    for (int trial = 0; trial < 2; ++trial) {
      std::vector<std::uint64_t> primes(pool.begin(), pool.end());
      std::shuffle(primes.begin(), primes.end(), rng);
      primes.resize(t.length());
      std::uint64_t n = 0;
      try {
        n = instantiate(t.parts(), primes);
      } catch (const GuardError&) {
        continue;
      }
      ASSERT_EQ(factorization_type(n), t);
    }
  }
}

TEST(Functions, TypesUpTo) {
  const auto types = types_up_to(8);
  std::vector<std::string> names;
  for (const auto& t : types) names.push_back(t.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"()", "(1)", "(2)", "(1,1)", "(3)", "(4)", "(1,2)", "(5)", "(6)",
                                             "(1,1,1)", "(1,3)", "(7)"}));
  // The vertex count is recomputed independently and no type repeats.
  std::set<FactorizationType> seen;
  for (const auto& t : types_up_to(500)) {
    ASSERT_LE(t.divisor_count(), 500u);
    ASSERT_TRUE(seen.insert(t).second);
  }
  EXPECT_THROW(instantiate(std::vector<unsigned>{64}, std::vector<std::uint64_t>{2}), GuardError);
}
