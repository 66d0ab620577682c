#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace divgraph::arith {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime powers with strictly increasing primes; empty for n = 1.
using Factorization = std::vector<PrimePower>;

/// Sorted multiset of prime exponents (a_1 <= ... <= a_d). Determines the
/// divisibility graph up to isomorphism. The empty type stands for n = 1.
class FactorizationType {
 public:
  FactorizationType() = default;
  /// Sorts the exponents; rejects zero entries.
  explicit FactorizationType(std::vector<unsigned> exponents);

  static FactorizationType squarefree(unsigned omega);
  /// Parses "a1,a2,..." (any order, whitespace tolerated). "" is the empty type.
  static FactorizationType parse(const std::string& text);

  std::span<const unsigned> parts() const { return parts_; }
  const std::vector<unsigned>& exponents() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Omega(n) = sum of exponents.
  unsigned big_omega() const;
  /// prod(a_i + 1); throws GuardError on 64-bit overflow.
  std::uint64_t divisor_count() const;
  bool is_squarefree() const;
  int mobius() const;
  bool has_part_one() const;

  /// Appends parts (re-sorting), e.g. with_parts({1,1}) adds two fresh primes.
  FactorizationType with_parts(std::initializer_list<unsigned> extra) const;

  std::string to_string() const;

  friend auto operator<=>(const FactorizationType&, const FactorizationType&) = default;
  friend bool operator==(const FactorizationType&, const FactorizationType&) = default;

 private:
  std::vector<unsigned> parts_;
};

bool is_prime(std::uint64_t n);

/// Trial division for small factors, Pollard-Brent beyond. Rejects n = 0.
Factorization factor(std::uint64_t n);
FactorizationType factorization_type(std::uint64_t n);

unsigned big_omega(std::uint64_t n);
unsigned small_omega(std::uint64_t n);
int mobius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// The first k primes 2, 3, 5, ...
std::vector<std::uint64_t> first_primes(std::size_t k);

/// Product of primes[i]^parts[i]. Throws GuardError on overflow.
std::uint64_t instantiate(std::span<const unsigned> exponents, std::span<const std::uint64_t> primes);

/// Every factorization type with prod(a_i + 1) <= max_vertices, ordered by
/// vertex count and then lexicographically.
std::vector<FactorizationType> types_up_to(std::uint64_t max_vertices);

}  // namespace divgraph::arith
