#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace divgraph {

/// Arithmetic modulo a prime p < 2^31 with Barrett reduction of 62-bit products.
class Modulus {
 public:
  explicit Modulus(std::uint32_t p);

  std::uint32_t prime() const { return p_; }

  std::uint32_t reduce(std::uint64_t x) const {
    const std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    return static_cast<std::uint32_t>(r >= p_ ? r - p_ : r);
  }
  std::uint32_t from_signed(std::int64_t x) const {
    const std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return reduce(std::uint64_t{a} * b); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const { return pow(a, p_ - 2); }

 private:
  std::uint32_t p_;
  std::uint64_t barrett_;
};

/// Distinct primes strictly below 2^31, in descending order; deterministic.
std::vector<std::uint32_t> descending_primes(std::size_t count);

/// Uniformly random prime in (2^30, 2^31) not contained in `exclude`.
std::uint32_t random_prime(std::mt19937_64& rng, const std::vector<std::uint32_t>& exclude = {});

}  // namespace divgraph
