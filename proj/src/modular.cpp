#include "divgraph/modular.hpp"

#include <algorithm>

#include "divgraph/arith.hpp"
#include "divgraph/error.hpp"

namespace divgraph {

Modulus::Modulus(std::uint32_t p) : p_(p) {
  require(p >= 3 && p < (1u << 31), "Modulus: prime must lie in [3, 2^31)");
  barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

std::uint32_t Modulus::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> descending_primes(std::size_t count) {
  static std::vector<std::uint32_t> cache;
  static constexpr std::size_t kCacheLimit = 4096;
  if (count <= kCacheLimit) {
#pragma omp critical(divgraph_prime_cache)
    {
      if (cache.size() < count) {
        std::uint32_t c = cache.empty() ? (1u << 31) - 1 : cache.back() - 2;
        cache.reserve(kCacheLimit);
        while (cache.size() < kCacheLimit) {
          if (arith::is_prime(c)) cache.push_back(c);
          c -= 2;
        }
      }
    }
    return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = (1u << 31) - 1; out.size() < count; c -= 2) {
    if (arith::is_prime(c)) out.push_back(c);
  }
  return out;
}

std::uint32_t random_prime(std::mt19937_64& rng, const std::vector<std::uint32_t>& exclude) {
  std::uniform_int_distribution<std::uint32_t> dist((1u << 30) + 1, (1u << 31) - 1);
  for (;;) {
    const std::uint32_t c = dist(rng) | 1u;
    if (arith::is_prime(c) && std::find(exclude.begin(), exclude.end(), c) == exclude.end()) return c;
  }
}

}  // namespace divgraph
