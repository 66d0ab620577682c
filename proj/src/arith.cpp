#include "divgraph/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "divgraph/error.hpp"

namespace divgraph::arith {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Pollard-Brent; n is odd, composite, and has no factor below 1000.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t block = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += block;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

void enumerate_types(std::uint64_t budget, unsigned min_part, std::vector<unsigned>& prefix,
                     std::vector<FactorizationType>& out) {
  out.emplace_back(prefix);
  for (unsigned a = min_part; a + 1 <= budget; ++a) {
    prefix.push_back(a);
    enumerate_types(budget / (a + 1), a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

FactorizationType::FactorizationType(std::vector<unsigned> exponents) : parts_(std::move(exponents)) {
  for (unsigned a : parts_) require(a >= 1, "factorization type parts must be positive");
  std::sort(parts_.begin(), parts_.end());
}

FactorizationType FactorizationType::squarefree(unsigned omega) {
  return FactorizationType(std::vector<unsigned>(omega, 1));
}

FactorizationType FactorizationType::parse(const std::string& text) {
  std::vector<unsigned> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    const std::string token = item.substr(first, last - first + 1);
    require(std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }),
            "invalid factorization type entry '" + token + "'");
    require(token.size() <= 6, "factorization type entry too large: " + token);
    parts.push_back(static_cast<unsigned>(std::stoul(token)));
  }
  return FactorizationType(std::move(parts));
}

unsigned FactorizationType::big_omega() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::uint64_t FactorizationType::divisor_count() const {
  std::uint64_t v = 1;
  for (unsigned a : parts_) {
    guard(!__builtin_mul_overflow(v, std::uint64_t{a} + 1, &v), "divisor count overflows 64 bits");
  }
  return v;
}

bool FactorizationType::is_squarefree() const {
  return std::all_of(parts_.begin(), parts_.end(), [](unsigned a) { return a == 1; });
}

int FactorizationType::mobius() const {
  if (!is_squarefree()) return 0;
  return parts_.size() % 2 == 0 ? 1 : -1;
}

bool FactorizationType::has_part_one() const {
  return std::find(parts_.begin(), parts_.end(), 1u) != parts_.end();
}

FactorizationType FactorizationType::with_parts(std::initializer_list<unsigned> extra) const {
  std::vector<unsigned> parts = parts_;
  parts.insert(parts.end(), extra.begin(), extra.end());
  return FactorizationType(std::move(parts));
}

std::string FactorizationType::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factor(std::uint64_t n) {
  require(n >= 1, "factor: n must be positive");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_into(n, primes);
  std::sort(primes.begin(), primes.end());

  Factorization result;
  for (std::uint64_t p : primes) {
    if (!result.empty() && result.back().prime == p) {
      ++result.back().exponent;
    } else {
      result.push_back({p, 1});
    }
  }
  return result;
}

FactorizationType factorization_type(std::uint64_t n) {
  std::vector<unsigned> parts;
  for (const auto& pp : factor(n)) parts.push_back(pp.exponent);
  return FactorizationType(std::move(parts));
}

unsigned big_omega(std::uint64_t n) {
  unsigned total = 0;
  for (const auto& pp : factor(n)) total += pp.exponent;
  return total;
}

unsigned small_omega(std::uint64_t n) { return static_cast<unsigned>(factor(n).size()); }

int mobius(std::uint64_t n) {
  const auto f = factor(n);
  for (const auto& pp : f) {
    if (pp.exponent > 1) return 0;
  }
  return f.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> result{1};
  for (const auto& pp : factor(n)) {
    const std::size_t base = result.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) result.push_back(result[i] * power);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::uint64_t> first_primes(std::size_t k) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t c = 2; primes.size() < k; ++c) {
    if (is_prime(c)) primes.push_back(c);
  }
  return primes;
}

std::uint64_t instantiate(std::span<const unsigned> exponents, std::span<const std::uint64_t> primes) {
  require(primes.size() >= exponents.size(), "instantiate: not enough primes");
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (unsigned e = 0; e < exponents[i]; ++e) {
      guard(!__builtin_mul_overflow(n, primes[i], &n), "instantiated integer overflows 64 bits");
    }
  }
  return n;
}

std::vector<FactorizationType> types_up_to(std::uint64_t max_vertices) {
  std::vector<FactorizationType> out;
  if (max_vertices == 0) return out;
  std::vector<unsigned> prefix;
  enumerate_types(max_vertices, 1, prefix, out);
  std::sort(out.begin(), out.end(), [](const FactorizationType& a, const FactorizationType& b) {
    const auto va = a.divisor_count(), vb = b.divisor_count();
    if (va != vb) return va < vb;
    return a < b;
  });
  return out;
}

}  // namespace divgraph::arith
