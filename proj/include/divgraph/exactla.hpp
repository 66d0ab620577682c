#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divgraph/matrix.hpp"
#include "divgraph/polynomial.hpp"

namespace divgraph::exactla {

/// Dimension guards. Exceeding one raises GuardError.
struct Limits {
  std::size_t charpoly_max_dim = 320;
  std::size_t determinant_max_dim = 4096;
  std::size_t nullity_modular_max_dim = 8192;
  std::size_t nullity_exact_max_dim = 512;
};

/// det(xI - M) by the multimodular route: Hessenberg reduction modulo enough
/// 31-bit primes to exceed twice a Hadamard-type coefficient bound, then CRT.
IntPolynomial charpoly(const IntMatrix& m, const Limits& limits = {});

/// det(xI - M) by Berkowitz's division-free algorithm over the integers.
/// O(n^4) big-integer work; kept as the independent reference route.
IntPolynomial charpoly_berkowitz(const IntMatrix& m);

/// log2 of a bound B with |c_k| <= B for every coefficient of det(xI - M).
double charpoly_coefficient_bound_bits(const IntMatrix& m);

/// Exact determinant by fraction-free elimination.
mpz_class determinant(const IntMatrix& m, const Limits& limits = {});

enum class NullityMode { rational_exact, modular };

std::string to_string(NullityMode mode);

/// Integer kernel vectors (denominators cleared).
using KernelBasis = std::vector<std::vector<mpz_class>>;

struct NullityCertificate {
  std::size_t nullity = 0;
  NullityMode method = NullityMode::modular;
  /// Primes whose ranks were compared (modular mode), in the order tried.
  std::vector<std::uint32_t> primes;
  /// Primes combined by CRT to lift the kernel basis.
  std::vector<std::uint32_t> lifting_primes;
  std::uint64_t seed = 0;
  /// Every vector satisfies M v = 0 exactly and the set is independent.
  bool basis_verified = false;
  KernelBasis basis;
};

struct NullityOptions {
  NullityMode mode = NullityMode::modular;
  std::uint64_t seed = 0x5eed;
  bool keep_basis = false;
  /// Rank disagreements tolerated before escalating to rational_exact.
  unsigned max_retries = 3;
  /// Upper bound on primes combined while lifting the kernel basis.
  unsigned max_lifting_primes = 24;
};

/// dim ker(M) over the rationals, certified either by exact elimination or
/// by two agreeing modular ranks plus an exactly verified lifted kernel
/// basis of that size. Works on rectangular matrices as well.
NullityCertificate nullity(const IntMatrix& m, const NullityOptions& options = {}, const Limits& limits = {});

/// Kernel basis over the rationals by fraction-free elimination. Each vector
/// is scaled to coprime integers with a positive entry at its free column.
KernelBasis exact_kernel(const IntMatrix& m);

/// Is M v = lambda v exactly?
bool is_eigenvector(const IntMatrix& m, const std::vector<mpz_class>& v, const mpz_class& lambda);
bool is_eigenvector(const IntMatrix& m, const std::vector<mpq_class>& v, const mpq_class& lambda);

/// Rank over the rationals of a set of rational vectors.
std::size_t rank_of(const std::vector<std::vector<mpq_class>>& vectors);

/// Chinese remaindering: symmetric representatives in (-M/2, M/2].
std::vector<mpz_class> crt_symmetric(const std::vector<std::vector<std::uint32_t>>& residues,
                                     const std::vector<std::uint32_t>& primes);

/// Rational number with |num|, den <= sqrt(modulus / 2) congruent to `residue`, if any.
std::optional<mpq_class> rational_reconstruction(const mpz_class& residue, const mpz_class& modulus);

}  // namespace divgraph::exactla
