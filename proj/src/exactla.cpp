#include "divgraph/exactla.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "divgraph/error.hpp"
#include "divgraph/kernels.hpp"
#include "divgraph/modular.hpp"

namespace divgraph::exactla {
namespace {

std::size_t primes_for_bits(double bits) {
  // Every prime used is above 2^30.9.
  return static_cast<std::size_t>(std::ceil(bits / 30.9)) + 1;
}

// Kernel basis of the reduced echelon form, as residues: one vector of
// length `cols` per free column.
std::vector<std::vector<std::uint32_t>> kernel_residues(const kernels::ModEchelon& e, std::size_t cols) {
  const Modulus mod(e.prime);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = mod.neg(e.reduced(r, f));
    out.push_back(std::move(v));
  }
  return out;
}

bool multiply_is_zero(const IntMatrix& m, const std::vector<mpz_class>& v) {
  bool small = true;
  std::int64_t vmax = 0;
  for (const auto& x : v) {
    if (!x.fits_slong_p()) {
      small = false;
      break;
    }
    vmax = std::max<std::int64_t>(vmax, std::abs(x.get_si()));
  }
  std::int64_t mmax = 0;
  for (auto x : m.data()) mmax = std::max<std::int64_t>(mmax, x < 0 ? -x : x);
  // Accumulating in 128 bits is exact when cols * mmax * vmax < 2^120.
  small = small && std::log2(static_cast<double>(m.cols()) + 1) + std::log2(static_cast<double>(mmax) + 1) +
                           std::log2(static_cast<double>(vmax) + 1) <
                       120.0;
  if (small) {
    std::vector<std::int64_t> w(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[j].get_si();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      __int128 acc = 0;
      const auto row = m.row(i);
      for (std::size_t j = 0; j < m.cols(); ++j) acc += static_cast<__int128>(row[j]) * w[j];
      if (acc != 0) return false;
    }
    return true;
  }
  mpz_class acc;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) acc += v[j] * static_cast<long>(m(i, j));
    }
    if (acc != 0) return false;
  }
  return true;
}

// Tries to turn the CRT image of a modular kernel basis into integer vectors.
std::optional<KernelBasis> reconstruct_basis(const std::vector<std::vector<std::vector<std::uint32_t>>>& images,
                                             const std::vector<std::uint32_t>& primes) {
  const std::size_t count = images.front().size();
  KernelBasis basis(count);
  mpz_class modulus = 1;
  for (auto p : primes) modulus *= p;
  bool ok = true;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
    bool local_ok;
#pragma omp atomic read
    local_ok = ok;
    if (!local_ok) continue;
    std::vector<std::vector<std::uint32_t>> residues;
    residues.reserve(primes.size());
    for (const auto& image : images) residues.push_back(image[k]);
    const auto lifted = crt_symmetric(residues, primes);
    std::vector<mpq_class> q(lifted.size());
    mpz_class den = 1;
    for (std::size_t j = 0; j < lifted.size(); ++j) {
      if (lifted[j] == 0) continue;
      auto r = rational_reconstruction(lifted[j], modulus);
      if (!r) {
#pragma omp atomic write
        ok = false;
        break;
      }
      q[j] = *r;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q[j].get_den_mpz_t());
    }
    std::vector<mpz_class> v(lifted.size());
    for (std::size_t j = 0; j < lifted.size(); ++j) {
      mpq_class scaled = q[j] * den;
      v[j] = scaled.get_num();
    }
    basis[k] = std::move(v);
  }
  if (!ok) return std::nullopt;
  return basis;
}

NullityCertificate exact_certificate(const IntMatrix& m, const NullityOptions& options) {
  NullityCertificate cert;
  cert.method = NullityMode::rational_exact;
  cert.seed = options.seed;
  cert.basis = exact_kernel(m);
  cert.nullity = cert.basis.size();
  cert.basis_verified = true;
  if (!options.keep_basis) cert.basis.clear();
  return cert;
}

bool same_pivots(const kernels::ModEchelon& a, const kernels::ModEchelon& b) { return a.pivots == b.pivots; }

}  // namespace

std::string to_string(NullityMode mode) {
  return mode == NullityMode::rational_exact ? "rational-exact" : "modular-agreement";
}

double charpoly_coefficient_bound_bits(const IntMatrix& m) {
  // |c_{n-k}| <= sum over k-subsets S of |det M_S| <= e_k(r) <= prod(1 + r_i),
  // r_i the Euclidean norm of row i (Hadamard).
  long double bits = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    long double sq = 0;
    for (auto x : m.row(i)) sq += static_cast<long double>(x) * x;
    bits += std::log2(1.0L + std::sqrt(sq));
  }
  return static_cast<double>(bits);
}

IntPolynomial charpoly(const IntMatrix& m, const Limits& limits) {
  require(m.square(), "charpoly: matrix must be square");
  guard(m.rows() <= limits.charpoly_max_dim,
        "charpoly: dimension " + std::to_string(m.rows()) + " exceeds guard " +
            std::to_string(limits.charpoly_max_dim));
  const std::size_t n = m.rows();
  if (n == 0) return IntPolynomial{1};

  // Need prod(p) > 2B; four bits of slack cover rounding in the bound.
  const auto primes = descending_primes(primes_for_bits(charpoly_coefficient_bound_bits(m) + 5.0));
  std::vector<std::vector<std::uint32_t>> residues(primes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(primes.size()); ++k) {
    residues[k] = kernels::parallel::charpoly_mod(m, Modulus(primes[k]));
  }
  return IntPolynomial(crt_symmetric(residues, primes));
}

IntPolynomial charpoly_berkowitz(const IntMatrix& m) {
  require(m.square(), "charpoly_berkowitz: matrix must be square");
  const std::size_t n = m.rows();
  // Coefficients highest degree first while iterating.
  std::vector<mpz_class> p{1};
  for (std::size_t k = 0; k < n; ++k) {
    // A_k = [[A_{k-1}, c], [r, a]] with A_{k-1} the leading k x k block.
    std::vector<mpz_class> column(k + 2);
    column[0] = 1;
    column[1] = -static_cast<long>(m(k, k));
    std::vector<mpz_class> power(k), next(k);
    for (std::size_t i = 0; i < k; ++i) power[i] = static_cast<long>(m(i, k));
    for (std::size_t j = 0; j + 2 <= k + 1 && j < k; ++j) {
      mpz_class dot = 0;
      for (std::size_t i = 0; i < k; ++i) dot += static_cast<long>(m(k, i)) * power[i];
      column[j + 2] = -dot;
      for (std::size_t i = 0; i < k; ++i) {
        mpz_class acc = 0;
        for (std::size_t l = 0; l < k; ++l) {
          if (m(i, l) != 0) acc += static_cast<long>(m(i, l)) * power[l];
        }
        next[i] = acc;
      }
      std::swap(power, next);
    }
    std::vector<mpz_class> q(k + 2);
    for (std::size_t row = 0; row < k + 2; ++row) {
      for (std::size_t col = 0; col <= k && col <= row; ++col) q[row] += column[row - col] * p[col];
    }
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return IntPolynomial(std::move(p));
}

mpz_class determinant(const IntMatrix& m, const Limits& limits) {
  require(m.square(), "determinant: matrix must be square");
  guard(m.rows() <= limits.determinant_max_dim,
        "determinant: dimension " + std::to_string(m.rows()) + " exceeds guard " +
            std::to_string(limits.determinant_max_dim));
  return kernels::parallel::bareiss_determinant(m);
}

NullityCertificate nullity(const IntMatrix& m, const NullityOptions& options, const Limits& limits) {
  const std::size_t dim = std::max(m.rows(), m.cols());
  if (options.mode == NullityMode::rational_exact) {
    guard(dim <= limits.nullity_exact_max_dim, "nullity (rational-exact): dimension " + std::to_string(dim) +
                                                   " exceeds guard " + std::to_string(limits.nullity_exact_max_dim));
    return exact_certificate(m, options);
  }
  guard(dim <= limits.nullity_modular_max_dim, "nullity (modular): dimension " + std::to_string(dim) +
                                                   " exceeds guard " + std::to_string(limits.nullity_modular_max_dim));

  NullityCertificate cert;
  cert.method = NullityMode::modular;
  cert.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  const std::size_t cols = m.cols();

  std::optional<kernels::ModEchelon> base, second;
  for (unsigned attempt = 0; attempt <= options.max_retries; ++attempt) {
    const std::uint32_t p1 = random_prime(rng, cert.primes);
    cert.primes.push_back(p1);
    const std::uint32_t p2 = random_prime(rng, cert.primes);
    cert.primes.push_back(p2);
    auto e1 = kernels::parallel::rref_mod(m, Modulus(p1));
    auto e2 = kernels::parallel::rref_mod(m, Modulus(p2));
    if (e1.rank() == e2.rank()) {
      base = std::move(e1);
      second = std::move(e2);
      break;
    }
  }
  if (!base) {
    if (dim <= limits.nullity_exact_max_dim) return exact_certificate(m, options);
    throw VerificationError("nullity: modular ranks keep disagreeing");
  }

  // Lift: CRT over primes sharing the base pivot pattern until rational
  // reconstruction yields vectors that pass the exact check.
  std::vector<std::uint32_t> lifting{base->prime};
  std::vector<std::vector<std::vector<std::uint32_t>>> images{kernel_residues(*base, cols)};
  if (same_pivots(*base, *second)) {
    lifting.push_back(second->prime);
    images.push_back(kernel_residues(*second, cols));
  }
  const std::size_t claimed = cols - base->rank();
  while (true) {
    if (claimed == 0) {
      cert.nullity = 0;
      cert.basis_verified = true;
      cert.lifting_primes = lifting;
      return cert;
    }
    if (auto basis = reconstruct_basis(images, lifting)) {
      bool verified = true;
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(basis->size()); ++k) {
        if (!multiply_is_zero(m, (*basis)[k])) {
#pragma omp atomic write
          verified = false;
        }
      }
      if (verified) {
        cert.nullity = claimed;
        cert.basis_verified = true;
        cert.lifting_primes = lifting;
        if (options.keep_basis) cert.basis = std::move(*basis);
        return cert;
      }
    }
    if (lifting.size() >= options.max_lifting_primes) break;
    std::vector<std::uint32_t> used = cert.primes;
    used.insert(used.end(), lifting.begin(), lifting.end());
    const std::uint32_t p = random_prime(rng, used);
    auto e = kernels::parallel::rref_mod(m, Modulus(p));
    if (e.rank() > base->rank()) {
      // Both initial primes were unlucky; nothing lifted so far can be trusted.
      if (dim <= limits.nullity_exact_max_dim) return exact_certificate(m, options);
      throw VerificationError("nullity: rank grew under a later prime");
    }
    if (e.rank() == base->rank() && same_pivots(*base, e)) {
      lifting.push_back(p);
      images.push_back(kernel_residues(e, cols));
    }
  }
  if (dim <= limits.nullity_exact_max_dim) return exact_certificate(m, options);
  throw VerificationError("nullity: kernel basis could not be lifted and verified");
}

KernelBasis exact_kernel(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  DenseMatrix<mpz_class> a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = static_cast<long>(m(i, j));

  std::vector<std::size_t> pivots;
  mpz_class previous = 1, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(p, r);
#pragma omp parallel for schedule(dynamic, 4) private(t)
    for (std::int64_t i = static_cast<std::int64_t>(r) + 1; i < static_cast<std::int64_t>(rows); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = a(i, j) * a(r, c);
        mpz_submul(t.get_mpz_t(), a(i, c).get_mpz_t(), a(r, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, c) = 0;
    }
    previous = a(r, c);
    pivots.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  KernelBasis basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> x(cols);
    x[f] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      mpq_class acc = 0;
      for (std::size_t j = pivots[k] + 1; j < cols; ++j) {
        if (a(k, j) != 0 && x[j] != 0) acc += mpq_class(a(k, j)) * x[j];
      }
      x[pivots[k]] = -acc / mpq_class(a(k, pivots[k]));
    }
    mpz_class den = 1, g = 0;
    for (auto& q : x) {
      q.canonicalize();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<mpz_class> v(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class s = x[j] * den;
      v[j] = s.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
    }
    if (g > 1)
      for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    if (!multiply_is_zero(m, v)) throw VerificationError("exact_kernel: basis vector failed M v = 0");
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_eigenvector(const IntMatrix& m, const std::vector<mpz_class>& v, const mpz_class& lambda) {
  require(m.square() && v.size() == m.cols(), "is_eigenvector: dimension mismatch");
  mpz_class acc;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) acc += static_cast<long>(m(i, j)) * v[j];
    if (acc != lambda * v[i]) return false;
  }
  return true;
}

bool is_eigenvector(const IntMatrix& m, const std::vector<mpq_class>& v, const mpq_class& lambda) {
  require(m.square() && v.size() == m.cols(), "is_eigenvector: dimension mismatch");
  mpq_class acc;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) acc += static_cast<long>(m(i, j)) * v[j];
    if (acc != lambda * v[i]) return false;
  }
  return true;
}

std::size_t rank_of(const std::vector<std::vector<mpq_class>>& vectors) {
  if (vectors.empty()) return 0;
  auto rows = vectors;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<mpz_class> crt_symmetric(const std::vector<std::vector<std::uint32_t>>& residues,
                                     const std::vector<std::uint32_t>& primes) {
  require(!primes.empty() && residues.size() == primes.size(), "crt_symmetric: size mismatch");
  const std::size_t len = residues.front().size();
  std::vector<mpz_class> value(len);
  for (std::size_t j = 0; j < len; ++j) value[j] = residues[0][j];
  mpz_class modulus = primes[0];
  for (std::size_t k = 1; k < primes.size(); ++k) {
    const Modulus mod(primes[k]);
    const std::uint32_t m_mod_p = static_cast<std::uint32_t>(mpz_fdiv_ui(modulus.get_mpz_t(), primes[k]));
    const std::uint32_t inv = mod.inv(m_mod_p);
    for (std::size_t j = 0; j < len; ++j) {
      const auto current = static_cast<std::uint32_t>(mpz_fdiv_ui(value[j].get_mpz_t(), primes[k]));
      const std::uint32_t t = mod.mul(mod.sub(residues[k][j], current), inv);
      if (t != 0) value[j] += modulus * t;
    }
    modulus *= primes[k];
  }
  const mpz_class half = modulus / 2;
  for (auto& v : value)
    if (v > half) v -= modulus;
  return value;
}

std::optional<mpq_class> rational_reconstruction(const mpz_class& residue, const mpz_class& modulus) {
  mpz_class bound;
  mpz_class half = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = modulus, r1 = residue % modulus;
  if (r1 < 0) r1 += modulus;
  mpz_class s0 = 0, s1 = 1, q, tmp;
  while (r1 > bound) {
    q = r0 / r1;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class out(r1, s1);
  out.canonicalize();
  return out;
}

}  // namespace divgraph::exactla
