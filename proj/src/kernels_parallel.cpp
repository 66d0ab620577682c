#include <cstdint>

#include "divgraph/kernels.hpp"

namespace divgraph::kernels::parallel {
namespace {

DenseMatrix<std::uint32_t> reduce_matrix(const IntMatrix& m, const Modulus& mod) {
  DenseMatrix<std::uint32_t> a(m.rows(), m.cols());
  const auto rows = static_cast<std::int64_t>(m.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = mod.from_signed(m(i, j));
  return a;
}

// row[j] -= f * pivot_row[j] for j >= from. The subtraction is folded into an
// addition of (p - f) * x so the inner loop stays branch-light.
inline void axpy_row(std::uint32_t* row, const std::uint32_t* pivot_row, std::size_t from, std::size_t to,
                     std::uint32_t f, const Modulus& mod) {
  const std::uint64_t nf = mod.neg(f);
  for (std::size_t j = from; j < to; ++j) row[j] = mod.reduce(row[j] + nf * pivot_row[j]);
}

}  // namespace

ModEchelon rref_mod(const IntMatrix& m, const Modulus& mod) {
  const std::size_t rows = m.rows(), cols = m.cols();
  DenseMatrix<std::uint32_t> a = reduce_matrix(m, mod);

  ModEchelon out;
  out.prime = mod.prime();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    a.swap_rows(pivot, r);
    const std::uint32_t inv = mod.inv(a(r, c));
    std::uint32_t* prow = a.row(r).data();
    for (std::size_t j = c; j < cols; ++j) prow[j] = mod.mul(prow[j], inv);

    const auto nrows = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nrows; ++i) {
      if (static_cast<std::size_t>(i) == r) continue;
      std::uint32_t* row = a.row(i).data();
      const std::uint32_t f = row[c];
      if (f != 0) axpy_row(row, prow, c, cols, f, mod);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = DenseMatrix<std::uint32_t>(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.reduced(i, j) = a(i, j);
  return out;
}

std::vector<std::uint32_t> charpoly_mod(const IntMatrix& m, const Modulus& mod) {
  const std::size_t n = m.rows();
  DenseMatrix<std::uint32_t> h = reduce_matrix(m, mod);
  std::vector<std::uint32_t> u(n, 0);

  // Each step applies L H L^{-1} with L = I - sum_r u_r e_r e_{k+1}^T, i.e.
  // all rows below k+1 are cleared at once, then column k+1 absorbs the
  // inverse update. Rows and then columns are independent within a step.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t pivot = k + 1;
    while (pivot < n && h(pivot, k) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != k + 1) {
      h.swap_rows(pivot, k + 1);
      for (std::size_t t = 0; t < n; ++t) std::swap(h(t, pivot), h(t, k + 1));
    }
    const std::uint32_t inv = mod.inv(h(k + 1, k));
    const std::uint32_t* prow = h.row(k + 1).data();
    const auto first = static_cast<std::int64_t>(k + 2), last = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = first; r < last; ++r) {
      std::uint32_t* row = h.row(r).data();
      u[r] = mod.mul(row[k], inv);
      if (u[r] != 0) axpy_row(row, prow, k, n, u[r], mod);
    }
    const auto nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 0; t < nn; ++t) {
      const std::uint32_t* row = h.row(t).data();
      std::uint64_t acc = h(t, k + 1);
      // Lazy reduction: each product is < 2^62, so reduce before adding more.
      for (std::size_t r = k + 2; r < n; ++r) {
        if (u[r] != 0) acc = mod.reduce(acc + std::uint64_t{u[r]} * row[r]);
      }
      h(t, k + 1) = static_cast<std::uint32_t>(acc);
    }
  }

  std::vector<std::vector<std::uint32_t>> p(n + 1);
  p[0] = {1};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::uint32_t> next(j + 2, 0);
    for (std::size_t d = 0; d <= j; ++d) {
      next[d + 1] = mod.add(next[d + 1], p[j][d]);
      next[d] = mod.sub(next[d], mod.mul(h(j, j), p[j][d]));
    }
    std::uint32_t sub = 1;
    for (std::size_t i = j; i-- > 0;) {
      sub = mod.mul(sub, h(i + 1, i));
      if (sub == 0) break;
      const std::uint32_t coeff = mod.mul(h(i, j), sub);
      if (coeff == 0) continue;
      const auto len = static_cast<std::int64_t>(p[i].size());
#pragma omp parallel for schedule(static) if (len > 512)
      for (std::int64_t d = 0; d < len; ++d) next[d] = mod.sub(next[d], mod.mul(coeff, p[i][d]));
    }
    p[j + 1] = std::move(next);
  }
  return p[n];
}

mpz_class bareiss_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  DenseMatrix<mpz_class> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>(m(i, j));

  int sign = 1;
  mpz_class previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      a.swap_rows(pivot, k);
      sign = -sign;
    }
    const auto first = static_cast<std::int64_t>(k + 1), last = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = first; i < last; ++i) {
      mpz_class t;
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a(i, j) * a(k, k);
        mpz_submul(t.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace divgraph::kernels::parallel
