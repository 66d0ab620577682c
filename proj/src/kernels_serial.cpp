#include "divgraph/kernels.hpp"

namespace divgraph::kernels::serial {

ModEchelon rref_mod(const IntMatrix& m, const Modulus& mod) {
  const std::size_t rows = m.rows(), cols = m.cols();
  DenseMatrix<std::uint32_t> a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = mod.from_signed(m(i, j));

  ModEchelon out;
  out.prime = mod.prime();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    a.swap_rows(pivot, r);
    const std::uint32_t inv = mod.inv(a(r, c));
    for (std::size_t j = c; j < cols; ++j) a(r, j) = mod.mul(a(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const std::uint32_t f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) = mod.sub(a(i, j), mod.mul(f, a(r, j)));
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
  DenseMatrix<std::uint32_t> h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = mod.from_signed(m(i, j));

  // Similarity transforms, one eliminated entry at a time.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t pivot = k + 1;
    while (pivot < n && h(pivot, k) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != k + 1) {
      h.swap_rows(pivot, k + 1);
      for (std::size_t t = 0; t < n; ++t) std::swap(h(t, pivot), h(t, k + 1));
    }
    const std::uint32_t inv = mod.inv(h(k + 1, k));
    for (std::size_t r = k + 2; r < n; ++r) {
      if (h(r, k) == 0) continue;
      const std::uint32_t u = mod.mul(h(r, k), inv);
      for (std::size_t j = k; j < n; ++j) h(r, j) = mod.sub(h(r, j), mod.mul(u, h(k + 1, j)));
      for (std::size_t t = 0; t < n; ++t) h(t, k + 1) = mod.add(h(t, k + 1), mod.mul(u, h(t, r)));
    }
  }

  // p_{j+1}(x) = (x - h_jj) p_j(x) - sum_{i<j} h_ij (prod_{l=i+1..j} h_{l,l-1}) p_i(x)
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
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] = mod.sub(next[d], mod.mul(coeff, p[i][d]));
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
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace divgraph::kernels::serial
