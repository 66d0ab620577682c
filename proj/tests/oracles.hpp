#pragma once
// Independent reference computations used only by the tests. They share no
// code with the library beyond plain data types.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "divgraph/matrix.hpp"
#include "divgraph/polynomial.hpp"

namespace oracle {

using divgraph::IntMatrix;

// Adjacency on the divisors of n in ascending order, by trial division.
inline IntMatrix divisor_adjacency(std::uint64_t n, std::vector<std::uint64_t>* labels = nullptr) {
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  IntMatrix m(divs.size(), divs.size());
  for (std::size_t i = 0; i < divs.size(); ++i)
    for (std::size_t j = 0; j < divs.size(); ++j)
      if (i != j && (divs[j] % divs[i] == 0 || divs[i] % divs[j] == 0)) m(i, j) = 1;
  if (labels) *labels = divs;
  return m;
}

// Adjacency from exponent vectors enumerated by odometer, coordinate 0 fastest.
inline IntMatrix shape_adjacency(const std::vector<unsigned>& shape) {
  std::vector<std::vector<unsigned>> verts{std::vector<unsigned>(shape.size(), 0)};
  while (true) {
    auto next = verts.back();
    std::size_t i = 0;
    for (; i < shape.size(); ++i) {
      if (next[i] < shape[i]) {
        ++next[i];
        break;
      }
      next[i] = 0;
    }
    if (i == shape.size()) break;
    verts.push_back(next);
  }
  IntMatrix m(verts.size(), verts.size());
  for (std::size_t x = 0; x < verts.size(); ++x)
    for (std::size_t y = 0; y < verts.size(); ++y) {
      bool le = true, ge = true;
      for (std::size_t k = 0; k < shape.size(); ++k) {
        le = le && verts[x][k] <= verts[y][k];
        ge = ge && verts[x][k] >= verts[y][k];
      }
      if (x != y && (le || ge)) m(x, y) = 1;
    }
  return m;
}

// Faddeev-LeVerrier over the rationals: det(xI - M), constant term first.
inline divgraph::IntPolynomial charpoly(const IntMatrix& a) {
  const std::size_t n = a.rows();
  using Q = mpq_class;
  std::vector<Q> c(n + 1);
  c[n] = 1;
  std::vector<Q> m(n * n, 0), am(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Q s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a(i, l) * m[l * n + j];
        am[i * n + j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) am[i * n + i] += c[n - k + 1];
    m = am;
    Q trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a(i, l) * m[l * n + i];
    c[n - k] = -trace / k;
  }
  std::vector<mpz_class> z;
  for (const auto& q : c) z.push_back(q.get_num());
  return divgraph::IntPolynomial(z);
}

// Rank over the rationals by plain Gaussian elimination.
inline std::size_t rank(const IntMatrix& a) {
  std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < a.cols(); ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t nullity(const IntMatrix& a) { return a.cols() - rank(a); }

// Random shape with at most `max_vertices` vertices, parts in any order.
inline std::vector<unsigned> random_shape(std::mt19937_64& rng, std::uint64_t max_vertices) {
  std::vector<unsigned> shape;
  std::uint64_t v = 1;
  std::uniform_int_distribution<unsigned> part(1, 6);
  std::uniform_int_distribution<int> length(0, 5);
  const int len = length(rng);
  for (int i = 0; i < len; ++i) {
    const unsigned a = part(rng);
    if (v * (a + 1) > max_vertices) break;
    v *= a + 1;
    shape.push_back(a);
  }
  return shape;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
  return m;
}

}  // namespace oracle
