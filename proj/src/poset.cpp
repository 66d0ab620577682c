#include "divgraph/poset.hpp"

#include <algorithm>
#include <numeric>

#include "divgraph/error.hpp"
#include "divgraph/exactla.hpp"

namespace divgraph::poset {

FinitePoset::FinitePoset(BitMatrix less) : less_(std::move(less)) {
  const std::size_t n = less_.size();
  for (std::size_t i = 0; i < n; ++i) {
    require(!less_.test(i, i), "poset relation is not irreflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (!less_.test(i, j)) continue;
      require(!less_.test(j, i), "poset relation is not antisymmetric");
      for (std::size_t k = 0; k < n; ++k)
        require(!less_.test(j, k) || less_.test(i, k), "poset relation is not transitive");
    }
  }
}

FinitePoset chain(std::size_t k) {
  BitMatrix m(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) m.set(i, j);
  return FinitePoset(std::move(m));
}

FinitePoset antichain(std::size_t k) { return FinitePoset(BitMatrix(k)); }

FinitePoset s0() { return product(chain(2), chain(2)); }

FinitePoset divisor_poset(std::span<const unsigned> shape) {
  const auto g = graph::DivGraph::build(shape);
  const auto verts = g.vertices();
  BitMatrix m(g.order());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (i != j && graph::dominated(verts[i], verts[j])) m.set(i, j);
  return FinitePoset(std::move(m));
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t a = p.size(), b = q.size();
  BitMatrix m(a * b);
  for (std::size_t j1 = 0; j1 < b; ++j1)
    for (std::size_t i1 = 0; i1 < a; ++i1)
      for (std::size_t j2 = 0; j2 < b; ++j2)
        for (std::size_t i2 = 0; i2 < a; ++i2) {
          const bool le_p = i1 == i2 || p.less(i1, i2);
          const bool le_q = j1 == j2 || q.less(j1, j2);
          if (le_p && le_q && (i1 != i2 || j1 != j2)) m.set(i1 + a * j1, i2 + a * j2);
        }
  return FinitePoset(std::move(m));
}

FinitePoset cube_extension(const FinitePoset& p, unsigned k) {
  FinitePoset out = p;
  for (unsigned i = 0; i < k; ++i) out = product(out, chain(2));
  return out;
}

FinitePoset random_poset(std::size_t size, double density, std::mt19937_64& rng) {
  std::vector<std::size_t> position(size);
  std::iota(position.begin(), position.end(), 0);
  std::shuffle(position.begin(), position.end(), rng);
  std::bernoulli_distribution coin(density);
  BitMatrix m(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (position[i] < position[j] && coin(rng)) m.set(i, j);
  // Warshall closure; edges only go forward in the extension so it stays acyclic.
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (m.test(i, k))
        for (std::size_t j = 0; j < size; ++j)
          if (m.test(k, j)) m.set(i, j);
  return FinitePoset(std::move(m));
}

BitMatrix comparability_graph(const FinitePoset& p) {
  BitMatrix m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.comparable(i, j)) m.set(i, j);
  return m;
}

bool order_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return false;
  if (p.relation().total_count() != q.relation().total_count()) return false;
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (std::size_t i = 0; i < p.size() && same; ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (p.less(i, j) != q.less(perm[i], perm[j])) {
          same = false;
          break;
        }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

VertexFunction h_vector() { return {0, -1, 1, 0}; }

VertexFunction tensor_lift(const VertexFunction& g, const VertexFunction& h) {
  require(!g.empty() && !h.empty(), "tensor_lift: empty function");
  VertexFunction f(g.size() * h.size());
  for (std::size_t j = 0; j < h.size(); ++j)
    for (std::size_t i = 0; i < g.size(); ++i) f[i + g.size() * j] = g[i] * h[j];
  return f;
}

IntPolynomial comparability_charpoly(const FinitePoset& p) {
  return exactla::charpoly(to_int_matrix(comparability_graph(p)));
}

bool PosetLiftReport::ok() const {
  return divides && std::all_of(eigen_checks.begin(), eigen_checks.end(), [](const auto& c) { return c.ok(); });
}

PosetLiftReport verify_poset_lift(const FinitePoset& p, std::size_t max_size) {
  require(p.size() <= max_size, "verify_poset_lift: poset too large");
  const FinitePoset lifted = product(p, s0());
  const IntMatrix base = to_int_matrix(comparability_graph(p));
  const IntMatrix big = to_int_matrix(comparability_graph(lifted));

  PosetLiftReport r;
  r.f_base = exactla::charpoly(base);
  r.f_lifted = exactla::charpoly(big);
  auto division = poly_divides(r.f_base, r.f_lifted);
  r.divides = division.divides;
  r.quotient = division.quotient;

  // Integer eigenvalues of an adjacency matrix lie in [-(n-1), n-1].
  const long n = static_cast<long>(p.size());
  const VertexFunction h = h_vector();
  for (long lambda = -std::max(n - 1, 0L); lambda <= std::max(n - 1, 0L); ++lambda) {
    if (eval_multiplicity(r.f_base, lambda) == 0) continue;
    EigenLiftCheck check;
    check.eigenvalue = lambda;
    const auto kernel = exactla::exact_kernel(shifted(base, lambda));
    check.multiplicity = kernel.size();
    check.all_lifts_are_eigenvectors = true;
    std::vector<VertexFunction> lifts;
    for (const auto& g : kernel) {
      VertexFunction gq(g.begin(), g.end());
      lifts.push_back(tensor_lift(gq, h));
      if (!exactla::is_eigenvector(big, lifts.back(), mpq_class(lambda))) check.all_lifts_are_eigenvectors = false;
    }
    check.lifted_rank = exactla::rank_of(lifts);
    r.eigen_checks.push_back(check);
  }
  return r;
}

SquaredLiftReport verify_poset_lift_squared(const FinitePoset& p, std::size_t max_size) {
  require(p.size() <= max_size, "verify_poset_lift_squared: poset too large");
  SquaredLiftReport r;
  const IntPolynomial f_p = comparability_charpoly(p);
  r.base_divides = poly_divides(f_p, comparability_charpoly(product(p, s0()))).divides;

  const FinitePoset prime = cube_extension(p, 1);
  const IntPolynomial f_prime = comparability_charpoly(prime);
  auto division = poly_divides(f_prime * f_prime, comparability_charpoly(product(prime, s0())));
  r.squared_divides = division.divides;
  r.squared_quotient = division.quotient;
  return r;
}

}  // namespace divgraph::poset
