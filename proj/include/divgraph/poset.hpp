#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "divgraph/bitmatrix.hpp"
#include "divgraph/graph.hpp"
#include "divgraph/polynomial.hpp"

namespace divgraph::poset {

/// Finite poset on 0..m-1 stored as its strict order relation.
class FinitePoset {
 public:
  FinitePoset() = default;
  /// Validates irreflexivity, antisymmetry and transitivity; throws PreconditionError.
  explicit FinitePoset(BitMatrix less);

  std::size_t size() const { return less_.size(); }
  bool less(std::size_t i, std::size_t j) const { return less_.test(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return less(i, j) || less(j, i); }
  const BitMatrix& relation() const { return less_; }

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  BitMatrix less_;
};

FinitePoset chain(std::size_t k);
FinitePoset antichain(std::size_t k);
/// {0,1}^2 with index alpha_1 + 2 alpha_2: (0,0), (1,0), (0,1), (1,1).
FinitePoset s0();
/// Exponent vectors of the shape in canonical DivGraph order.
FinitePoset divisor_poset(std::span<const unsigned> shape);
/// Componentwise order; (i, j) sits at index i + |P| j.
FinitePoset product(const FinitePoset& p, const FinitePoset& q);
/// S x {0,1}^k by iterated products with chain(2).
FinitePoset cube_extension(const FinitePoset& p, unsigned k);
/// Random poset: transitive closure of a random DAG on a random linear extension.
FinitePoset random_poset(std::size_t size, double density, std::mt19937_64& rng);

BitMatrix comparability_graph(const FinitePoset& p);

/// Brute force over all bijections; intended for |P| <= 9.
bool order_isomorphic(const FinitePoset& p, const FinitePoset& q);

using VertexFunction = std::vector<mpq_class>;

/// h = 0 at (0,0) and (1,1), h((1,0)) = -1, h((0,1)) = 1.
VertexFunction h_vector();

/// f(s, gamma) = g(s) h(gamma) on the product, indexed like product().
VertexFunction tensor_lift(const VertexFunction& g, const VertexFunction& h);

/// Charpoly det(xI - A) of a comparability graph.
IntPolynomial comparability_charpoly(const FinitePoset& p);

struct EigenLiftCheck {
  long eigenvalue = 0;
  std::size_t multiplicity = 0;   // dimension of the exact eigenspace of D_P
  bool all_lifts_are_eigenvectors = false;
  std::size_t lifted_rank = 0;

  bool ok() const { return all_lifts_are_eigenvectors && lifted_rank == multiplicity; }
};

struct PosetLiftReport {
  IntPolynomial f_base;
  IntPolynomial f_lifted;
  bool divides = false;
  std::optional<IntPolynomial> quotient;
  std::vector<EigenLiftCheck> eigen_checks;

  bool ok() const;
};

/// Checks f_P | f_{P x S0} and lifts every integer eigenvector of D_P.
/// Throws PreconditionError when |P| exceeds max_size.
PosetLiftReport verify_poset_lift(const FinitePoset& p, std::size_t max_size = 10);

struct SquaredLiftReport {
  bool base_divides = false;       // f_P | f_{P x S0}
  bool squared_divides = false;    // f_{S'}^2 | f_{S' x S0}, S' = P x {0,1}
  std::optional<IntPolynomial> squared_quotient;

  bool ok() const { return base_divides && squared_divides; }
};

SquaredLiftReport verify_poset_lift_squared(const FinitePoset& p, std::size_t max_size = 6);

}  // namespace divgraph::poset
