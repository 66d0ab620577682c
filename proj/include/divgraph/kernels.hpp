#pragma once

// Dense exact-arithmetic kernels. Every kernel has a straightforward serial
// reference under `serial` and an OpenMP version under `parallel`; tests
// check that both agree and bench/ compares their throughput.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "divgraph/matrix.hpp"
#include "divgraph/modular.hpp"

namespace divgraph::kernels {

/// Reduced row echelon form of a (possibly rectangular) matrix modulo p.
struct ModEchelon {
  std::uint32_t prime = 0;
  /// pivots[r] is the pivot column of row r of `reduced`.
  std::vector<std::size_t> pivots;
  /// rank x cols; pivot entries are 1 and every pivot column is a unit vector.
  DenseMatrix<std::uint32_t> reduced;

  std::size_t rank() const { return pivots.size(); }
};

namespace serial {

ModEchelon rref_mod(const IntMatrix& m, const Modulus& mod);

/// Characteristic polynomial det(xI - M) mod p, constant term first (monic).
/// Reduction to upper Hessenberg form by elementary similarity transforms.
std::vector<std::uint32_t> charpoly_mod(const IntMatrix& m, const Modulus& mod);

/// Fraction-free (Bareiss) elimination; exact determinant.
mpz_class bareiss_determinant(const IntMatrix& m);

}  // namespace serial

namespace parallel {

ModEchelon rref_mod(const IntMatrix& m, const Modulus& mod);
std::vector<std::uint32_t> charpoly_mod(const IntMatrix& m, const Modulus& mod);
mpz_class bareiss_determinant(const IntMatrix& m);

}  // namespace parallel

}  // namespace divgraph::kernels
