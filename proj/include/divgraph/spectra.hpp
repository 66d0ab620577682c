#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divgraph/arith.hpp"
#include "divgraph/exactla.hpp"
#include "divgraph/graph.hpp"
#include "divgraph/polynomial.hpp"

namespace divgraph::spectra {

/// Adjacency of build(t) as an integer matrix.
IntMatrix adjacency_matrix(const arith::FactorizationType& t);

/// det(xI - A) of D(t).
IntPolynomial charpoly_of_type(const arith::FactorizationType& t, const exactla::Limits& limits = {});

struct DivisibilityReport {
  arith::FactorizationType base;
  arith::FactorizationType extended;  // base with two extra parts equal to 1
  bool squared = false;               // divisor is f(base)^2
  IntPolynomial f_base;
  IntPolynomial f_extended;
  bool divides = false;
  std::optional<IntPolynomial> quotient;
  /// Same check through concrete integers n and n p q; absent when skipped.
  std::optional<bool> integer_spot_check;

  bool ok() const { return divides && integer_spot_check.value_or(true); }
};

/// f(t) | f(t + (1,1)). Throws GuardError if the extended graph exceeds the charpoly limit.
DivisibilityReport verify_f_divides(const arith::FactorizationType& t, const exactla::Limits& limits = {});

/// f(t)^2 | f(t + (1,1)). Throws PreconditionError unless t has a part equal to 1.
DivisibilityReport verify_f_squared_divides(const arith::FactorizationType& t,
                                            const exactla::Limits& limits = {});

/// Explicit eigenvector stored in a documented local vertex order.
struct KernelWitness {
  long eigenvalue = 0;
  arith::FactorizationType type;
  std::vector<mpz_class> vector;          // in local order
  std::vector<std::size_t> to_canonical;  // local index -> canonical index
  std::vector<std::string> local_labels;  // human-readable local vertex names
  bool verified = false;                  // A x = eigenvalue x exactly, x != 0

  std::vector<mpz_class> canonical_vector() const;
};

/// Permutes the witness into canonical order and checks A x = lambda x exactly.
bool verify_witness(const KernelWitness& w);

/// v_d = 0 for d in {1, n}, mu(d) otherwise, over the divisors of n ascending.
/// Requires n squarefree, mu(n) = -1 and Omega(n) >= 2.
KernelWitness mobius_eigenvector(std::uint64_t n);

/// +1 at the bottom vertex, -1 at the top. Requires at least one part.
KernelWitness minus_one_eigenvector(const arith::FactorizationType& t);

struct SpectrumOptions {
  exactla::NullityOptions nullity;
  exactla::Limits limits;
  std::size_t max_vertices = 8192;
  /// The determinant is computed only up to this many vertices.
  std::size_t determinant_max_vertices = 256;
};

struct ConsistencyCheck {
  std::string name;
  bool holds = false;
};

struct SpectrumReport {
  arith::FactorizationType type;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::optional<mpz_class> determinant;
  std::map<long, exactla::NullityCertificate> multiplicities;
  std::vector<ConsistencyCheck> consistency;

  std::size_t multiplicity(long lambda) const { return multiplicities.at(lambda).nullity; }
  bool consistent() const;
};

/// Certified m_lambda = dim ker(A - lambda I) for each requested lambda, plus
/// the lower bounds that follow from the Mobius value and Omega.
SpectrumReport special_multiplicities(const arith::FactorizationType& t, const std::vector<long>& lambdas,
                                      const SpectrumOptions& options = {});

struct TableCell {
  unsigned omega = 0;
  long lambda = 0;
  std::size_t multiplicity = 0;
  exactla::NullityCertificate certificate;
};

/// Multiplicities over squarefree types for the requested (omega, lambda)
/// cells; cells run in parallel and come back in input order.
std::vector<TableCell> multiplicity_table(const std::vector<std::pair<unsigned, long>>& cells,
                                          const SpectrumOptions& options = {});

/// Every omega in [omega_min, omega_max] for each lambda.
std::vector<TableCell> multiplicity_table(const std::vector<long>& lambdas, unsigned omega_min, unsigned omega_max,
                                          const SpectrumOptions& options = {});

struct PatternObservation {
  std::string name;
  std::vector<unsigned> omegas;  // indices actually checked
  bool holds = true;
  std::optional<unsigned> first_mismatch;  // omega where the pattern first fails
};

struct OeisReport {
  std::vector<PatternObservation> observations;
  bool all_hold() const;
};

/// Recurrence x_{k+1} = 4 x_k + 2 for m_{-2} at odd omega, Catalan numbers for
/// m_1 at odd and m_0 at even omega, and the Mobius sign patterns. These are
/// observations over the computed range.
OeisReport oeis_pattern_checks(const std::vector<TableCell>& table);

mpz_class catalan(unsigned k);

struct VmSpace {
  unsigned m = 0;
  std::size_t dimension = 0;
  /// Functions on {0,1}^{2m}; point index has bit i set when coordinate i is 1.
  std::vector<std::vector<mpz_class>> basis;
  /// Every basis function is annihilated by the adjacency of type 1^{2m}.
  bool in_nullspace = false;
  std::size_t nullspace_dimension = 0;
};

/// Functions whose strictly-below and strictly-above sums vanish everywhere.
VmSpace vm_space(unsigned m, const exactla::NullityOptions& options = {});

/// Does f satisfy the V_m constraints on {0,1}^{2m}?
bool satisfies_vm_constraints(unsigned m, const std::vector<mpz_class>& f);

struct TensorInclusionReport {
  unsigned m1 = 0;
  unsigned m2 = 0;
  std::size_t pairs_checked = 0;
  bool all_included = false;
  std::size_t tensor_rank = 0;         // rank of the products of basis pairs
  std::optional<std::size_t> target_dimension;  // dim V_{m1+m2}, when m1 + m2 <= 4

  bool ok() const { return all_included && (!target_dimension || tensor_rank <= *target_dimension); }
};

TensorInclusionReport vm_tensor_inclusion(unsigned m1, unsigned m2, const exactla::NullityOptions& options = {});

/// Adjacency of D_{p q^a} in the order 1, q, ..., q^a, p, pq, ..., p q^a.
IntMatrix pq_power_matrix(unsigned a);
/// Literal M_5 and its inverse as published, for comparison with pq_power_matrix(5).
IntMatrix reference_m5();
IntMatrix reference_m5_inverse();

struct DetSequenceReport {
  std::vector<mpz_class> determinants;  // a = 0..a_max
  bool base_matches = false;            // starts -1, 0, 3, 5, 4, 1
  bool periodic = false;                // det(M_a) = det(M_{a+6}) throughout
  bool m5_reproduced = false;           // pq_power_matrix(5) equals the displayed matrix
  bool m5_inverse_checked = false;      // M5 times the displayed inverse is I

  bool ok() const { return base_matches && periodic && m5_reproduced && m5_inverse_checked; }
};

DetSequenceReport det_sequence_pq_power(unsigned a_max);

struct ZeroCriterion {
  unsigned a = 0;
  bool has_zero = false;   // m_0 of type (1, a) is positive
  bool predicted = false;  // a = 1 mod 6
  exactla::NullityCertificate certificate;

  bool ok() const { return has_zero == predicted; }
};

ZeroCriterion zero_iff_mod6(unsigned a, const exactla::NullityOptions& options = {});

/// Column block named A, A', B, B', C or C' of length v + 1 (v = 1 mod 6).
std::vector<long> pq_block(const std::string& name, unsigned v);

/// The kernel vector X of D_{p^u q^v} for u = v = 1 mod 6, in the order
/// 1, q, ..., q^v, p, pq, ..., p^u q^v.
KernelWitness kernel_vector_two_prime_powers(unsigned u, unsigned v);

struct BlockIdentity {
  std::string name;
  bool holds = false;
};

struct SixCaseReport {
  unsigned v = 0;
  std::vector<BlockIdentity> identities;
  long s = 0;  // common value of V B + U B'

  bool ok() const;
};

SixCaseReport six_case_identities(unsigned v);

}  // namespace divgraph::spectra
