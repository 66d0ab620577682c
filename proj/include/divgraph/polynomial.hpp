#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace divgraph {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// constant term first. The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial monomial(std::size_t degree, const mpz_class& coefficient = 1);
  /// x - root
  static IntPolynomial linear_factor(const mpz_class& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const mpz_class& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^k (0 beyond the degree).
  mpz_class coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  mpz_class evaluate(const mpz_class& x) const;

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;

  /// Human-readable form in the variable `var`, e.g. "x^4 - 5x^2 - 4x".
  std::string to_string(const std::string& var = "x") const;
  /// Decimal coefficient strings, constant term first.
  std::vector<std::string> to_decimal_strings() const;
  static IntPolynomial from_decimal_strings(const std::vector<std::string>& coefficients);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

struct DivisionResult {
  bool divides = false;
  std::optional<IntPolynomial> quotient;
  /// Remainder of the division when carried out over the integers; empty
  /// when a leading-coefficient step was not integral.
  std::optional<IntPolynomial> remainder;
};

/// Does `divisor` divide `dividend` in Z[x]? Throws PreconditionError on a zero divisor.
DivisionResult poly_divides(const IntPolynomial& divisor, const IntPolynomial& dividend);

/// Largest k with (x - root)^k dividing f. Throws PreconditionError for f = 0.
unsigned eval_multiplicity(const IntPolynomial& f, const mpz_class& root);

}  // namespace divgraph
