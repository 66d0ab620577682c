#include "divgraph/polynomial.hpp"

#include "divgraph/error.hpp"

namespace divgraph {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const mpz_class& coefficient) {
  std::vector<mpz_class> c(degree + 1);
  c[degree] = coefficient;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::linear_factor(const mpz_class& root) {
  return IntPolynomial(std::vector<mpz_class>{-root, 1});
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<mpz_class> c(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) + other.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  std::vector<mpz_class> c(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) - other.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<mpz_class> c(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || k == 0) out += magnitude.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::vector<std::string> IntPolynomial::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

IntPolynomial IntPolynomial::from_decimal_strings(const std::vector<std::string>& coefficients) {
  std::vector<mpz_class> c;
  c.reserve(coefficients.size());
  for (const auto& s : coefficients) {
    mpz_class v;
    require(v.set_str(s, 10) == 0, "invalid decimal coefficient '" + s + "'");
    c.push_back(v);
  }
  return IntPolynomial(std::move(c));
}

DivisionResult poly_divides(const IntPolynomial& divisor, const IntPolynomial& dividend) {
  require(!divisor.is_zero(), "poly_divides: division by the zero polynomial");
  DivisionResult result;
  if (dividend.degree() < divisor.degree()) {
    result.divides = dividend.is_zero();
    result.quotient = IntPolynomial{};
    result.remainder = dividend;
    if (!result.divides) result.quotient.reset();
    return result;
  }
  std::vector<mpz_class> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dd = d.size() - 1;
  std::vector<mpz_class> quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), d.back().get_mpz_t())) return result;  // not integral
    mpz_class q = rem[k] / d.back();
    quot[k - dd] = q;
    for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= q * d[i];
  }
  IntPolynomial remainder(std::move(rem));
  result.divides = remainder.is_zero();
  result.remainder = remainder;
  if (result.divides) result.quotient = IntPolynomial(std::move(quot));
  return result;
}

unsigned eval_multiplicity(const IntPolynomial& f, const mpz_class& root) {
  require(!f.is_zero(), "eval_multiplicity: zero polynomial");
  std::vector<mpz_class> c = f.coefficients();
  unsigned k = 0;
  while (c.size() > 1) {
    // Synthetic division by (x - root); the final carry is f(root).
    std::vector<mpz_class> q(c.size() - 1);
    mpz_class carry = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      carry = carry * root + c[i];
      if (i > 0) q[i - 1] = carry;
    }
    if (carry != 0) break;
    c = std::move(q);
    ++k;
  }
  return k;
}

}  // namespace divgraph
