#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binext/poly/monomial.hpp"

namespace binext::poly {

struct IntegerTerm {
  Monomial monomial;
  std::int64_t coeff = 0;

  friend bool operator==(const IntegerTerm&, const IntegerTerm&) = default;
};

/// Polynomial with integer coefficients, independent of field and term order.
/// Terms are kept combined, nonzero, and sorted by decreasing exponent vector.
/// Used to present generators before they are mapped into a concrete ring.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<IntegerTerm> terms);

  static IntegerPolynomial monomial(const Monomial& m, std::int64_t coeff = 1);
  /// a - b
  static IntegerPolynomial binomial(const Monomial& a, const Monomial& b);
  /// Sum of the listed variables.
  static IntegerPolynomial linear_form(std::size_t num_variables,
                                       const std::vector<std::size_t>& variables);

  const std::vector<IntegerTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::uint32_t degree() const;
  bool is_homogeneous() const;
  std::size_t num_variables() const { return terms_.empty() ? 0 : terms_.front().monomial.size(); }

  IntegerPolynomial operator*(const Monomial& m) const;
  friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void normalize();
  std::vector<IntegerTerm> terms_;
};

/// A generating set over named variables.
struct IdealPresentation {
  std::vector<std::string> variables;
  std::vector<IntegerPolynomial> generators;

  std::vector<std::string> generator_strings() const;
};

}  // namespace binext::poly
