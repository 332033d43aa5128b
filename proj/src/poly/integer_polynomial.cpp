#include "binext/poly/integer_polynomial.hpp"

#include <algorithm>

namespace binext::poly {

IntegerPolynomial::IntegerPolynomial(std::vector<IntegerTerm> terms) : terms_(std::move(terms)) {
  normalize();
}

IntegerPolynomial IntegerPolynomial::monomial(const Monomial& m, std::int64_t coeff) {
  return IntegerPolynomial({IntegerTerm{m, coeff}});
}

IntegerPolynomial IntegerPolynomial::binomial(const Monomial& a, const Monomial& b) {
  return IntegerPolynomial({IntegerTerm{a, 1}, IntegerTerm{b, -1}});
}

IntegerPolynomial IntegerPolynomial::linear_form(std::size_t num_variables,
                                                 const std::vector<std::size_t>& variables) {
  std::vector<IntegerTerm> terms;
  for (auto v : variables) terms.push_back({Monomial::variable(num_variables, v), 1});
  return IntegerPolynomial(std::move(terms));
}

void IntegerPolynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const IntegerTerm& a, const IntegerTerm& b) {
    return a.monomial.exponents() > b.monomial.exponents();
  });
  std::vector<IntegerTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const IntegerTerm& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

std::uint32_t IntegerPolynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool IntegerPolynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const IntegerTerm& t) {
    return t.monomial.degree() == terms_.front().monomial.degree();
  });
}

IntegerPolynomial IntegerPolynomial::operator*(const Monomial& m) const {
  std::vector<IntegerTerm> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.monomial * m, t.coeff});
  return IntegerPolynomial(std::move(terms));
}

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<IntegerTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return IntegerPolynomial(std::move(terms));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<IntegerTerm> terms = a.terms_;
  for (const auto& t : b.terms_) terms.push_back({t.monomial, -t.coeff});
  return IntegerPolynomial(std::move(terms));
}

std::string IntegerPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::int64_t c = t.coeff;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::int64_t mag = c < 0 ? -c : c;
    if (t.monomial.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += t.monomial.to_string(names);
    }
  }
  return out;
}

std::vector<std::string> IdealPresentation::generator_strings() const {
  std::vector<std::string> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.to_string(variables));
  return out;
}

}  // namespace binext::poly
