#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "binext/poly/field.hpp"
#include "binext/poly/integer_polynomial.hpp"
#include "binext/poly/monomial.hpp"
#include "binext/poly/order.hpp"

namespace binext::poly {

template <class Field>
struct Term {
  Monomial monomial;
  typename Field::Element coeff;
};

/// Terms sorted by decreasing monomial under the owning ring's order; no
/// zero coefficients, no repeated monomials. The zero polynomial has no terms.
template <class Field>
struct Polynomial {
  std::vector<Term<Field>> terms;

  bool is_zero() const { return terms.empty(); }
  const Term<Field>& leading() const { return terms.front(); }
  const Monomial& leading_monomial() const { return terms.front().monomial; }
  std::size_t size() const { return terms.size(); }
};

/// K[x_1..x_n] with a fixed field and term order. Polynomials are plain values;
/// all arithmetic goes through the ring so that term order stays consistent.
template <class Field>
class PolynomialRing {
 public:
  using Element = typename Field::Element;
  using Poly = Polynomial<Field>;

  PolynomialRing(Field field, std::vector<std::string> names, MonomialOrder order)
      : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)) {}

  PolynomialRing(Field field, std::vector<std::string> names)
      : PolynomialRing(std::move(field), names, MonomialOrder(OrderKind::DegRevLex, names.size())) {}

  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t num_variables() const { return names_.size(); }

  /// Same field and names, different order.
  PolynomialRing with_order(MonomialOrder order) const { return PolynomialRing(field_, names_, std::move(order)); }

  Monomial one_monomial() const { return Monomial(num_variables()); }

  Poly zero() const { return {}; }
  Poly constant(const Element& c) const {
    Poly p;
    if (!field_.is_zero(c)) p.terms.push_back({one_monomial(), c});
    return p;
  }
  Poly variable(std::size_t i) const {
    Poly p;
    p.terms.push_back({Monomial::variable(num_variables(), i), field_.one()});
    return p;
  }
  Poly monomial(const Monomial& m, const Element& c) const {
    Poly p;
    if (!field_.is_zero(c)) p.terms.push_back({m, c});
    return p;
  }

  Poly from_integer(const IntegerPolynomial& f) const {
    Poly p;
    for (const auto& t : f.terms()) {
      Element c = field_.from_int(t.coeff);
      if (!field_.is_zero(c)) p.terms.push_back({t.monomial, c});
    }
    sort_terms(p);
    return p;
  }

  /// Restores the polynomial invariant after arbitrary term edits.
  void sort_terms(Poly& p) const {
    std::sort(p.terms.begin(), p.terms.end(), [this](const Term<Field>& a, const Term<Field>& b) {
      return order_.greater(a.monomial, b.monomial);
    });
    std::vector<Term<Field>> merged;
    for (auto& t : p.terms) {
      if (!merged.empty() && merged.back().monomial == t.monomial) {
        merged.back().coeff = field_.add(merged.back().coeff, t.coeff);
      } else {
        merged.push_back(std::move(t));
      }
    }
    std::erase_if(merged, [this](const Term<Field>& t) { return field_.is_zero(t.coeff); });
    p.terms = std::move(merged);
  }

  Poly add(const Poly& a, const Poly& b) const { return combine(a, field_.one(), Monomial(), b, false); }
  Poly sub(const Poly& a, const Poly& b) const {
    return combine(a, field_.neg(field_.one()), Monomial(), b, false);
  }
  Poly neg(const Poly& a) const { return scale(a, field_.neg(field_.one())); }

  Poly scale(const Poly& a, const Element& c) const {
    if (field_.is_zero(c)) return {};
    Poly r = a;
    for (auto& t : r.terms) t.coeff = field_.mul(t.coeff, c);
    return r;
  }

  Poly mul_term(const Poly& a, const Monomial& m, const Element& c) const {
    if (field_.is_zero(c)) return {};
    Poly r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({t.monomial * m, field_.mul(t.coeff, c)});
    return r;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    Poly acc;
    for (const auto& t : b.terms) acc = add(acc, mul_term(a, t.monomial, t.coeff));
    return acc;
  }

  /// a + c * m * b, merged in one pass (m empty means 1).
  Poly combine(const Poly& a, const Element& c, const Monomial& m, const Poly& b,
               bool use_monomial = true) const {
    Poly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0;
    std::size_t j = 0;
    auto shifted = [&](std::size_t k) { return use_monomial ? b.terms[k].monomial * m : b.terms[k].monomial; };
    Monomial bj;
    if (j < b.terms.size()) bj = shifted(j);
    while (i < a.terms.size() || j < b.terms.size()) {
      int cmp;
      if (i == a.terms.size()) {
        cmp = -1;
      } else if (j == b.terms.size()) {
        cmp = 1;
      } else {
        cmp = order_.compare(a.terms[i].monomial, bj);
      }
      if (cmp > 0) {
        r.terms.push_back(a.terms[i++]);
      } else if (cmp < 0) {
        r.terms.push_back({std::move(bj), field_.mul(c, b.terms[j].coeff)});
        if (++j < b.terms.size()) bj = shifted(j);
      } else {
        Element s = field_.add(a.terms[i].coeff, field_.mul(c, b.terms[j].coeff));
        if (!field_.is_zero(s)) r.terms.push_back({a.terms[i].monomial, std::move(s)});
        ++i;
        if (++j < b.terms.size()) bj = shifted(j);
      }
    }
    return r;
  }

  Poly make_monic(const Poly& a) const {
    if (a.is_zero() || field_.is_one(a.leading().coeff)) return a;
    return scale(a, field_.inv(a.leading().coeff));
  }

  bool equal(const Poly& a, const Poly& b) const {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
      if (a.terms[i].monomial != b.terms[i].monomial ||
          !field_.equal(a.terms[i].coeff, b.terms[i].coeff)) {
        return false;
      }
    }
    return true;
  }

  std::uint32_t degree(const Poly& a) const {
    std::uint32_t d = 0;
    for (const auto& t : a.terms) d = std::max(d, t.monomial.degree());
    return d;
  }

  std::string to_string(const Poly& p) const {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms) {
      std::string c = field_.to_string(t.coeff);
      bool negative = !c.empty() && c.front() == '-';
      if (negative) c.erase(c.begin());
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      if (t.monomial.is_one()) {
        out += c;
      } else {
        if (c != "1") out += c + "*";
        out += t.monomial.to_string(names_);
      }
    }
    return out;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

}  // namespace binext::poly
