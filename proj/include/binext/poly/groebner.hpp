#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "binext/error.hpp"
#include "binext/poly/ring.hpp"

namespace binext::poly {

/// Reduced Gröbner basis: monic, leading monomials pairwise non-dividing,
/// tails fully reduced, sorted by decreasing leading monomial.
template <class Field>
class GroebnerBasis {
 public:
  using Poly = Polynomial<Field>;

  GroebnerBasis(MonomialOrder order, std::vector<Poly> polys)
      : order_(std::move(order)), polys_(std::move(polys)) {}

  const MonomialOrder& order() const { return order_; }
  const std::vector<Poly>& polynomials() const { return polys_; }
  std::size_t size() const { return polys_.size(); }
  bool is_zero_ideal() const { return polys_.empty(); }
  bool is_unit() const { return polys_.size() == 1 && polys_.front().leading_monomial().is_one(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(polys_.size());
    for (const auto& p : polys_) out.push_back(p.leading_monomial());
    return out;
  }

 private:
  MonomialOrder order_;
  std::vector<Poly> polys_;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
};

namespace detail {

/// Division of `f` by `divisors` (each with a monic leading term). When `full`
/// is false only the leading term is reduced.
template <class Field>
Polynomial<Field> reduce(const PolynomialRing<Field>& ring, Polynomial<Field> f,
                         const std::vector<const Polynomial<Field>*>& divisors, bool full) {
  const auto& field = ring.field();
  Polynomial<Field> remainder;
  while (!f.is_zero()) {
    const auto& lead = f.leading();
    const Polynomial<Field>* div = nullptr;
    for (const auto* g : divisors) {
      if (g->leading_monomial().divides(lead.monomial)) {
        div = g;
        break;
      }
    }
    if (div != nullptr) {
      auto coeff = field.neg(field.div(lead.coeff, div->leading().coeff));
      auto shift = lead.monomial / div->leading_monomial();
      f = ring.combine(f, coeff, shift, *div);
    } else if (!full) {
      break;
    } else {
      remainder.terms.push_back(std::move(f.terms.front()));
      f.terms.erase(f.terms.begin());
    }
  }
  if (!full) return f;
  return remainder;
}

template <class Field>
Polynomial<Field> s_polynomial(const PolynomialRing<Field>& ring, const Polynomial<Field>& f,
                               const Polynomial<Field>& g) {
  const auto& field = ring.field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  auto left = ring.mul_term(f, l / f.leading_monomial(), field.inv(f.leading().coeff));
  return ring.combine(left, field.neg(field.inv(g.leading().coeff)), l / g.leading_monomial(), g);
}

}  // namespace detail

/// Buchberger's algorithm with the Gebauer–Möller installation of the
/// product and chain criteria; pairs are selected by least sugar degree, ties
/// by the smaller lcm. Returns the reduced basis, which is unique for the
/// ideal and order and hence independent of generator order.
template <class Field>
GroebnerBasis<Field> buchberger(const PolynomialRing<Field>& ring,
                                std::vector<Polynomial<Field>> generators,
                                BuchbergerStats* stats = nullptr) {
  using Poly = Polynomial<Field>;
  const auto& order = ring.order();
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint32_t sugar;
  };

  std::vector<Poly> polys;
  std::vector<std::uint32_t> sugar;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto unit_basis = [&]() {
    std::vector<Poly> one{ring.constant(ring.field().one())};
    return GroebnerBasis<Field>(order, std::move(one));
  };

  auto install = [&](Poly h, std::uint32_t h_sugar) {
    const std::size_t hi = polys.size();
    const Monomial& lh = h.leading_monomial();
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < polys.size(); ++g) {
      if (!active[g]) continue;
      const Monomial& lg = polys[g].leading_monomial();
      Monomial l = lcm(lg, lh);
      std::uint32_t s = std::max(sugar[g] + l.degree() - lg.degree(), h_sugar + l.degree() - lh.degree());
      candidates.push_back({g, hi, std::move(l), s});
    }
    st.pairs_created += candidates.size();

    // Chain criterion among the new pairs (includes the equal-lcm case).
    std::vector<Pair> kept;
    std::vector<bool> coprime_flags;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool coprime = polys[p.i].leading_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t o = c + 1; o < candidates.size() && !dominated; ++o) {
          dominated = candidates[o].lcm.divides(p.lcm);
        }
        for (std::size_t o = 0; o < kept.size() && !dominated; ++o) {
          dominated = kept[o].lcm.divides(p.lcm);
        }
      }
      if (dominated) {
        ++st.chain_criterion;
      } else {
        kept.push_back(p);
        coprime_flags.push_back(coprime);
      }
    }

    // Old pairs made redundant by h.
    std::vector<Pair> remaining;
    remaining.reserve(pairs.size());
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) &&
                  lcm(polys[p.i].leading_monomial(), lh) != p.lcm &&
                  lcm(polys[p.j].leading_monomial(), lh) != p.lcm;
      if (drop) {
        ++st.chain_criterion;
      } else {
        remaining.push_back(std::move(p));
      }
    }
    pairs = std::move(remaining);
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (coprime_flags[k]) {
        ++st.product_criterion;
      } else {
        pairs.push_back(std::move(kept[k]));
      }
    }

    for (std::size_t g = 0; g < polys.size(); ++g) {
      if (active[g] && lh.divides(polys[g].leading_monomial())) active[g] = false;
    }
    polys.push_back(std::move(h));
    sugar.push_back(h_sugar);
    active.push_back(true);
  };

  auto active_divisors = [&]() {
    std::vector<const Poly*> out;
    for (std::size_t g = 0; g < polys.size(); ++g) {
      if (active[g]) out.push_back(&polys[g]);
    }
    return out;
  };

  std::erase_if(generators, [](const Poly& p) { return p.is_zero(); });
  std::sort(generators.begin(), generators.end(), [&](const Poly& a, const Poly& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (auto& g : generators) {
    std::uint32_t s = ring.degree(g);
    Poly h = detail::reduce(ring, std::move(g), active_divisors(), false);
    if (h.is_zero()) continue;
    if (h.leading_monomial().is_one()) return unit_basis();
    install(ring.make_monic(h), s);
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    Pair p = std::move(*best);
    *best = std::move(pairs.back());
    pairs.pop_back();
    ++st.pairs_reduced;

    Poly s = detail::s_polynomial(ring, polys[p.i], polys[p.j]);
    Poly h = detail::reduce(ring, std::move(s), active_divisors(), false);
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    if (h.leading_monomial().is_one()) return unit_basis();
    install(ring.make_monic(h), p.sugar);
  }

  // Inter-reduction to the reduced basis.
  std::vector<Poly> basis;
  for (std::size_t g = 0; g < polys.size(); ++g) {
    if (active[g]) basis.push_back(polys[g]);
  }
  std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
    return order.greater(a.leading_monomial(), b.leading_monomial());
  });
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<const Poly*> others;
    for (std::size_t o = 0; o < basis.size(); ++o) {
      if (o != k) others.push_back(&basis[o]);
    }
    Poly tail = basis[k];
    Term<Field> lead = tail.terms.front();
    tail.terms.erase(tail.terms.begin());
    tail = detail::reduce(ring, std::move(tail), others, true);
    tail.terms.insert(tail.terms.begin(), std::move(lead));
    basis[k] = ring.make_monic(tail);
  }
  return GroebnerBasis<Field>(order, std::move(basis));
}

template <class Field>
GroebnerBasis<Field> buchberger(const PolynomialRing<Field>& ring,
                                const std::vector<IntegerPolynomial>& generators,
                                BuchbergerStats* stats = nullptr) {
  std::vector<Polynomial<Field>> polys;
  polys.reserve(generators.size());
  for (const auto& g : generators) polys.push_back(ring.from_integer(g));
  return buchberger(ring, std::move(polys), stats);
}

template <class Field>
Polynomial<Field> normal_form(const PolynomialRing<Field>& ring, const Polynomial<Field>& f,
                              const GroebnerBasis<Field>& gb) {
  if (!(gb.order() == ring.order())) {
    throw Error(ErrorCode::OrderMismatch, "normal form requested in a ring whose order differs "
                                          "from the Gröbner basis order");
  }
  std::vector<const Polynomial<Field>*> divisors;
  for (const auto& g : gb.polynomials()) divisors.push_back(&g);
  return detail::reduce(ring, f, divisors, true);
}

template <class Field>
bool ideal_membership(const PolynomialRing<Field>& ring, const Polynomial<Field>& f,
                      const GroebnerBasis<Field>& gb) {
  return normal_form(ring, f, gb).is_zero();
}

/// Exact equality of two reduced bases (same order assumed).
template <class Field>
bool same_basis(const PolynomialRing<Field>& ring, const GroebnerBasis<Field>& a,
                const GroebnerBasis<Field>& b) {
  if (!(a.order() == b.order()) || a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!ring.equal(a.polynomials()[k], b.polynomials()[k])) return false;
  }
  return true;
}

/// I ∩ J by eliminating an auxiliary variable t from t·I + (1 − t)·J.
/// Returns the reduced Gröbner basis of the intersection in `ring`'s order.
template <class Field>
GroebnerBasis<Field> ideal_intersection(const PolynomialRing<Field>& ring,
                                        const std::vector<Polynomial<Field>>& first,
                                        const std::vector<Polynomial<Field>>& second,
                                        BuchbergerStats* stats = nullptr) {
  using Poly = Polynomial<Field>;
  const std::size_t n = ring.num_variables();
  std::vector<std::string> names = ring.names();
  names.push_back("_t");
  PolynomialRing<Field> big(ring.field(), names, MonomialOrder::elimination(n + 1, {n}));

  auto lift = [&](const Poly& p, unsigned t_power) {
    Poly out;
    for (const auto& term : p.terms) {
      auto exps = term.monomial.exponents();
      exps.push_back(static_cast<Monomial::Exponent>(t_power));
      out.terms.push_back({Monomial(std::move(exps)), term.coeff});
    }
    big.sort_terms(out);
    return out;
  };

  std::vector<Poly> gens;
  for (const auto& f : first) gens.push_back(lift(f, 1));
  for (const auto& g : second) gens.push_back(big.sub(lift(g, 0), lift(g, 1)));

  auto gb = buchberger(big, std::move(gens), stats);
  std::vector<Poly> projected;
  for (const auto& p : gb.polynomials()) {
    bool has_t = std::any_of(p.terms.begin(), p.terms.end(),
                             [&](const Term<Field>& t) { return t.monomial[n] != 0; });
    if (has_t) continue;
    Poly q;
    for (const auto& t : p.terms) {
      auto exps = t.monomial.exponents();
      exps.pop_back();
      q.terms.push_back({Monomial(std::move(exps)), t.coeff});
    }
    ring.sort_terms(q);
    projected.push_back(std::move(q));
  }
  return buchberger(ring, std::move(projected), stats);
}

template <class Field>
GroebnerBasis<Field> ideal_intersection(const PolynomialRing<Field>& ring,
                                        const std::vector<std::vector<Polynomial<Field>>>& ideals,
                                        BuchbergerStats* stats = nullptr) {
  if (ideals.empty()) return buchberger(ring, std::vector<Polynomial<Field>>{ring.constant(ring.field().one())});
  GroebnerBasis<Field> acc = buchberger(ring, ideals.front(), stats);
  for (std::size_t k = 1; k < ideals.size(); ++k) {
    acc = ideal_intersection(ring, acc.polynomials(), ideals[k], stats);
  }
  return acc;
}

}  // namespace binext::poly
