#include <doctest.h>

#include <algorithm>
#include <random>

#include "binext/poly/groebner.hpp"
#include "binext/poly/hilbert.hpp"
#include "binext/poly/linear_algebra.hpp"
#include "test_support.hpp"

using namespace binext;
using namespace binext::poly;
using binext::testing::parse_poly;
using binext::testing::parse_polys;

namespace {

const std::vector<std::string> kGreduitNames{"a", "b", "c", "d", "x", "y", "z"};
const std::vector<std::string> kGreduitMinors{"a*b - x^2", "a*c - x*y", "a*d - x*z",
                                              "x*c - b*y", "x*d - b*z", "y*d - z*c"};

template <class Field>
std::vector<std::string> basis_strings(const PolynomialRing<Field>& ring, const GroebnerBasis<Field>& gb) {
  std::vector<std::string> out;
  for (const auto& p : gb.polynomials()) out.push_back(ring.to_string(p));
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f;
  CHECK(f.characteristic() == 32003);
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.from_int(-1) == 32002);
  CHECK(f.to_string(32002) == "-1");
  CHECK_THROWS_AS(PrimeField(32004), Error);
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK(FieldSpec::parse("rational").is_rational());
  CHECK(*FieldSpec::parse("101").prime == 101);
  CHECK_THROWS_AS(FieldSpec::parse("100"), Error);
}

TEST_CASE("monomial orders") {
  // x > y > z
  Monomial xy2(std::vector<Monomial::Exponent>{1, 2, 0});
  Monomial x2z(std::vector<Monomial::Exponent>{2, 0, 1});
  Monomial y3(std::vector<Monomial::Exponent>{0, 3, 0});
  MonomialOrder lex(OrderKind::Lex, 3), deglex(OrderKind::DegLex, 3), grevlex(OrderKind::DegRevLex, 3);
  CHECK(lex.greater(x2z, xy2));
  CHECK(deglex.greater(x2z, xy2));
  // degrevlex: x2z has z, so it is smaller than x y^2.
  CHECK(grevlex.greater(xy2, x2z));
  CHECK(grevlex.greater(y3, x2z));
  auto elim = MonomialOrder::elimination(3, {2});
  CHECK(elim.greater(Monomial::variable(3, 2), Monomial::variable(3, 0, 5)));
}

TEST_CASE("buchberger: linear elimination in lex") {
  std::vector<std::string> names{"x", "y", "z"};
  PolynomialRing<PrimeField> ring(PrimeField{}, names, MonomialOrder(OrderKind::Lex, 3));
  auto gb = buchberger(ring, parse_polys({"x - y", "y - z"}, names));
  CHECK(basis_strings(ring, gb) == std::vector<std::string>{"x - z", "y - z"});
}

TEST_CASE("buchberger: a single binomial is its own basis") {
  std::vector<std::string> names{"x0", "y", "x1"};
  PolynomialRing<PrimeField> ring(PrimeField{}, names);
  auto gb = buchberger(ring, parse_polys({"x0*x1 - y^2"}, names));
  REQUIRE(gb.size() == 1);
  CHECK(ring.to_string(gb.polynomials()[0]) == "y^2 - x0*x1");
}

TEST_CASE("buchberger: zero ideal and unit ideal") {
  std::vector<std::string> names{"a", "b"};
  PolynomialRing<PrimeField> ring(PrimeField{}, names);
  CHECK(buchberger(ring, std::vector<IntegerPolynomial>{}).is_zero_ideal());
  CHECK(buchberger(ring, parse_polys({"a - 1", "a"}, names)).is_unit());
}

TEST_CASE("buchberger: scroll minors are closed under S-pairs") {
  PolynomialRing<PrimeField> ring(PrimeField{}, kGreduitNames);
  BuchbergerStats stats;
  auto gb = buchberger(ring, parse_polys(kGreduitMinors, kGreduitNames), &stats);
  // Every S-polynomial of the computed basis reduces to zero (checked directly).
  const auto& ps = gb.polynomials();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      auto s = detail::s_polynomial(ring, ps[i], ps[j]);
      CHECK(normal_form(ring, s, gb).is_zero());
    }
  }
  // Every original minor lies in the ideal.
  for (const auto& m : kGreduitMinors) CHECK(ideal_membership(ring, ring.from_integer(parse_poly(m, kGreduitNames)), gb));
  CHECK(stats.pairs_reduced > 0);
}

TEST_CASE("normal form and membership") {
  PolynomialRing<PrimeField> ring(PrimeField{}, kGreduitNames);
  auto gb = buchberger(ring, parse_polys(kGreduitMinors, kGreduitNames));
  CHECK(normal_form(ring, ring.from_integer(parse_poly("x*c - b*y", kGreduitNames)), gb).is_zero());
  auto one = ring.constant(ring.field().one());
  CHECK(ring.equal(normal_form(ring, one, gb), one));
  CHECK_FALSE(ideal_membership(ring, one, gb));
  CHECK_FALSE(ideal_membership(ring, ring.variable(0), gb));

  PolynomialRing<PrimeField> lex_ring = ring.with_order(MonomialOrder(OrderKind::Lex, kGreduitNames.size()));
  CHECK_THROWS_AS(normal_form(lex_ring, one, gb), Error);
}

TEST_CASE("normal form is invariant under adding ideal multiples") {
  PolynomialRing<PrimeField> ring(PrimeField{}, kGreduitNames);
  auto gb = buchberger(ring, parse_polys(kGreduitMinors, kGreduitNames));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<std::size_t> var(0, kGreduitNames.size() - 1);
  auto random_poly = [&](int terms, int degree) {
    std::vector<IntegerTerm> ts;
    for (int t = 0; t < terms; ++t) {
      Monomial m(kGreduitNames.size());
      for (int d = 0; d < degree; ++d) {
        auto v = var(rng);
        m.set(v, static_cast<Monomial::Exponent>(m[v] + 1));
      }
      ts.push_back({m, coeff(rng)});
    }
    return ring.from_integer(IntegerPolynomial(std::move(ts)));
  };
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_poly(3, 2);
    auto h = random_poly(4, 3);
    const auto& g = gb.polynomials()[static_cast<std::size_t>(trial) % gb.size()];
    auto lhs = normal_form(ring, ring.add(ring.mul(f, g), h), gb);
    auto rhs = normal_form(ring, h, gb);
    CHECK(ring.equal(lhs, rhs));
  }
}

TEST_CASE("reduced basis is independent of generator order") {
  PolynomialRing<PrimeField> ring(PrimeField{}, kGreduitNames);
  auto gens = parse_polys(kGreduitMinors, kGreduitNames);
  auto reference = buchberger(ring, gens);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(same_basis(ring, reference, buchberger(ring, gens)));
  }
}

TEST_CASE("ideal intersection by elimination") {
  std::vector<std::string> names{"a", "b", "c"};
  PolynomialRing<PrimeField> ring(PrimeField{}, names);
  auto to_polys = [&](std::vector<std::string> texts) {
    std::vector<Polynomial<PrimeField>> out;
    for (const auto& t : texts) out.push_back(ring.from_integer(parse_poly(t, names)));
    return out;
  };
  auto ab = ideal_intersection(ring, to_polys({"a"}), to_polys({"b"}));
  CHECK(basis_strings(ring, ab) == std::vector<std::string>{"a*b"});

  auto abc = ideal_intersection(ring, to_polys({"a", "b"}), to_polys({"c"}));
  CHECK(same_basis(ring, abc, buchberger(ring, parse_polys({"a*c", "b*c"}, names))));

  // Soundness: generators of I ∩ J lie in I and J; products lie in I ∩ J.
  auto I = to_polys({"a^2 - b*c", "a*b"});
  auto J = to_polys({"b - c", "a*c^2"});
  auto inter = ideal_intersection(ring, I, J);
  auto gbI = buchberger(ring, I);
  auto gbJ = buchberger(ring, J);
  for (const auto& g : inter.polynomials()) {
    CHECK(ideal_membership(ring, g, gbI));
    CHECK(ideal_membership(ring, g, gbJ));
  }
  for (const auto& f : I) {
    for (const auto& g : J) CHECK(ideal_membership(ring, ring.mul(f, g), inter));
  }
}

TEST_CASE("single-component intersection is the ideal itself") {
  PolynomialRing<PrimeField> ring(PrimeField{}, kGreduitNames);
  std::vector<Polynomial<PrimeField>> minors;
  for (const auto& m : kGreduitMinors) minors.push_back(ring.from_integer(parse_poly(m, kGreduitNames)));
  auto single = ideal_intersection(ring, std::vector<std::vector<Polynomial<PrimeField>>>{minors});
  CHECK(same_basis(ring, single, buchberger(ring, minors)));
}

TEST_CASE("hilbert data: zero ideal, conic, Greduit scroll") {
  auto zero = hilbert_data(std::vector<Monomial>{}, 5);
  CHECK(zero.dimension == 5);
  CHECK(zero.codimension == 0);
  CHECK(zero.degree == 1);

  std::vector<std::string> conic_names{"x0", "y", "x1"};
  PolynomialRing<PrimeField> conic_ring(PrimeField{}, conic_names);
  auto conic = buchberger(conic_ring, parse_polys({"x0*x1 - y^2"}, conic_names));
  auto hc = hilbert_data(conic, 3);
  // Oracle: standard monomials of degree t number 2t + 1.
  for (unsigned t = 0; t < 6; ++t) {
    CHECK(testing::count_standard_monomials(conic.leading_monomials(), 3, t) == 2 * t + 1);
  }
  CHECK(hc.dimension == 2);
  CHECK(hc.codimension == 1);
  CHECK(hc.degree == 2);

  PolynomialRing<PrimeField> ring(PrimeField{}, kGreduitNames);
  auto gb = buchberger(ring, parse_polys(kGreduitMinors, kGreduitNames));
  auto h = hilbert_data(gb, 7);
  auto [bdim, bdeg] = testing::brute_dimension_degree(gb.leading_monomials(), 7, 10);
  CHECK(bdim == 4);
  CHECK(bdeg == 4);
  CHECK(h.dimension == 4);
  CHECK(h.codimension == 3);
  CHECK(h.degree == 4);
  CHECK(krull_dimension_lt(gb, 7) == 4);
}

TEST_CASE("krull dimension from leading terms") {
  CHECK(krull_dimension_lt(std::vector<Monomial>{}, 4) == 4);
  std::vector<std::string> names{"a", "b", "c"};
  auto ac = parse_poly("a*c", names).terms().front().monomial;
  CHECK(krull_dimension_lt(std::vector<Monomial>{ac}, 3) == 2);
  CHECK(krull_dimension_lt(std::vector<Monomial>{Monomial(3)}, 3) == -1);
}

TEST_CASE("hilbert function matches brute-force counts on random monomial ideals") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    std::vector<Monomial> gens;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int g = 0; g < count; ++g) {
      Monomial m(n);
      const int deg = 1 + static_cast<int>(rng() % 3);
      for (int d = 0; d < deg; ++d) {
        auto v = rng() % n;
        m.set(v, static_cast<Monomial::Exponent>(m[v] + 1));
      }
      gens.push_back(m);
    }
    for (unsigned t = 0; t < 7; ++t) {
      CHECK(hilbert_function(gens, n, t) == testing::count_standard_monomials(gens, n, t));
    }
    auto hd = hilbert_data(gens, n);
    CHECK(hd.dimension == krull_dimension_lt(gens, n));
    CHECK(hd.dimension + hd.codimension == static_cast<int>(n));
  }
}

TEST_CASE("rational and prime fields agree on the Greduit basis") {
  PolynomialRing<PrimeField> pring(PrimeField{}, kGreduitNames);
  PolynomialRing<RationalField> qring(RationalField{}, kGreduitNames);
  auto gens = parse_polys(kGreduitMinors, kGreduitNames);
  auto pgb = buchberger(pring, gens);
  auto qgb = buchberger(qring, gens);
  CHECK(basis_strings(pring, pgb) == basis_strings(qring, qgb));
}

TEST_CASE("sparse echelon rank") {
  SparseEchelon<PrimeField> ech(PrimeField{});
  using Row = SparseEchelon<PrimeField>::Row;
  CHECK(ech.insert(Row{{0, 1}, {1, 1}}));
  CHECK(ech.insert(Row{{1, 1}, {2, 1}}));
  CHECK_FALSE(ech.insert(Row{{0, 1}, {2, PrimeField{}.from_int(-1)}}));
  CHECK(ech.rank() == 2);
  CHECK_FALSE(ech.contains_unit(2));
  CHECK(ech.insert(Row{{2, 5}}));
  CHECK(ech.contains_unit(0));
}
