#include <doctest.h>

#include <random>

#include "binext/error.hpp"
#include "binext/extension.hpp"
#include "binext/poly/groebner.hpp"
#include "binext/poly/hilbert.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "test_support.hpp"

using namespace binext;
using namespace binext::poly;

namespace {

std::vector<std::string> strings(const IdealPresentation& ideal) { return ideal.generator_strings(); }

std::vector<std::string> block_names(const ExtensionComplex& ext, const ScrollMatrix& m) {
  std::vector<std::string> out;
  for (const auto& b : m.blocks) {
    std::string s;
    for (auto v : b.run) s += ext.name(v);
    out.push_back(s);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> edge_names(const ExtensionComplex& ext, const Graph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [u, v] : g.edges()) out.emplace_back(ext.name(u), ext.name(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

// Checks every invariant tying B to its components over GF(32003).
void check_decomposition(const ExtensionComplex& ext) {
  PolynomialRing<PrimeField> ring(PrimeField{}, ext.variables());
  auto b = binomial_extension_ideal(ext);
  auto comps = component_ideals(ext);
  auto gb_b = buchberger(ring, b.generators);

  std::vector<std::vector<Polynomial<PrimeField>>> parts;
  for (std::size_t l = 0; l < comps.size(); ++l) {
    std::vector<Polynomial<PrimeField>> polys;
    for (const auto& g : comps[l].generators) polys.push_back(ring.from_integer(g));
    auto gb_j = buchberger(ring, polys);
    for (const auto& g : b.generators) CHECK(ideal_membership(ring, ring.from_integer(g), gb_j));
    const int facet_dim = static_cast<int>(ext.base().facets()[l].size()) - 1;
    CHECK(hilbert_data(gb_j, ext.num_variables()).dimension == 1 + facet_dim);
    parts.push_back(std::move(polys));
  }
  auto inter = ideal_intersection(ring, parts);
  CHECK(same_basis(ring, gb_b, inter));
  auto hd = hilbert_data(gb_b, ext.num_variables());
  CHECK(hd.dimension == 1 + ext.dimension());
  CHECK(krull_dimension_lt(gb_b, ext.num_variables()) == hd.dimension);
}

}  // namespace

TEST_CASE("build_extension_complex") {
  auto g = testing::greduit();
  CHECK(g.variables() == std::vector<std::string>{"a", "b", "c", "d", "x", "y", "z"});
  CHECK(g.extended_facets() == std::vector<Facet>{{0, 1, 2, 3, 4, 5, 6}});
  CHECK(g.dimension() == 3);

  auto base = validate_complex({{"a", "b", "c"}, {"b", "c", "d"}});
  auto trivial = build_extension_complex(base, {{0, "a", {{"b", {}}, {"c", {}}}}});
  CHECK(trivial.num_variables() == 4);
  CHECK(trivial.extended_complex().facets() == base.facets());
  CHECK_FALSE(trivial.matrix(0).has_value());

  auto code_of = [&](const std::vector<ExtensionSpec>& specs) {
    try {
      build_extension_complex(base, specs);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ValidationFailed;
  };
  CHECK(code_of({{0, "b", {{"c", {"p"}}}}}) == ErrorCode::NotAProperEdge);
  CHECK(code_of({{0, "d", {{"b", {"p"}}}}}) == ErrorCode::OriginMismatch);
  CHECK(code_of({{0, "a", {{"b", {"p"}}, {"c", {"p"}}}}}) == ErrorCode::DuplicatePointName);
  CHECK(code_of({{0, "a", {{"b", {"c"}}}}}) == ErrorCode::DuplicatePointName);
  CHECK(code_of({{0, "a", {{"b", {"p"}}}}, {0, "a", {{"c", {"q"}}}}}) == ErrorCode::DuplicateExtension);
  CHECK(code_of({{0, "a", {{"q", {"p"}}}}}) == ErrorCode::UnknownName);
}

TEST_CASE("scroll matrices and minors") {
  auto g = testing::greduit();
  auto m = g.matrix(0);
  REQUIRE(m);
  CHECK(block_names(g, *m) == std::vector<std::string>{"axb", "yc", "zd"});
  CHECK(strings({g.variables(), scroll_minors(*m, g.num_variables())}) ==
        std::vector<std::string>{"a*b - x^2", "a*c - x*y", "a*d - x*z", "-b*y + c*x", "-b*z + d*x", "-c*z + d*y"});

  FacetExtension conic{0, 0, {2}, {{1}}};
  auto cm = scroll_matrix(conic);
  CHECK(strings({{"x0", "y", "x1"}, scroll_minors(cm, 3)}) == std::vector<std::string>{"x0*x1 - y^2"});

  auto c = testing::cycles_pair();
  auto m1 = c.matrix(0);
  REQUIRE(m1);
  CHECK(block_names(c, *m1) == std::vector<std::string>{"axb", "yc"});
  CHECK(scroll_minors(*m1, c.num_variables()).size() == 3);
  auto m2 = c.matrix(1);
  REQUIRE(m2);
  CHECK(block_names(c, *m2) == std::vector<std::string>{"dub", "vc"});

  FacetExtension empty{0, 0, {1}, {{}}};
  CHECK_THROWS_AS(scroll_matrix(empty), Error);

  // Block 0 survives with no points of its own.
  auto g1 = testing::greduit1();
  auto first = g1.matrix(0);
  REQUIRE(first);
  CHECK(block_names(g1, *first) == std::vector<std::string>{"ab", "yc"});
  CHECK(strings({g1.variables(), scroll_minors(*first, g1.num_variables())}) == std::vector<std::string>{"a*c - b*y"});
}

TEST_CASE("minor count is C(columns, 2)") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto ext = testing::random_extension_complex(rng, 8, 3, 3);
    for (std::size_t l = 0; l < ext.base().facets().size(); ++l) {
      if (auto m = ext.matrix(l)) CHECK(scroll_minors(*m, ext.num_variables()).size() == choose2(m->num_columns()));
    }
  }
}

TEST_CASE("component ideals") {
  auto g = testing::greduit();
  auto jg = component_ideals(g);
  REQUIRE(jg.size() == 1);
  CHECK(jg[0].generators.size() == 6);

  auto c = testing::cycles_pair();
  auto jc = component_ideals(c);
  REQUIRE(jc.size() == 2);
  CHECK(strings(jc[0]) == std::vector<std::string>{"a*b - x^2", "a*c - x*y", "-b*y + c*x", "d", "u", "v"});
  CHECK(strings(jc[1]) == std::vector<std::string>{"b*d - u^2", "c*d - u*v", "-b*v + c*u", "a", "x", "y"});

  auto trivial = component_ideals(build_extension_complex(validate_complex({{"a", "b"}, {"b", "c"}}), {}));
  CHECK(strings(trivial[0]) == std::vector<std::string>{"c"});
  CHECK(strings(trivial[1]) == std::vector<std::string>{"a"});
}

TEST_CASE("binomial extension ideal") {
  auto base = validate_complex({{"a", "b"}, {"b", "c"}, {"c", "d", "e"}});
  auto plain = binomial_extension_ideal(build_extension_complex(base, {}));
  std::vector<IntegerPolynomial> sr;
  for (const auto& face : stanley_reisner_generators(base)) {
    Monomial m(base.num_vertices());
    for (auto v : face) m.set(v, 1);
    sr.push_back(IntegerPolynomial::monomial(m));
  }
  CHECK(plain.generators == sr);

  CHECK(binomial_extension_ideal(testing::greduit()).generators.size() == 6);

  auto c = binomial_extension_ideal(testing::cycles_pair());
  auto s = strings(c);
  REQUIRE(s.size() == 15);
  std::vector<std::string> monomials(s.begin() + 6, s.end());
  std::sort(monomials.begin(), monomials.end());
  CHECK(monomials == std::vector<std::string>{"a*d", "a*u", "a*v", "d*x", "d*y", "x*u", "x*v", "y*u", "y*v"});
}

TEST_CASE("reduced graph") {
  auto g = testing::greduit();
  auto rg = reduced_graph(g);
  std::vector<std::string> names;
  for (auto v : rg.vertices()) names.push_back(g.name(v));
  CHECK(names == std::vector<std::string>{"a", "b", "c", "d", "y", "z"});
  using E = std::vector<std::pair<std::string, std::string>>;
  CHECK(edge_names(g, rg) == E{{"a", "b"}, {"a", "y"}, {"a", "z"}, {"b", "c"}, {"b", "d"}, {"c", "d"}, {"c", "y"}, {"c", "z"}});
  CHECK(edge_names(g, reduced_base_graph(g)) == E{{"a", "b"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});

  auto base = validate_complex({{"a", "b", "c"}, {"b", "c", "d"}});
  CHECK(reduced_graph(build_extension_complex(base, {})) == skeleton_graph(base));

  // One block only: nothing is added or dropped.
  auto single = build_extension_complex(base, {{0, "a", {{"b", {"p", "q"}}, {"c", {}}}}});
  CHECK(reduced_graph(single) == skeleton_graph(base));
}

TEST_CASE("decomposition and dimension on the worked examples") {
  check_decomposition(testing::greduit());
  check_decomposition(testing::greduit1());
  check_decomposition(testing::cycles_pair());
}

TEST_CASE("decomposition and dimension on random extension complexes") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    auto ext = testing::random_extension_complex(rng, 7, 3, 2);
    CAPTURE(trial);
    check_decomposition(ext);
  }
}

TEST_CASE("rational and prime fields agree on B for the examples") {
  for (const auto& ext : {testing::greduit(), testing::greduit1(), testing::cycles_pair()}) {
    auto b = binomial_extension_ideal(ext);
    PolynomialRing<PrimeField> pring(PrimeField{}, ext.variables());
    PolynomialRing<RationalField> qring(RationalField{}, ext.variables());
    auto p = buchberger(pring, b.generators);
    auto q = buchberger(qring, b.generators);
    REQUIRE(p.size() == q.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
      CHECK(pring.to_string(p.polynomials()[k]) == qring.to_string(q.polynomials()[k]));
    }
  }
}
