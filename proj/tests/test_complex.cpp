#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "binext/complex.hpp"
#include "binext/error.hpp"
#include "generators.hpp"

using namespace binext;

namespace {

std::vector<std::vector<std::string>> facet_names(const SimplicialComplex& c) {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : c.facets()) out.push_back(c.names(f));
  return out;
}

Graph cycle(std::size_t n) {
  Graph g;
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph complete(std::size_t n) {
  Graph g;
  for (VertexId v = 0; v < n; ++v) g.add_vertex(v);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

// Exhaustive oracle: memoized search over every elimination choice.
bool brute_d_tree(const Graph& g, int d) {
  auto vs = g.vertices();
  const std::size_t n = vs.size();
  if (n == 0 || d < 0) return false;
  std::map<unsigned, bool> memo;
  std::function<bool(unsigned)> ok = [&](unsigned mask) -> bool {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::set<VertexId> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) s.insert(vs[i]);
    }
    bool result = false;
    if (s.size() == static_cast<std::size_t>(d) + 1 && g.is_clique(s)) {
      result = true;
    } else {
      for (std::size_t i = 0; i < n && !result; ++i) {
        if (!(mask >> i & 1U)) continue;
        std::set<VertexId> nb;
        for (auto w : g.neighbors(vs[i])) {
          if (s.count(w)) nb.insert(w);
        }
        if (nb.empty() || nb.size() > static_cast<std::size_t>(d) || !g.is_clique(nb)) continue;
        result = ok(mask & ~(1U << i));
      }
    }
    memo[mask] = result;
    return result;
  };
  return ok((1U << n) - 1);
}

}  // namespace

TEST_CASE("validate_complex examples") {
  auto two_edges = validate_complex({{"a", "b"}, {"b", "c"}});
  CHECK(two_edges.dimension() == 1);
  CHECK(two_edges.num_vertices() == 3);

  auto dropped = validate_complex({{"a", "b"}, {"a"}});
  CHECK(dropped.facets().size() == 1);

  auto cycles = validate_complex({{"a", "b", "c"}, {"b", "c", "d"}});
  CHECK(cycles.dimension() == 2);
  CHECK(cycles.num_vertices() == 4);
  CHECK(cycles.names() == std::vector<std::string>{"a", "b", "c", "d"});

  CHECK_THROWS_AS(validate_complex({{"a"}, {}}), Error);
  CHECK_THROWS_AS(validate_complex({{"a", "a"}}), Error);
}

TEST_CASE("build_complex with declared vertices") {
  auto build = build_complex({{"b", "c"}, {"b"}, {"c", "b"}}, {"a", "b", "c"});
  const auto& c = build.complex;
  CHECK(c.names() == std::vector<std::string>{"a", "b", "c"});
  // {b} and the repeated {b,c} are dropped; a becomes a singleton facet.
  CHECK(facet_names(c) == std::vector<std::vector<std::string>>{{"b", "c"}, {"a"}});
  CHECK(build.facet_of_input == std::vector<std::optional<std::size_t>>{0, std::nullopt, std::nullopt});
  CHECK_THROWS_AS(build_complex({{"a", "q"}}, {"a"}), Error);
}

TEST_CASE("skeleton graph") {
  CHECK(skeleton_graph(validate_complex({{"a", "b", "c"}})).num_edges() == 3);
  auto g = skeleton_graph(validate_complex({{"a", "b", "c"}, {"b", "c", "d"}}));
  CHECK(g.edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  auto single = skeleton_graph(validate_complex({{"a"}}));
  CHECK(single.num_vertices() == 1);
  CHECK(single.num_edges() == 0);
}

TEST_CASE("clique complex") {
  auto k4 = clique_complex(complete(4), testing::letter_names(4));
  CHECK(k4.facets().size() == 1);
  CHECK(k4.dimension() == 3);
  CHECK(clique_complex(cycle(4), testing::letter_names(4)).facets().size() == 4);
  auto diamond = complete(4);
  diamond.remove_edge(0, 3);
  auto dc = clique_complex(diamond, testing::letter_names(4));
  CHECK(dc.facets() == std::vector<Facet>{{0, 1, 2}, {1, 2, 3}});
}

TEST_CASE("facet intersection graph") {
  auto g = facet_intersection_graph(validate_complex({{"a", "b", "c"}, {"b", "c", "d"}}));
  CHECK(g.num_edges() == 1);
  CHECK(facet_intersection_graph(validate_complex({{"a", "b"}, {"c", "d"}})).num_edges() == 0);
  auto fan = facet_intersection_graph(validate_complex({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}}));
  CHECK(fan.num_edges() == 3);
}

TEST_CASE("generalized d-tree examples") {
  auto k3 = is_generalized_d_tree(complete(3), 2);
  CHECK(k3.verdict);
  CHECK(k3.elimination_order.empty());

  auto g = skeleton_graph(validate_complex({{"a", "b", "c"}, {"b", "c", "d"}}));
  auto two = is_generalized_d_tree(g, 2);
  CHECK(two.verdict);
  CHECK(two.elimination_order == std::vector<VertexId>{0});

  auto c4 = is_generalized_d_tree(cycle(4), 1);
  CHECK_FALSE(c4.verdict);

  Graph split;
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  auto disc = is_generalized_d_tree(split, 1);
  CHECK_FALSE(disc.verdict);
  CHECK(disc.reason == "disconnected");

  // Triangle with a pendant vertex on 1: removing 0 first would dead-end.
  auto pendant = complete(3);
  pendant.add_edge(1, 3);
  auto pv = is_generalized_d_tree(pendant, 2);
  CHECK(pv.verdict);
  CHECK(pv.elimination_order == std::vector<VertexId>{3});

  // The fan of three triangles is a 2-tree though its facet graph has a cycle.
  auto fan = skeleton_graph(validate_complex({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}}));
  CHECK(is_generalized_d_tree(fan, 2).verdict);
  CHECK(clique_tree_criterion(fan, 2));
}

TEST_CASE("generalized d-tree recognition agrees with exhaustive search and the clique-tree criterion") {
  std::mt19937 rng(2024);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g;
    int d = static_cast<int>(testing::uniform(rng, 0, 3));
    if (trial % 2 == 0) {
      g = testing::random_generalized_d_tree(rng, testing::uniform(rng, static_cast<std::size_t>(d) + 1, 8), d);
    } else {
      g = testing::random_graph(rng, testing::uniform(rng, 1, 8), 0.5);
    }
    auto verdict = is_generalized_d_tree(g, d);
    CHECK(verdict.verdict == brute_d_tree(g, d));
    CHECK(verdict.verdict == clique_tree_criterion(g, d));
    if (verdict.verdict) {
      ++positives;
      // The certificate replays.
      Graph h = g;
      for (auto v : verdict.elimination_order) {
        std::set<VertexId> nb = h.neighbors(v);
        CHECK(!nb.empty());
        CHECK(nb.size() <= static_cast<std::size_t>(d));
        CHECK(h.is_clique(nb));
        auto vs = h.vertices();
        std::set<VertexId> rest(vs.begin(), vs.end());
        rest.erase(v);
        h = h.induced(rest);
      }
      auto vs = h.vertices();
      CHECK(vs.size() == static_cast<std::size_t>(d) + 1);
      CHECK(h.is_clique(std::set<VertexId>(vs.begin(), vs.end())));
    }
  }
  CHECK(positives > 100);
}

TEST_CASE("clique complex covers the facets of the complex") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = validate_complex(testing::random_raw_facets(rng, 7, testing::uniform(rng, 1, 5), 4));
    auto cc = clique_complex(skeleton_graph(c), c.names());
    for (const auto& f : c.facets()) CHECK(cc.is_face(f));
    // Maximality of validated facets.
    const auto& fs = c.facets();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = 0; j < fs.size(); ++j) {
        if (i != j) CHECK_FALSE(std::includes(fs[j].begin(), fs[j].end(), fs[i].begin(), fs[i].end()));
      }
    }
  }
}

TEST_CASE("Stanley-Reisner generators") {
  auto path = validate_complex({{"a", "b"}, {"b", "c"}});
  CHECK(stanley_reisner_generators(path) == std::vector<Facet>{{0, 2}});
  CHECK(stanley_reisner_generators(validate_complex({{"a", "b", "c"}})).empty());
  CHECK(stanley_reisner_generators(validate_complex({{"a", "b", "c"}, {"b", "c", "d"}})) == std::vector<Facet>{{0, 3}});
  // Boundary of a triangle: the only minimal non-face has size dim + 2.
  CHECK(stanley_reisner_generators(validate_complex({{"a", "b"}, {"b", "c"}, {"a", "c"}})) == std::vector<Facet>{{0, 1, 2}});
}

TEST_CASE("Stanley-Reisner generators match a full subset scan") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = testing::uniform(rng, 2, 8);
    auto c = validate_complex(testing::random_raw_facets(rng, n, testing::uniform(rng, 1, 5), 4));
    const std::size_t m = c.num_vertices();
    std::vector<Facet> expected;
    for (unsigned mask = 1; mask < (1U << m); ++mask) {
      Facet s;
      for (VertexId v = 0; v < m; ++v) {
        if (mask >> v & 1U) s.push_back(v);
      }
      if (c.is_face(s)) continue;
      bool minimal = true;
      for (std::size_t k = 0; k < s.size() && minimal; ++k) {
        Facet sub = s;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
        minimal = c.is_face(sub);
      }
      if (minimal) expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end(), [](const Facet& a, const Facet& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    CHECK(stanley_reisner_generators(c) == expected);
  }
}

TEST_CASE("proper edge stars") {
  auto simplex = validate_complex({{"a", "b", "c", "d"}});
  auto stars = proper_edge_stars(simplex);
  REQUIRE(stars.size() == 1);
  CHECK(stars[0].size() == 4);
  for (const auto& s : stars[0]) CHECK(s.targets.size() == 3);

  auto cycles = validate_complex({{"a", "b", "c"}, {"b", "c", "d"}});
  auto cs = proper_edge_stars(cycles);
  REQUIRE(!cs[0].empty());
  CHECK(cs[0][0] == ProperStar{0, 0, {1, 2}});
  CHECK_FALSE(is_proper_edge(cycles, 0, 1, 2));

  // Every edge of the middle facet is shared.
  auto shared = validate_complex({{"a", "b", "x"}, {"b", "c", "y"}, {"a", "c", "z"}, {"a", "b", "c"}});
  CHECK(proper_edge_stars(shared)[3].empty());
}
