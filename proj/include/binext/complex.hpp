#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace binext {

using VertexId = std::size_t;
/// Sorted, duplicate-free list of vertex ids.
using Facet = std::vector<VertexId>;

struct Vertex {
  VertexId id = 0;
  std::string name;
  bool operator==(const Vertex&) const = default;
};

/// Vertex ids are 0..n-1; facets are sorted and pairwise non-nested, and
/// every vertex lies in some facet.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Trusted constructor; use validate_complex for raw input.
  SimplicialComplex(std::vector<Vertex> vertices, std::vector<Facet> facets);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  /// max |F| - 1
  int dimension() const;

  const std::string& name(VertexId v) const { return vertices_.at(v).name; }
  std::vector<std::string> names() const;
  std::vector<std::string> names(const Facet& face) const;
  std::optional<VertexId> find(const std::string& name) const;
  bool is_face(const Facet& face) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Facet> facets_;
};

struct ComplexBuild {
  SimplicialComplex complex;
  /// For each raw input facet, its index among the kept facets, or nullopt
  /// when it was dropped as contained in another.
  std::vector<std::optional<std::size_t>> facet_of_input;
};

/// Declared vertices (if any) take the first ids in their given order and any
/// undeclared name is rejected; otherwise ids follow first appearance.
/// Declared vertices lying in no facet become singleton facets.
ComplexBuild build_complex(const std::vector<std::vector<std::string>>& raw_facets,
                           const std::vector<std::string>& declared_vertices = {});

SimplicialComplex validate_complex(const std::vector<std::vector<std::string>>& raw_facets);

/// Simple undirected graph on an arbitrary set of vertex ids.
class Graph {
 public:
  Graph() = default;
  explicit Graph(const std::vector<VertexId>& vertices);

  void add_vertex(VertexId v);
  /// Returns false if the edge was already present. Loops are rejected.
  bool add_edge(VertexId u, VertexId v);
  bool remove_edge(VertexId u, VertexId v);

  bool has_vertex(VertexId v) const { return adjacency_.count(v) != 0; }
  bool has_edge(VertexId u, VertexId v) const;
  std::vector<VertexId> vertices() const;
  /// Each edge once, as (smaller, larger), sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  const std::set<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const;
  bool is_connected() const;
  Graph induced(const std::set<VertexId>& keep) const;
  bool is_clique(const std::set<VertexId>& vs) const;

  bool operator==(const Graph&) const = default;

 private:
  std::map<VertexId, std::set<VertexId>> adjacency_;
};

Graph skeleton_graph(const SimplicialComplex& complex);

/// Maximal cliques (Bron-Kerbosch with pivoting), each sorted; the list is sorted.
std::vector<Facet> maximal_cliques(const Graph& g);

/// The graph's vertices must be exactly 0..names.size()-1.
SimplicialComplex clique_complex(const Graph& g, const std::vector<std::string>& names);

/// One vertex per facet, adjacent when the facets meet.
Graph facet_intersection_graph(const SimplicialComplex& complex);

/// A tree on a family of sets in which, for every element, the sets that
/// contain it form a subtree.
struct CliqueTree {
  /// Breadth-first order from set 0.
  std::vector<std::size_t> order;
  /// parent[order[0]] is nullopt.
  std::vector<std::optional<std::size_t>> parent;
};

/// Maximum-weight spanning tree of the intersection graph, weighted by
/// intersection size, checked for the running-intersection property. Returns
/// nullopt when the family is disconnected or admits no such tree.
std::optional<CliqueTree> clique_tree(const std::vector<Facet>& sets);

struct DTreeVerdict {
  bool verdict = false;
  /// Removed vertices in order; the remaining vertices form K_{d+1}.
  std::vector<VertexId> elimination_order;
  std::string reason;
};

/// Recognition by vertex elimination: repeatedly remove the lowest-id vertex
/// whose neighbourhood is a clique on 1..d vertices and whose removal leaves a
/// (d+1)-clique in place, until K_{d+1} remains. The verdict is cross-checked
/// against the clique-tree characterization (connected chordal graph of
/// clique number d+1) and a disagreement throws std::logic_error.
DTreeVerdict is_generalized_d_tree(const Graph& g, int d);

/// Connected, clique number d+1, and the maximal cliques admit a clique tree.
bool clique_tree_criterion(const Graph& g, int d);

/// Minimal non-faces ordered by size, then lexicographically.
std::vector<Facet> stanley_reisner_generators(const SimplicialComplex& complex);

struct ProperStar {
  std::size_t facet = 0;
  VertexId origin = 0;
  std::vector<VertexId> targets;
  bool operator==(const ProperStar&) const = default;
};

/// True when the edge uv lies in the given facet and in no other.
bool is_proper_edge(const SimplicialComplex& complex, std::size_t facet, VertexId u, VertexId v);

/// Per facet, one star per origin having at least one proper edge; origins and
/// targets ascending.
std::vector<std::vector<ProperStar>> proper_edge_stars(const SimplicialComplex& complex);

}  // namespace binext
