#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "binext/complex.hpp"
#include "binext/extension.hpp"
#include "binext/poly/integer_polynomial.hpp"

namespace binext {

/// Partial map from vertex ids to classes 0..num_classes-1.
struct Coloration {
  std::map<VertexId, std::size_t> assignment;
  std::size_t num_classes = 0;

  std::optional<std::size_t> color(VertexId v) const;
  /// Class members in ascending id order, indexed by class.
  std::vector<std::vector<VertexId>> classes() const;
  bool operator==(const Coloration&) const = default;
};

/// Throws UncoloredVertex when some vertex of g has no class.
bool is_proper_coloration(const Graph& g, const Coloration& c);

/// Proper, and the union of any two classes induces a forest.
bool is_good_coloration(const Graph& g, const Coloration& c);

struct ColorationViolation {
  std::size_t facet = 0;
  /// 1..4 for the per-facet conditions; 0 for a domain error (a vertex colored
  /// outside the reduced graph, a reduced-graph vertex left uncolored, or a
  /// class index out of range).
  int condition = 0;
  VertexId vertex = 0;
  std::string message;
};

struct BinomialColorationCheck {
  bool ok = true;
  std::vector<ColorationViolation> violations;
};

/// For every facet F with a matrix of k >= 2 blocks (0-based):
///   (1) C(origin) ∩ F = {origin, target(1)};
///   (2) C(head(j)) ∩ F = {head(j), target(j+1)} for 1 <= j <= k-2;
///   (3) C(head(k-1)) ∩ F = {head(k-1)};
///   (4) C(x) ∩ F = {x} for every other colored x in F.
/// Facets with fewer than two blocks apply (4) to all their colored vertices.
BinomialColorationCheck is_binomial_coloration(const ExtensionComplex& ext, const Coloration& c);

/// The vertices that share a class in every binomial coloration, as
/// equivalence classes of the forced pairs (origin ~ target(1),
/// head(j) ~ target(j+1)); sorted.
std::vector<std::vector<VertexId>> forced_groups(const ExtensionComplex& ext);

struct SearchStats {
  std::size_t nodes = 0;
  bool limit_reached = false;
};

/// Backtracking over forced groups (larger groups first, then by descending
/// reduced-graph degree, then lowest id), trying classes in index order. A
/// result passes is_binomial_coloration, is goodness-checked on
/// reduced_base_graph, and uses all dim+1 classes.
std::optional<Coloration> search_binomial_coloration(const ExtensionComplex& ext, SearchStats* stats = nullptr,
                                                     std::size_t node_limit = 1'000'000);

/// Constructive coloration for a base complex whose skeleton is a generalized
/// d-tree and whose facets admit a clique tree. Facets are colored in
/// clique-tree order; within a facet each forced group inherits the class of
/// an already colored member, and the remaining groups take the lowest unused
/// classes, except that a free origin group takes the highest one. Throws
/// NotADTree when the precondition fails and ValidationFailed when the result
/// does not pass both checkers.
Coloration dtree_coloration(const ExtensionComplex& ext);

/// True when dtree_coloration's precondition holds.
bool dtree_applicable(const ExtensionComplex& ext);

/// g_i = sum of the variables in class i. Throws EmptyClass on an empty class.
std::vector<poly::IntegerPolynomial> reduction_vectors(const Coloration& c, std::size_t num_variables);

}  // namespace binext
