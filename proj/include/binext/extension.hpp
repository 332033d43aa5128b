#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "binext/complex.hpp"
#include "binext/poly/integer_polynomial.hpp"

namespace binext {

/// Points subdividing the proper edge from the origin to `target`.
struct EdgeSpec {
  std::string target;
  std::vector<std::string> points;
  bool operator==(const EdgeSpec&) const = default;
};

/// User-facing description of one facet extension, by name.
struct ExtensionSpec {
  std::size_t facet = 0;
  std::string origin;
  std::vector<EdgeSpec> edges;
  bool operator==(const ExtensionSpec&) const = default;
};

/// A contiguous run r_0..r_L of one matrix block; its columns are
/// (r_k over r_{k+1}).
struct ScrollBlock {
  std::vector<VertexId> run;
  bool operator==(const ScrollBlock&) const = default;
};

/// Two-row matrix formed by concatenating the blocks of one facet.
///
/// Block 0 runs from the origin through the first edge's points to the first
/// target; it is present whenever the facet carries any point at all. Each
/// later edge with points contributes a block (points..., target).
struct ScrollMatrix {
  std::size_t facet = 0;
  std::vector<ScrollBlock> blocks;

  VertexId origin() const { return blocks.front().run.front(); }
  /// Last entry of block j: the target x_{i_j}.
  VertexId target(std::size_t j) const { return blocks.at(j).run.back(); }
  /// First entry of block j >= 1: the point y_{j,1}.
  VertexId head(std::size_t j) const { return blocks.at(j).run.front(); }
  std::size_t num_columns() const;
  /// Columns in order as (top, bottom).
  std::vector<std::pair<VertexId, VertexId>> columns() const;
  std::vector<VertexId> variables() const;

  bool operator==(const ScrollMatrix&) const = default;
};

/// Resolved extension of one facet, by variable id.
struct FacetExtension {
  std::size_t facet = 0;
  VertexId origin = 0;
  std::vector<VertexId> targets;
  /// points[j] subdivides the edge origin-targets[j].
  std::vector<std::vector<VertexId>> points;

  bool has_points() const;
  std::vector<VertexId> all_points() const;
};

/// Base complex plus per-facet scroll extensions. Variables are the base
/// vertices (ids 0..n-1) followed by the added points in facet, edge and run
/// order.
class ExtensionComplex {
 public:
  ExtensionComplex(SimplicialComplex base, std::vector<std::string> point_names,
                   std::vector<std::optional<FacetExtension>> extensions);

  const SimplicialComplex& base() const { return base_; }
  const std::vector<std::optional<FacetExtension>>& extensions() const { return extensions_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_base_vertices() const { return base_.num_vertices(); }
  bool is_point(VertexId v) const { return v >= base_.num_vertices(); }
  const std::string& name(VertexId v) const { return variables_.at(v); }
  std::optional<VertexId> find(const std::string& name) const;

  /// dim of the base complex.
  int dimension() const { return base_.dimension(); }
  /// Facet l together with its points, sorted.
  Facet extended_facet(std::size_t l) const;
  std::vector<Facet> extended_facets() const;
  SimplicialComplex extended_complex() const;
  /// Scroll matrix of facet l, or nullopt when the facet carries no point.
  std::optional<ScrollMatrix> matrix(std::size_t l) const;

 private:
  SimplicialComplex base_;
  std::vector<std::string> variables_;
  std::vector<std::optional<FacetExtension>> extensions_;
};

/// Specs refer to facets of `base` by index. An edge with no points is allowed
/// and leaves that edge unchanged.
ExtensionComplex build_extension_complex(const SimplicialComplex& base, const std::vector<ExtensionSpec>& specs);

/// Throws EmptyExtension when the extension carries no point.
ScrollMatrix scroll_matrix(const FacetExtension& ext);

/// All 2x2 minors top_i*bottom_j - top_j*bottom_i over column pairs i < j.
std::vector<poly::IntegerPolynomial> scroll_minors(const ScrollMatrix& m, std::size_t num_variables);

/// Per facet: its minors plus every variable outside the extended facet.
std::vector<poly::IdealPresentation> component_ideals(const ExtensionComplex& ext);

/// All scroll minors (facet order) followed by the minimal non-faces of the
/// extended complex.
poly::IdealPresentation binomial_extension_ideal(const ExtensionComplex& ext);

/// Base vertices plus the heads of blocks 1.. of every matrix. Edges are those
/// of the base skeleton minus every origin-target edge of a block >= 1, plus
/// origin-head and (target of block 1)-head for every block >= 1.
Graph reduced_graph(const ExtensionComplex& ext);

/// Reduced-graph edges that are also base skeleton edges.
Graph reduced_base_graph(const ExtensionComplex& ext);

}  // namespace binext
