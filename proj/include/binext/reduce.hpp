#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binext/color.hpp"
#include "binext/extension.hpp"
#include "binext/poly/field.hpp"
#include "binext/poly/integer_polynomial.hpp"
#include "binext/poly/monomial.hpp"

namespace binext {

using VariablePair = std::pair<VertexId, VertexId>;

struct RewriteStep {
  /// The 2x2 minor used; it equals ±(previous product - result).
  poly::IntegerPolynomial minor;
  VariablePair result;
};

/// Rewriting of a product of two matrix variables modulo the minors of one
/// scroll matrix into a canonical product. With 1-based blocks, origin x_0 and
/// targets x_1..x_k, the families are
///   1: x_0 x_1;  2: x_m p, p in Y_n, m <= n;  3: q y_{n,1}, q in Y_m, m <= n, n >= 2;
///   4: x_0 y_{1,j};  5: x_0 y_{n,1}.
/// A product fitting several families is tagged with the lowest.
struct RewriteTrace {
  VariablePair start;
  std::vector<RewriteStep> steps;
  VariablePair final;
  int family = 0;
};

/// Family of the product uv (1..5), or 0 when it fits none.
int modB_family(VertexId u, VertexId v, const ScrollMatrix& m);

/// Entries of the same block move outward; otherwise the entry of the earlier
/// block moves right and the other moves left, one minor per step, until the
/// product fits a family. Throws NotInMatrix when u or v is not a matrix
/// entry and BothXVariables when neither is a point.
RewriteTrace modB_normal_pair(VertexId u, VertexId v, const ScrollMatrix& m, std::size_t num_variables);

/// Throws WrongCount unless |g| equals the Krull dimension of R/B; then true
/// iff R/(B + g) has dimension 0.
bool verify_sop(const std::vector<poly::IntegerPolynomial>& g, const poly::IdealPresentation& b,
                const poly::FieldSpec& field = {});

struct ContainmentResult {
  unsigned rho = 0;
  bool contained = false;
  std::size_t rank = 0;
  /// Number of monomials of degree rho+1.
  std::size_t target_dimension = 0;
  /// Degree rho+1 monomials outside the span, in decreasing lex order.
  std::vector<poly::Monomial> uncovered;
};

/// Whether every monomial of degree rho+1 lies in the span of
/// {g_i m : deg m = rho} and {m b : b in B, deg(m b) = rho+1}. B must be
/// homogeneous. Requires rho >= 1.
ContainmentResult degree_containment(const std::vector<poly::IntegerPolynomial>& g, const poly::IdealPresentation& b,
                                     unsigned rho, const poly::FieldSpec& field = {});

struct ReductionReport {
  std::vector<poly::IntegerPolynomial> vectors;
  bool is_sop = false;
  std::vector<ContainmentResult> verdicts;
  std::optional<unsigned> reduction_number;
  bool bound_exceeded = false;
};

/// Smallest rho in 1..rho_max with degree_containment true. Throws NotSOP when
/// g is not a system of parameters.
ReductionReport reduction_number(const std::vector<poly::IntegerPolynomial>& g, const poly::IdealPresentation& b,
                                 unsigned rho_max = 10, const poly::FieldSpec& field = {});

struct FacetHypothesis {
  std::size_t facet = 0;
  /// "no-heads" when the facet has fewer than two blocks, "origin-interior"
  /// when the origin lies in no other facet, otherwise "span".
  std::string reason;
  bool holds = false;
  /// For "span": the heads whose product with the origin is not in G m + B.
  std::vector<VertexId> failing_heads;
  /// Rewriter traces of origin * head for every head.
  std::vector<RewriteTrace> traces;
};

struct MainTheoremReport {
  /// "dtree", "search", or "given".
  std::string coloration_source;
  std::optional<Coloration> coloration;
  std::vector<poly::IntegerPolynomial> vectors;
  /// d < 2: goodness is applied in its extended form.
  bool goodness_extended = false;
  bool good_on_reduced_base = false;
  std::vector<FacetHypothesis> hypotheses;
  std::optional<ContainmentResult> containment;
  bool success = false;
  /// "NoColorationFound", "HypothesisFailed" or "ContainmentFailed".
  std::string failure;
  std::string detail;
};

/// Coloration (given, or dtree_coloration when applicable, else search), the
/// hypotheses of the reduction-number-one criterion, and the degree-2 equality
/// G m + B = m^2.
MainTheoremReport verify_main_theorem(const ExtensionComplex& ext, const poly::FieldSpec& field = {},
                                      const std::optional<Coloration>& given = std::nullopt);

}  // namespace binext
