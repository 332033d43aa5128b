#include "binext/reduce.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "binext/error.hpp"
#include "binext/poly/groebner.hpp"
#include "binext/poly/hilbert.hpp"
#include "binext/poly/linear_algebra.hpp"
#include "binext/poly/ring.hpp"

namespace binext {

using poly::IntegerPolynomial;
using poly::Monomial;

namespace {

struct Position {
  std::size_t block;
  std::size_t pos;
};

class MatrixLayout {
 public:
  explicit MatrixLayout(const ScrollMatrix& m) : m_(m) {
    for (std::size_t b = 0; b < m.blocks.size(); ++b) {
      for (std::size_t p = 0; p < m.blocks[b].run.size(); ++p) where_[m.blocks[b].run[p]] = {b, p};
    }
  }

  std::optional<Position> find(VertexId v) const {
    auto it = where_.find(v);
    if (it == where_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t last(std::size_t block) const { return m_.blocks[block].run.size() - 1; }
  VertexId at(Position p) const { return m_.blocks[p.block].run[p.pos]; }

  bool is_origin(Position p) const { return p.block == 0 && p.pos == 0; }
  bool is_target(Position p) const { return p.pos == last(p.block); }
  bool is_point(Position p) const { return !is_origin(p) && !is_target(p); }
  bool is_head(Position p) const { return p.block >= 1 && p.pos == 0; }

  /// top(i) * bottom(j) - top(j) * bottom(i) for columns i < j given as (block, column).
  IntegerPolynomial minor(Position i, Position j, std::size_t n) const {
    auto product = [&](VertexId a, VertexId b) {
      Monomial mono(n);
      mono.set(a, static_cast<Monomial::Exponent>(mono[a] + 1));
      mono.set(b, static_cast<Monomial::Exponent>(mono[b] + 1));
      return mono;
    };
    VertexId ti = at(i), bi = at({i.block, i.pos + 1});
    VertexId tj = at(j), bj = at({j.block, j.pos + 1});
    return IntegerPolynomial::binomial(product(ti, bj), product(tj, bi));
  }

 private:
  const ScrollMatrix& m_;
  std::map<VertexId, Position> where_;
};

int ordered_family(const MatrixLayout& lay, Position a, Position b) {
  if (lay.is_origin(a) && b.block == 0 && lay.is_target(b)) return 1;
  if (lay.is_target(a) && !lay.is_origin(a) && lay.is_point(b) && a.block <= b.block) return 2;
  if (lay.is_head(b) && lay.is_point(a) && a.block <= b.block && (a.block != b.block || a.pos != b.pos)) return 3;
  if (lay.is_origin(a) && lay.is_point(b) && b.block == 0) return 4;
  if (lay.is_origin(a) && lay.is_head(b)) return 5;
  return 0;
}

int family_of(const MatrixLayout& lay, Position a, Position b) {
  int f1 = ordered_family(lay, a, b), f2 = ordered_family(lay, b, a);
  if (f1 == 0) return f2;
  if (f2 == 0) return f1;
  return std::min(f1, f2);
}

}  // namespace

int modB_family(VertexId u, VertexId v, const ScrollMatrix& m) {
  MatrixLayout lay(m);
  auto pu = lay.find(u), pv = lay.find(v);
  if (!pu || !pv || u == v) return 0;
  return family_of(lay, *pu, *pv);
}

RewriteTrace modB_normal_pair(VertexId u, VertexId v, const ScrollMatrix& m, std::size_t num_variables) {
  MatrixLayout lay(m);
  auto pu = lay.find(u), pv = lay.find(v);
  if (!pu || !pv || u == v) throw Error(ErrorCode::NotInMatrix, "both factors must be distinct matrix entries");
  if (!lay.is_point(*pu) && !lay.is_point(*pv)) {
    throw Error(ErrorCode::BothXVariables, "neither factor is a point of the matrix");
  }
  RewriteTrace trace;
  trace.start = {u, v};
  Position a = *pu, b = *pv;
  // Keep a in the earlier block, or earlier in the same block.
  if (a.block > b.block || (a.block == b.block && a.pos > b.pos)) std::swap(a, b);

  const std::size_t entries = m.variables().size();
  const std::size_t max_steps = entries * entries;
  int family = family_of(lay, a, b);
  while (family == 0) {
    if (trace.steps.size() >= max_steps) throw std::logic_error("rewriter exceeded its step bound");
    IntegerPolynomial minor;
    if (a.block == b.block) {
      // r_p r_q = r_{p-1} r_{q+1} via columns p-1 and q.
      if (a.pos == 0 || b.pos == lay.last(b.block)) throw std::logic_error("rewriter stuck inside a block");
      minor = lay.minor({a.block, a.pos - 1}, {b.block, b.pos}, num_variables);
      a.pos -= 1;
      b.pos += 1;
    } else {
      // r_{m,p} r_{n,q} = r_{m,p+1} r_{n,q-1} via columns (m,p) and (n,q-1).
      if (a.pos == lay.last(a.block) || b.pos == 0) throw std::logic_error("rewriter stuck across blocks");
      minor = lay.minor(a, {b.block, b.pos - 1}, num_variables);
      a.pos += 1;
      b.pos -= 1;
    }
    trace.steps.push_back({std::move(minor), {lay.at(a), lay.at(b)}});
    family = family_of(lay, a, b);
  }
  trace.final = {lay.at(a), lay.at(b)};
  trace.family = family;
  return trace;
}

namespace {

/// Span of {g_i m} and {m b} in one total degree, with monomials as columns.
template <class Field>
class DegreeSpan {
 public:
  DegreeSpan(const Field& field, const std::vector<IntegerPolynomial>& g, const poly::IdealPresentation& b,
             unsigned degree)
      : field_(field), echelon_(field) {
    const std::size_t n = b.variables.size();
    monomials_ = poly::monomials_of_degree(n, degree);
    for (std::size_t k = 0; k < monomials_.size(); ++k) column_.emplace(monomials_[k], k);
    auto add = [&](const IntegerPolynomial& f) {
      if (echelon_.rank() == monomials_.size()) return;
      typename poly::SparseEchelon<Field>::Row row;
      for (const auto& t : f.terms()) {
        auto c = field_.from_int(t.coeff);
        if (!field_.is_zero(c)) row.emplace_back(column_.at(t.monomial), c);
      }
      echelon_.insert(std::move(row));
    };
    auto multipliers = [&](unsigned deg) { return poly::monomials_of_degree(n, deg); };
    for (const auto& gi : g) {
      if (gi.is_zero()) continue;
      const unsigned dg = gi.degree();
      if (dg > degree) continue;
      for (const auto& mono : multipliers(degree - dg)) add(gi * mono);
    }
    for (const auto& bi : b.generators) {
      if (bi.is_zero() || !bi.is_homogeneous()) continue;
      const unsigned db = bi.degree();
      if (db > degree) continue;
      for (const auto& mono : multipliers(degree - db)) add(bi * mono);
    }
  }

  std::size_t rank() const { return echelon_.rank(); }
  std::size_t dimension() const { return monomials_.size(); }
  bool contains(const Monomial& m) const { return echelon_.contains_unit(column_.at(m)); }
  const std::vector<Monomial>& monomials() const { return monomials_; }

 private:
  Field field_;
  poly::SparseEchelon<Field> echelon_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, poly::MonomialHash> column_;
};

template <class Field>
ContainmentResult containment_in(const Field& field, const std::vector<IntegerPolynomial>& g,
                                 const poly::IdealPresentation& b, unsigned rho) {
  DegreeSpan<Field> span(field, g, b, rho + 1);
  ContainmentResult out;
  out.rho = rho;
  out.rank = span.rank();
  out.target_dimension = span.dimension();
  out.contained = out.rank == out.target_dimension;
  if (!out.contained) {
    for (const auto& mono : span.monomials()) {
      if (!span.contains(mono)) out.uncovered.push_back(mono);
    }
  }
  return out;
}

}  // namespace

bool verify_sop(const std::vector<IntegerPolynomial>& g, const poly::IdealPresentation& b, const poly::FieldSpec& field) {
  return poly::with_field(field, [&](auto f) {
    poly::PolynomialRing<decltype(f)> ring(f, b.variables);
    const std::size_t n = b.variables.size();
    auto gb = poly::buchberger(ring, b.generators);
    const int dim = poly::hilbert_data(gb, n).dimension;
    if (static_cast<int>(g.size()) != dim) {
      throw Error(ErrorCode::WrongCount, std::to_string(g.size()) + " linear forms for a quotient of dimension " +
                                             std::to_string(dim));
    }
    auto gens = b.generators;
    gens.insert(gens.end(), g.begin(), g.end());
    return poly::hilbert_data(poly::buchberger(ring, gens), n).dimension == 0;
  });
}

ContainmentResult degree_containment(const std::vector<IntegerPolynomial>& g, const poly::IdealPresentation& b,
                                     unsigned rho, const poly::FieldSpec& field) {
  if (rho < 1) throw std::invalid_argument("degree_containment needs rho >= 1");
  return poly::with_field(field, [&](auto f) { return containment_in(f, g, b, rho); });
}

ReductionReport reduction_number(const std::vector<IntegerPolynomial>& g, const poly::IdealPresentation& b,
                                 unsigned rho_max, const poly::FieldSpec& field) {
  ReductionReport report;
  report.vectors = g;
  report.is_sop = verify_sop(g, b, field);
  if (!report.is_sop) throw Error(ErrorCode::NotSOP, "the linear forms are not a system of parameters");
  for (unsigned rho = 1; rho <= rho_max; ++rho) {
    report.verdicts.push_back(degree_containment(g, b, rho, field));
    if (report.verdicts.back().contained) {
      report.reduction_number = rho;
      return report;
    }
  }
  report.bound_exceeded = true;
  return report;
}

MainTheoremReport verify_main_theorem(const ExtensionComplex& ext, const poly::FieldSpec& field,
                                      const std::optional<Coloration>& given) {
  MainTheoremReport report;
  const int d = ext.dimension();
  const std::size_t n = ext.num_variables();
  report.goodness_extended = d < 2;

  if (given) {
    report.coloration_source = "given";
    report.coloration = given;
  } else if (dtree_applicable(ext)) {
    report.coloration_source = "dtree";
    report.coloration = dtree_coloration(ext);
  } else {
    report.coloration_source = "search";
    report.coloration = search_binomial_coloration(ext);
  }
  if (!report.coloration) {
    report.failure = "NoColorationFound";
    report.detail = "no binomial coloration with dim+1 classes passes the checks";
    return report;
  }
  const Coloration& c = *report.coloration;
  report.vectors = reduction_vectors(c, n);
  auto b = binomial_extension_ideal(ext);

  auto binomial = is_binomial_coloration(ext, c);
  report.good_on_reduced_base = is_good_coloration(reduced_base_graph(ext), c);

  poly::with_field(field, [&](auto f) {
    using F = decltype(f);
    std::optional<DegreeSpan<F>> span;
    for (std::size_t l = 0; l < ext.base().facets().size(); ++l) {
      FacetHypothesis h;
      h.facet = l;
      auto m = ext.matrix(l);
      if (!m || m->blocks.size() < 2) {
        h.reason = "no-heads";
        h.holds = true;
        report.hypotheses.push_back(std::move(h));
        continue;
      }
      for (std::size_t j = 1; j < m->blocks.size(); ++j) {
        h.traces.push_back(modB_normal_pair(m->origin(), m->head(j), *m, n));
      }
      bool interior = true;
      for (std::size_t k = 0; k < ext.base().facets().size(); ++k) {
        const auto& other = ext.base().facets()[k];
        if (k != l && std::binary_search(other.begin(), other.end(), m->origin())) interior = false;
      }
      if (interior) {
        h.reason = "origin-interior";
        h.holds = true;
      } else {
        h.reason = "span";
        if (!span) span.emplace(f, report.vectors, b, 2);
        for (std::size_t j = 1; j < m->blocks.size(); ++j) {
          Monomial prod(n);
          prod.set(m->origin(), 1);
          prod.set(m->head(j), 1);
          if (!span->contains(prod)) h.failing_heads.push_back(m->head(j));
        }
        h.holds = h.failing_heads.empty();
      }
      report.hypotheses.push_back(std::move(h));
    }
  });

  report.containment = degree_containment(report.vectors, b, 1, field);

  bool hypotheses = binomial.ok && report.good_on_reduced_base &&
                    std::all_of(report.hypotheses.begin(), report.hypotheses.end(), [](const auto& h) { return h.holds; });
  if (!hypotheses) {
    report.failure = "HypothesisFailed";
    if (!binomial.ok) {
      report.detail = binomial.violations.front().message;
    } else if (!report.good_on_reduced_base) {
      report.detail = "coloration is not good on the reduced base graph";
    } else {
      for (const auto& h : report.hypotheses) {
        if (!h.holds) {
          report.detail = "facet " + std::to_string(h.facet) + ": origin times a block head is not in G m + B";
          break;
        }
      }
    }
  } else if (!report.containment->contained) {
    report.failure = "ContainmentFailed";
    report.detail = std::to_string(report.containment->uncovered.size()) + " degree-2 monomials are not covered";
  }
  report.success = report.failure.empty();
  return report;
}

}  // namespace binext
