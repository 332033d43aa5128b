#include "binext/extension.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "binext/error.hpp"

namespace binext {

using poly::IntegerPolynomial;
using poly::Monomial;

std::size_t ScrollMatrix::num_columns() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.run.size() - 1;
  return n;
}

std::vector<std::pair<VertexId, VertexId>> ScrollMatrix::columns() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& b : blocks) {
    for (std::size_t k = 0; k + 1 < b.run.size(); ++k) out.emplace_back(b.run[k], b.run[k + 1]);
  }
  return out;
}

std::vector<VertexId> ScrollMatrix::variables() const {
  std::vector<VertexId> out;
  for (const auto& b : blocks) out.insert(out.end(), b.run.begin(), b.run.end());
  return out;
}

bool FacetExtension::has_points() const {
  return std::any_of(points.begin(), points.end(), [](const auto& p) { return !p.empty(); });
}

std::vector<VertexId> FacetExtension::all_points() const {
  std::vector<VertexId> out;
  for (const auto& p : points) out.insert(out.end(), p.begin(), p.end());
  return out;
}

ExtensionComplex::ExtensionComplex(SimplicialComplex base, std::vector<std::string> point_names,
                                   std::vector<std::optional<FacetExtension>> extensions)
    : base_(std::move(base)), variables_(base_.names()), extensions_(std::move(extensions)) {
  variables_.insert(variables_.end(), point_names.begin(), point_names.end());
  extensions_.resize(base_.facets().size());
}

std::optional<VertexId> ExtensionComplex::find(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<VertexId>(it - variables_.begin());
}

Facet ExtensionComplex::extended_facet(std::size_t l) const {
  Facet f = base_.facets().at(l);
  if (extensions_[l]) {
    auto pts = extensions_[l]->all_points();
    f.insert(f.end(), pts.begin(), pts.end());
  }
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<Facet> ExtensionComplex::extended_facets() const {
  std::vector<Facet> out;
  for (std::size_t l = 0; l < base_.facets().size(); ++l) out.push_back(extended_facet(l));
  return out;
}

SimplicialComplex ExtensionComplex::extended_complex() const {
  std::vector<Vertex> vs;
  for (VertexId v = 0; v < variables_.size(); ++v) vs.push_back({v, variables_[v]});
  return SimplicialComplex(std::move(vs), extended_facets());
}

std::optional<ScrollMatrix> ExtensionComplex::matrix(std::size_t l) const {
  const auto& e = extensions_.at(l);
  if (!e || !e->has_points()) return std::nullopt;
  return scroll_matrix(*e);
}

ExtensionComplex build_extension_complex(const SimplicialComplex& base, const std::vector<ExtensionSpec>& specs) {
  const auto& facets = base.facets();
  std::vector<std::optional<FacetExtension>> exts(facets.size());
  std::vector<std::string> point_names;
  std::unordered_set<std::string> taken;
  for (const auto& v : base.vertices()) taken.insert(v.name);

  auto resolve = [&](const std::string& name, const char* role) {
    auto id = base.find(name);
    if (!id) throw Error(ErrorCode::UnknownName, std::string(role) + " '" + name + "' is not a vertex");
    return *id;
  };

  // Points get ids in facet order regardless of spec order.
  std::vector<const ExtensionSpec*> by_facet(facets.size(), nullptr);
  for (const auto& spec : specs) {
    if (spec.facet >= facets.size()) {
      throw Error(ErrorCode::NotAProperEdge, "extension names facet " + std::to_string(spec.facet) + " which does not exist");
    }
    if (by_facet[spec.facet]) {
      throw Error(ErrorCode::DuplicateExtension, "facet " + std::to_string(spec.facet) + " is extended twice");
    }
    by_facet[spec.facet] = &spec;
  }

  for (std::size_t l = 0; l < facets.size(); ++l) {
    const ExtensionSpec* spec = by_facet[l];
    if (!spec) continue;
    const auto& facet = facets[l];
    FacetExtension ext;
    ext.facet = l;
    ext.origin = resolve(spec->origin, "origin");
    if (!std::binary_search(facet.begin(), facet.end(), ext.origin)) {
      throw Error(ErrorCode::OriginMismatch, "origin '" + spec->origin + "' is not in facet " + std::to_string(l));
    }
    for (const auto& edge : spec->edges) {
      VertexId t = resolve(edge.target, "target");
      if (std::find(ext.targets.begin(), ext.targets.end(), t) != ext.targets.end()) {
        throw Error(ErrorCode::DuplicateExtension, "edge " + spec->origin + "-" + edge.target + " is extended twice");
      }
      if (!is_proper_edge(base, l, ext.origin, t)) {
        throw Error(ErrorCode::NotAProperEdge,
                    "edge " + spec->origin + "-" + edge.target + " is not a proper edge of facet " + std::to_string(l));
      }
      std::vector<VertexId> pts;
      for (const auto& p : edge.points) {
        if (!taken.insert(p).second) throw Error(ErrorCode::DuplicatePointName, "point name '" + p + "' is already used");
        pts.push_back(base.num_vertices() + point_names.size());
        point_names.push_back(p);
      }
      ext.targets.push_back(t);
      ext.points.push_back(std::move(pts));
    }
    exts[l] = std::move(ext);
  }
  return ExtensionComplex(base, std::move(point_names), std::move(exts));
}

ScrollMatrix scroll_matrix(const FacetExtension& ext) {
  if (!ext.has_points() || ext.targets.empty()) {
    throw Error(ErrorCode::EmptyExtension, "facet " + std::to_string(ext.facet) + " carries no points");
  }
  ScrollMatrix m;
  m.facet = ext.facet;
  ScrollBlock first;
  first.run.push_back(ext.origin);
  first.run.insert(first.run.end(), ext.points[0].begin(), ext.points[0].end());
  first.run.push_back(ext.targets[0]);
  m.blocks.push_back(std::move(first));
  for (std::size_t j = 1; j < ext.targets.size(); ++j) {
    if (ext.points[j].empty()) continue;
    ScrollBlock b;
    b.run = ext.points[j];
    b.run.push_back(ext.targets[j]);
    m.blocks.push_back(std::move(b));
  }
  return m;
}

std::vector<IntegerPolynomial> scroll_minors(const ScrollMatrix& m, std::size_t num_variables) {
  auto cols = m.columns();
  std::vector<IntegerPolynomial> out;
  auto product = [&](VertexId u, VertexId v) {
    Monomial mono(num_variables);
    mono.set(u, static_cast<Monomial::Exponent>(mono[u] + 1));
    mono.set(v, static_cast<Monomial::Exponent>(mono[v] + 1));
    return mono;
  };
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      out.push_back(IntegerPolynomial::binomial(product(cols[i].first, cols[j].second),
                                                product(cols[j].first, cols[i].second)));
    }
  }
  return out;
}

std::vector<poly::IdealPresentation> component_ideals(const ExtensionComplex& ext) {
  std::vector<poly::IdealPresentation> out;
  const std::size_t n = ext.num_variables();
  for (std::size_t l = 0; l < ext.base().facets().size(); ++l) {
    poly::IdealPresentation j{ext.variables(), {}};
    if (auto m = ext.matrix(l)) j.generators = scroll_minors(*m, n);
    auto inside = ext.extended_facet(l);
    for (VertexId v = 0; v < n; ++v) {
      if (!std::binary_search(inside.begin(), inside.end(), v)) {
        j.generators.push_back(IntegerPolynomial::monomial(Monomial::variable(n, v)));
      }
    }
    out.push_back(std::move(j));
  }
  return out;
}

poly::IdealPresentation binomial_extension_ideal(const ExtensionComplex& ext) {
  poly::IdealPresentation b{ext.variables(), {}};
  const std::size_t n = ext.num_variables();
  for (std::size_t l = 0; l < ext.base().facets().size(); ++l) {
    if (auto m = ext.matrix(l)) {
      auto minors = scroll_minors(*m, n);
      b.generators.insert(b.generators.end(), minors.begin(), minors.end());
    }
  }
  for (const auto& face : stanley_reisner_generators(ext.extended_complex())) {
    Monomial mono(n);
    for (auto v : face) mono.set(v, 1);
    b.generators.push_back(IntegerPolynomial::monomial(mono));
  }
  return b;
}

Graph reduced_graph(const ExtensionComplex& ext) {
  Graph g = skeleton_graph(ext.base());
  std::vector<std::pair<VertexId, VertexId>> added;
  for (std::size_t l = 0; l < ext.base().facets().size(); ++l) {
    auto m = ext.matrix(l);
    if (!m) continue;
    for (std::size_t j = 1; j < m->blocks.size(); ++j) {
      g.remove_edge(m->origin(), m->target(j));
      g.add_vertex(m->head(j));
      added.emplace_back(m->origin(), m->head(j));
      added.emplace_back(m->target(1), m->head(j));
    }
  }
  for (const auto& [u, v] : added) g.add_edge(u, v);
  return g;
}

Graph reduced_base_graph(const ExtensionComplex& ext) {
  Graph reduced = reduced_graph(ext);
  Graph base = skeleton_graph(ext.base());
  Graph out(reduced.vertices());
  for (const auto& [u, v] : reduced.edges()) {
    if (base.has_edge(u, v)) out.add_edge(u, v);
  }
  return out;
}

}  // namespace binext
