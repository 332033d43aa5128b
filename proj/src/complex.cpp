#include "binext/complex.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "binext/error.hpp"

namespace binext {

SimplicialComplex::SimplicialComplex(std::vector<Vertex> vertices, std::vector<Facet> facets)
    : vertices_(std::move(vertices)), facets_(std::move(facets)) {}

int SimplicialComplex::dimension() const {
  std::size_t best = 0;
  for (const auto& f : facets_) best = std::max(best, f.size());
  return static_cast<int>(best) - 1;
}

std::vector<std::string> SimplicialComplex::names() const {
  std::vector<std::string> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.name);
  return out;
}

std::vector<std::string> SimplicialComplex::names(const Facet& face) const {
  std::vector<std::string> out;
  for (auto v : face) out.push_back(name(v));
  return out;
}

std::optional<VertexId> SimplicialComplex::find(const std::string& name) const {
  for (const auto& v : vertices_) {
    if (v.name == name) return v.id;
  }
  return std::nullopt;
}

bool SimplicialComplex::is_face(const Facet& face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Facet& f) {
    return std::includes(f.begin(), f.end(), face.begin(), face.end());
  });
}

ComplexBuild build_complex(const std::vector<std::vector<std::string>>& raw_facets,
                           const std::vector<std::string>& declared_vertices) {
  if (raw_facets.empty() && declared_vertices.empty()) {
    throw Error(ErrorCode::EmptyFacet, "complex has no facets");
  }
  std::vector<Vertex> vertices;
  std::unordered_map<std::string, VertexId> ids;
  const bool declared = !declared_vertices.empty();
  for (const auto& name : declared_vertices) {
    if (!ids.emplace(name, vertices.size()).second) {
      throw Error(ErrorCode::DuplicatePointName, "vertex '" + name + "' declared twice");
    }
    vertices.push_back({vertices.size(), name});
  }

  std::vector<Facet> raw;
  for (std::size_t k = 0; k < raw_facets.size(); ++k) {
    if (raw_facets[k].empty()) throw Error(ErrorCode::EmptyFacet, "facet " + std::to_string(k) + " is empty");
    Facet f;
    for (const auto& name : raw_facets[k]) {
      auto it = ids.find(name);
      if (it == ids.end()) {
        if (declared) throw Error(ErrorCode::UnknownName, "facet " + std::to_string(k) + " uses undeclared vertex '" + name + "'");
        it = ids.emplace(name, vertices.size()).first;
        vertices.push_back({vertices.size(), name});
      }
      f.push_back(it->second);
    }
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw Error(ErrorCode::DuplicateVertexInFacet, "facet " + std::to_string(k) + " repeats a vertex");
    }
    raw.push_back(std::move(f));
  }

  // A facet is dropped if another strictly contains it, or an earlier one equals it.
  ComplexBuild out;
  std::vector<Facet> kept;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool dropped = false;
    for (std::size_t j = 0; j < raw.size() && !dropped; ++j) {
      if (i == j) continue;
      bool contained = std::includes(raw[j].begin(), raw[j].end(), raw[i].begin(), raw[i].end());
      if (contained && (raw[j].size() > raw[i].size() || j < i)) dropped = true;
    }
    if (dropped) {
      out.facet_of_input.push_back(std::nullopt);
    } else {
      out.facet_of_input.push_back(kept.size());
      kept.push_back(raw[i]);
    }
  }
  std::vector<bool> covered(vertices.size(), false);
  for (const auto& f : kept) {
    for (auto v : f) covered[v] = true;
  }
  for (VertexId v = 0; v < vertices.size(); ++v) {
    if (!covered[v]) kept.push_back(Facet{v});
  }
  out.complex = SimplicialComplex(std::move(vertices), std::move(kept));
  return out;
}

SimplicialComplex validate_complex(const std::vector<std::vector<std::string>>& raw_facets) {
  return build_complex(raw_facets).complex;
}

Graph::Graph(const std::vector<VertexId>& vertices) {
  for (auto v : vertices) add_vertex(v);
}

void Graph::add_vertex(VertexId v) { adjacency_[v]; }

bool Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("graph loops are not allowed");
  bool inserted = adjacency_[u].insert(v).second;
  adjacency_[v].insert(u);
  return inserted;
}

bool Graph::remove_edge(VertexId u, VertexId v) {
  auto it = adjacency_.find(u);
  if (it == adjacency_.end() || it->second.erase(v) == 0) return false;
  adjacency_[v].erase(u);
  return true;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto it = adjacency_.find(u);
  return it != adjacency_.end() && it->second.count(v) != 0;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, _] : adjacency_) out.push_back(v);
  return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& [u, ns] : adjacency_) {
    for (auto v : ns) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& [_, ns] : adjacency_) twice += ns.size();
  return twice / 2;
}

bool Graph::is_connected() const {
  if (adjacency_.empty()) return true;
  std::set<VertexId> seen{adjacency_.begin()->first};
  std::deque<VertexId> queue{adjacency_.begin()->first};
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : adjacency_.at(u)) {
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  return seen.size() == adjacency_.size();
}

Graph Graph::induced(const std::set<VertexId>& keep) const {
  Graph g;
  for (const auto& [u, ns] : adjacency_) {
    if (!keep.count(u)) continue;
    g.add_vertex(u);
    for (auto v : ns) {
      if (keep.count(v)) g.adjacency_[u].insert(v);
    }
  }
  return g;
}

bool Graph::is_clique(const std::set<VertexId>& vs) const {
  for (auto u : vs) {
    for (auto v : vs) {
      if (u < v && !has_edge(u, v)) return false;
    }
  }
  return true;
}

Graph skeleton_graph(const SimplicialComplex& complex) {
  Graph g;
  for (const auto& v : complex.vertices()) g.add_vertex(v.id);
  for (const auto& f : complex.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) g.add_edge(f[i], f[j]);
    }
  }
  return g;
}

namespace {

void bron_kerbosch(const Graph& g, std::set<VertexId>& r, std::set<VertexId> p, std::set<VertexId> x,
                   std::vector<Facet>& out) {
  if (p.empty()) {
    if (x.empty()) out.emplace_back(r.begin(), r.end());
    return;
  }
  // Pivot: vertex of P ∪ X with most neighbours in P.
  VertexId pivot = 0;
  std::size_t best = 0;
  bool have = false;
  for (const auto* s : {&p, &x}) {
    for (auto u : *s) {
      const auto& nu = g.neighbors(u);
      std::size_t c = static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [&](VertexId w) { return nu.count(w) != 0; }));
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    }
  }
  std::vector<VertexId> candidates;
  for (auto v : p) {
    if (!g.neighbors(pivot).count(v)) candidates.push_back(v);
  }
  for (auto v : candidates) {
    const auto& nv = g.neighbors(v);
    std::set<VertexId> p2, x2;
    for (auto w : p) {
      if (nv.count(w)) p2.insert(w);
    }
    for (auto w : x) {
      if (nv.count(w)) x2.insert(w);
    }
    r.insert(v);
    bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
    r.erase(v);
    p.erase(v);
    x.insert(v);
  }
}

std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  for (const auto& c : maximal_cliques(g)) best = std::max(best, c.size());
  return best;
}

}  // namespace

std::vector<Facet> maximal_cliques(const Graph& g) {
  std::vector<Facet> out;
  std::set<VertexId> r;
  auto vs = g.vertices();
  bron_kerbosch(g, r, std::set<VertexId>(vs.begin(), vs.end()), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex clique_complex(const Graph& g, const std::vector<std::string>& names) {
  auto vs = g.vertices();
  if (vs.size() != names.size() || (!vs.empty() && vs.back() != vs.size() - 1)) {
    throw std::invalid_argument("clique_complex needs vertices 0..n-1 matching the name list");
  }
  std::vector<Vertex> vertices;
  for (VertexId v = 0; v < names.size(); ++v) vertices.push_back({v, names[v]});
  return SimplicialComplex(std::move(vertices), maximal_cliques(g));
}

Graph facet_intersection_graph(const SimplicialComplex& complex) {
  const auto& fs = complex.facets();
  Graph g;
  for (std::size_t i = 0; i < fs.size(); ++i) g.add_vertex(i);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      Facet common;
      std::set_intersection(fs[i].begin(), fs[i].end(), fs[j].begin(), fs[j].end(), std::back_inserter(common));
      if (!common.empty()) g.add_edge(i, j);
    }
  }
  return g;
}

std::optional<CliqueTree> clique_tree(const std::vector<Facet>& sets) {
  const std::size_t m = sets.size();
  if (m == 0) return std::nullopt;
  auto weight = [&](std::size_t i, std::size_t j) {
    Facet common;
    std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(), std::back_inserter(common));
    return common.size();
  };
  // Prim, maximizing; ties go to the lowest index.
  std::vector<bool> in_tree(m, false);
  std::vector<std::size_t> best(m, 0);
  std::vector<std::optional<std::size_t>> parent(m);
  in_tree[0] = true;
  for (std::size_t j = 1; j < m; ++j) {
    best[j] = weight(0, j);
    parent[j] = 0;
  }
  for (std::size_t step = 1; step < m; ++step) {
    std::optional<std::size_t> next;
    for (std::size_t j = 0; j < m; ++j) {
      if (!in_tree[j] && best[j] > 0 && (!next || best[j] > best[*next])) next = j;
    }
    if (!next) return std::nullopt;
    in_tree[*next] = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (in_tree[j]) continue;
      auto w = weight(*next, j);
      if (w > best[j]) {
        best[j] = w;
        parent[j] = *next;
      }
    }
  }
  parent[0] = std::nullopt;

  // Running intersection: the sets holding any element span a connected subtree.
  std::map<VertexId, std::vector<std::size_t>> holders;
  for (std::size_t i = 0; i < m; ++i) {
    for (auto v : sets[i]) holders[v].push_back(i);
  }
  for (const auto& [v, hs] : holders) {
    std::set<std::size_t> hset(hs.begin(), hs.end());
    std::size_t edges = 0;
    for (auto i : hs) {
      if (parent[i] && hset.count(*parent[i])) ++edges;
    }
    if (edges + 1 != hs.size()) return std::nullopt;
  }

  CliqueTree tree;
  tree.parent = parent;
  std::vector<std::vector<std::size_t>> children(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (parent[i]) children[*parent[i]].push_back(i);
  }
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    tree.order.push_back(u);
    for (auto c : children[u]) queue.push_back(c);
  }
  return tree;
}

bool clique_tree_criterion(const Graph& g, int d) {
  if (d < 0 || g.num_vertices() == 0 || !g.is_connected()) return false;
  auto cliques = maximal_cliques(g);
  std::size_t omega = 0;
  for (const auto& c : cliques) omega = std::max(omega, c.size());
  return omega == static_cast<std::size_t>(d) + 1 && clique_tree(cliques).has_value();
}

DTreeVerdict is_generalized_d_tree(const Graph& g, int d) {
  DTreeVerdict out;
  auto finish = [&](bool verdict, std::string reason) {
    out.verdict = verdict;
    out.reason = std::move(reason);
    if (out.verdict != clique_tree_criterion(g, d)) {
      throw std::logic_error("generalized d-tree recognition disagrees with the clique-tree criterion");
    }
    return out;
  };
  if (d < 0) return finish(false, "negative d");
  if (g.num_vertices() == 0) return finish(false, "empty graph");
  if (!g.is_connected()) return finish(false, "disconnected");

  const std::size_t target = static_cast<std::size_t>(d) + 1;
  Graph h = g;
  auto vertex_set = [](const Graph& x) {
    auto vs = x.vertices();
    return std::set<VertexId>(vs.begin(), vs.end());
  };
  while (true) {
    auto remaining = vertex_set(h);
    if (remaining.size() == target && h.is_clique(remaining)) return finish(true, "");
    if (remaining.size() <= target) return finish(false, "no complete graph on d+1 vertices remains");
    std::optional<VertexId> chosen;
    for (auto v : remaining) {
      const auto& nv = h.neighbors(v);
      if (nv.empty() || nv.size() > static_cast<std::size_t>(d)) continue;
      if (!h.is_clique(nv)) continue;
      auto rest = remaining;
      rest.erase(v);
      if (clique_number(h.induced(rest)) < target) continue;
      chosen = v;
      break;
    }
    if (!chosen) return finish(false, "no vertex with a clique neighbourhood of size 1..d can be removed");
    out.elimination_order.push_back(*chosen);
    remaining.erase(*chosen);
    h = h.induced(remaining);
  }
}

std::vector<Facet> stanley_reisner_generators(const SimplicialComplex& complex) {
  std::vector<Facet> out;
  const std::size_t n = complex.num_vertices();
  const std::size_t max_size = static_cast<std::size_t>(complex.dimension()) + 2;
  // Faces of the current size s, starting from the empty face.
  std::set<Facet> faces{Facet{}};
  for (std::size_t s = 0; s + 1 <= max_size && !faces.empty(); ++s) {
    std::set<Facet> next_faces;
    for (const auto& face : faces) {
      VertexId start = face.empty() ? 0 : face.back() + 1;
      for (VertexId v = start; v < n; ++v) {
        Facet cand = face;
        cand.push_back(v);
        if (complex.is_face(cand)) {
          next_faces.insert(cand);
          continue;
        }
        bool minimal = true;
        for (std::size_t drop = 0; drop < cand.size() && minimal; ++drop) {
          Facet sub = cand;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
          minimal = faces.count(sub) != 0;
        }
        if (minimal) out.push_back(std::move(cand));
      }
    }
    faces = std::move(next_faces);
  }
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_proper_edge(const SimplicialComplex& complex, std::size_t facet, VertexId u, VertexId v) {
  const auto& fs = complex.facets();
  Facet edge{std::min(u, v), std::max(u, v)};
  if (u == v || facet >= fs.size()) return false;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    bool inside = std::includes(fs[k].begin(), fs[k].end(), edge.begin(), edge.end());
    if ((k == facet) != inside) return false;
  }
  return true;
}

std::vector<std::vector<ProperStar>> proper_edge_stars(const SimplicialComplex& complex) {
  std::vector<std::vector<ProperStar>> out(complex.facets().size());
  for (std::size_t f = 0; f < complex.facets().size(); ++f) {
    const auto& facet = complex.facets()[f];
    for (auto origin : facet) {
      ProperStar star{f, origin, {}};
      for (auto t : facet) {
        if (t != origin && is_proper_edge(complex, f, origin, t)) star.targets.push_back(t);
      }
      if (!star.targets.empty()) out[f].push_back(std::move(star));
    }
  }
  return out;
}

}  // namespace binext
