#include "binext/color.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "binext/error.hpp"

namespace binext {

std::optional<std::size_t> Coloration::color(VertexId v) const {
  auto it = assignment.find(v);
  if (it == assignment.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<VertexId>> Coloration::classes() const {
  std::size_t n = num_classes;
  for (const auto& [v, c] : assignment) n = std::max(n, c + 1);
  std::vector<std::vector<VertexId>> out(n);
  for (const auto& [v, c] : assignment) out[c].push_back(v);
  return out;
}

namespace {

class UnionFind {
 public:
  VertexId find(VertexId v) {
    auto it = parent_.find(v);
    if (it == parent_.end()) {
      parent_[v] = v;
      return v;
    }
    if (it->second == v) return v;
    VertexId root = find(it->second);
    parent_[v] = root;
    return root;
  }
  /// Returns false when u and v were already joined.
  bool unite(VertexId u, VertexId v) {
    VertexId a = find(u), b = find(v);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::map<VertexId, VertexId> parent_;
};

void require_colored(const Graph& g, const Coloration& c) {
  for (auto v : g.vertices()) {
    if (!c.color(v)) throw Error(ErrorCode::UncoloredVertex, "vertex " + std::to_string(v) + " has no class");
  }
}

/// Whether the edges of g joining vertices of classes a or b form a forest.
bool two_class_forest(const Graph& g, const Coloration& c, std::size_t a, std::size_t b) {
  UnionFind uf;
  for (const auto& [u, v] : g.edges()) {
    auto cu = c.color(u), cv = c.color(v);
    if (!cu || !cv) continue;
    bool inside = (*cu == a || *cu == b) && (*cv == a || *cv == b);
    if (inside && !uf.unite(u, v)) return false;
  }
  return true;
}

struct Requirement {
  int condition;
  std::vector<VertexId> members;  // sorted
};

/// Colored vertices of facet l: its base vertices and the heads of its blocks >= 1.
std::vector<VertexId> colored_in_facet(const ExtensionComplex& ext, std::size_t l) {
  std::vector<VertexId> out = ext.base().facets()[l];
  if (auto m = ext.matrix(l)) {
    for (std::size_t j = 1; j < m->blocks.size(); ++j) out.push_back(m->head(j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Partition of the colored vertices of facet l into the sets the conditions prescribe.
std::vector<Requirement> facet_requirements(const ExtensionComplex& ext, std::size_t l) {
  std::vector<Requirement> reqs;
  std::set<VertexId> covered;
  auto add = [&](int cond, std::vector<VertexId> members) {
    std::sort(members.begin(), members.end());
    for (auto v : members) covered.insert(v);
    reqs.push_back({cond, std::move(members)});
  };
  auto m = ext.matrix(l);
  if (m && m->blocks.size() >= 2) {
    const std::size_t k = m->blocks.size();
    add(1, {m->origin(), m->target(1)});
    for (std::size_t j = 1; j + 1 < k; ++j) add(2, {m->head(j), m->target(j + 1)});
    add(3, {m->head(k - 1)});
  }
  for (auto v : colored_in_facet(ext, l)) {
    if (!covered.count(v)) add(4, {v});
  }
  return reqs;
}

std::set<VertexId> vertex_set(const Graph& g) {
  auto vs = g.vertices();
  return {vs.begin(), vs.end()};
}

/// Conditions (1)-(4) only, without the domain checks.
void check_facets(const ExtensionComplex& ext, const Coloration& c, BinomialColorationCheck& out) {
  for (std::size_t l = 0; l < ext.base().facets().size(); ++l) {
    auto colored = colored_in_facet(ext, l);
    for (const auto& req : facet_requirements(ext, l)) {
      for (auto x : req.members) {
        auto cx = c.color(x);
        if (!cx) continue;
        std::vector<VertexId> same;
        for (auto y : colored) {
          if (c.color(y) == cx) same.push_back(y);
        }
        if (same != req.members) {
          std::string msg = "facet " + std::to_string(l) + ": the class of " + ext.name(x) + " meets the facet in {";
          for (std::size_t k = 0; k < same.size(); ++k) msg += (k ? "," : "") + ext.name(same[k]);
          msg += "}, expected {";
          for (std::size_t k = 0; k < req.members.size(); ++k) msg += (k ? "," : "") + ext.name(req.members[k]);
          msg += "}";
          out.ok = false;
          out.violations.push_back({l, req.condition, x, std::move(msg)});
        }
      }
    }
  }
}

}  // namespace

bool is_proper_coloration(const Graph& g, const Coloration& c) {
  require_colored(g, c);
  for (const auto& [u, v] : g.edges()) {
    if (c.color(u) == c.color(v)) return false;
  }
  return true;
}

bool is_good_coloration(const Graph& g, const Coloration& c) {
  if (!is_proper_coloration(g, c)) return false;
  const std::size_t n = c.classes().size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!two_class_forest(g, c, a, b)) return false;
    }
  }
  return true;
}

BinomialColorationCheck is_binomial_coloration(const ExtensionComplex& ext, const Coloration& c) {
  BinomialColorationCheck out;
  const auto domain = vertex_set(reduced_graph(ext));
  const std::size_t allowed = static_cast<std::size_t>(ext.dimension()) + 1;
  for (const auto& [v, cls] : c.assignment) {
    if (!domain.count(v)) {
      out.ok = false;
      out.violations.push_back({0, 0, v, ext.name(v) + " is colored but is not a reduced-graph vertex"});
    }
    if (cls >= allowed) {
      out.ok = false;
      out.violations.push_back({0, 0, v, ext.name(v) + " has class " + std::to_string(cls) + " beyond dim+1"});
    }
  }
  for (auto v : domain) {
    if (!c.color(v)) {
      out.ok = false;
      out.violations.push_back({0, 0, v, ext.name(v) + " is left uncolored"});
    }
  }
  check_facets(ext, c, out);
  return out;
}

std::vector<std::vector<VertexId>> forced_groups(const ExtensionComplex& ext) {
  UnionFind uf;
  auto domain = vertex_set(reduced_graph(ext));
  for (auto v : domain) uf.find(v);
  for (std::size_t l = 0; l < ext.base().facets().size(); ++l) {
    for (const auto& req : facet_requirements(ext, l)) {
      for (std::size_t k = 1; k < req.members.size(); ++k) uf.unite(req.members[0], req.members[k]);
    }
  }
  std::map<VertexId, std::vector<VertexId>> by_root;
  for (auto v : domain) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  for (auto& [_, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class ColorSearch {
 public:
  ColorSearch(const ExtensionComplex& ext, std::size_t limit, SearchStats& stats)
      : ext_(ext), limit_(limit), stats_(stats), classes_(static_cast<std::size_t>(ext.dimension()) + 1),
        good_graph_(reduced_base_graph(ext)) {
    groups_ = forced_groups(ext);
    Graph reduced = reduced_graph(ext);
    std::map<VertexId, std::size_t> group_of;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      for (auto v : groups_[g]) group_of[v] = g;
    }
    conflicts_.assign(groups_.size(), {});
    for (std::size_t l = 0; l < ext.base().facets().size(); ++l) {
      auto colored = colored_in_facet(ext, l);
      for (auto u : colored) {
        for (auto v : colored) {
          if (group_of[u] != group_of[v]) conflicts_[group_of[u]].insert(group_of[v]);
        }
      }
    }
    std::vector<std::size_t> degree(groups_.size(), 0);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      for (auto v : groups_[g]) degree[g] += reduced.neighbors(v).size();
    }
    order_.resize(groups_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      if (groups_[a].size() != groups_[b].size()) return groups_[a].size() > groups_[b].size();
      if (degree[a] != degree[b]) return degree[a] > degree[b];
      return groups_[a].front() < groups_[b].front();
    });
    group_color_.assign(groups_.size(), std::nullopt);
    current_.num_classes = classes_;
  }

  std::optional<Coloration> run() {
    // The finest grouping already violates a condition: every coarsening does too.
    Coloration finest;
    finest.num_classes = groups_.size();
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      for (auto v : groups_[g]) finest.assignment[v] = g;
    }
    BinomialColorationCheck pre;
    check_facets(ext_, finest, pre);
    if (!pre.ok) return std::nullopt;
    if (search(0, 0)) return current_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t depth, std::size_t used) {
    if (depth == order_.size()) {
      if (used != classes_) return false;
      return is_binomial_coloration(ext_, current_).ok && is_good_coloration(good_graph_, current_);
    }
    const std::size_t g = order_[depth];
    const std::size_t top = std::min(classes_, used + 1);
    for (std::size_t c = 0; c < top; ++c) {
      if (++stats_.nodes > limit_) {
        stats_.limit_reached = true;
        return false;
      }
      bool clash = std::any_of(conflicts_[g].begin(), conflicts_[g].end(),
                               [&](std::size_t h) { return group_color_[h] == c; });
      if (clash) continue;
      assign(g, c);
      bool ok = keeps_forests(c, std::max(used, c + 1)) && search(depth + 1, std::max(used, c + 1));
      if (ok) return true;
      unassign(g);
      if (stats_.limit_reached) return false;
    }
    return false;
  }

  bool keeps_forests(std::size_t c, std::size_t used) const {
    for (std::size_t other = 0; other < used; ++other) {
      if (other != c && !two_class_forest(good_graph_, current_, c, other)) return false;
    }
    // A monochromatic edge would also break properness.
    for (const auto& [u, v] : good_graph_.edges()) {
      auto cu = current_.color(u), cv = current_.color(v);
      if (cu && cv && *cu == *cv) return false;
    }
    return true;
  }

  void assign(std::size_t g, std::size_t c) {
    group_color_[g] = c;
    for (auto v : groups_[g]) current_.assignment[v] = c;
  }
  void unassign(std::size_t g) {
    group_color_[g] = std::nullopt;
    for (auto v : groups_[g]) current_.assignment.erase(v);
  }

  const ExtensionComplex& ext_;
  std::size_t limit_;
  SearchStats& stats_;
  std::size_t classes_;
  Graph good_graph_;
  std::vector<std::vector<VertexId>> groups_;
  std::vector<std::set<std::size_t>> conflicts_;
  std::vector<std::size_t> order_;
  std::vector<std::optional<std::size_t>> group_color_;
  Coloration current_;
};

}  // namespace

std::optional<Coloration> search_binomial_coloration(const ExtensionComplex& ext, SearchStats* stats,
                                                     std::size_t node_limit) {
  SearchStats local;
  ColorSearch search(ext, node_limit, stats ? *stats : local);
  return search.run();
}

bool dtree_applicable(const ExtensionComplex& ext) {
  const auto& base = ext.base();
  return is_generalized_d_tree(skeleton_graph(base), base.dimension()).verdict &&
         clique_tree(base.facets()).has_value();
}

Coloration dtree_coloration(const ExtensionComplex& ext) {
  if (!dtree_applicable(ext)) {
    throw Error(ErrorCode::NotADTree, "the base skeleton is not a generalized d-tree with a clique tree of facets");
  }
  const std::size_t classes = static_cast<std::size_t>(ext.dimension()) + 1;
  Coloration c;
  c.num_classes = classes;
  auto tree = clique_tree(ext.base().facets());
  for (auto l : tree->order) {
    auto m = ext.matrix(l);
    std::optional<VertexId> origin;
    if (m && m->blocks.size() >= 2) origin = m->origin();

    std::set<std::size_t> taken;
    std::vector<std::vector<VertexId>> free_groups;
    for (const auto& req : facet_requirements(ext, l)) {
      std::set<std::size_t> inherited;
      for (auto v : req.members) {
        if (auto cv = c.color(v)) inherited.insert(*cv);
      }
      if (inherited.size() > 1) {
        throw Error(ErrorCode::ValidationFailed, "facet " + std::to_string(l) + ": a forced group meets two classes");
      }
      if (inherited.empty()) {
        free_groups.push_back(req.members);
        continue;
      }
      const std::size_t cls = *inherited.begin();
      if (!taken.insert(cls).second) {
        throw Error(ErrorCode::ValidationFailed, "facet " + std::to_string(l) + ": two groups inherit one class");
      }
      for (auto v : req.members) c.assignment[v] = cls;
    }
    std::vector<std::size_t> available;
    for (std::size_t k = 0; k < classes; ++k) {
      if (!taken.count(k)) available.push_back(k);
    }
    if (available.size() < free_groups.size()) {
      throw Error(ErrorCode::ValidationFailed, "facet " + std::to_string(l) + ": not enough classes");
    }
    auto is_origin_group = [&](const std::vector<VertexId>& g) {
      return origin && std::find(g.begin(), g.end(), *origin) != g.end();
    };
    std::size_t next = 0;
    for (const auto& g : free_groups) {
      if (is_origin_group(g)) continue;
      for (auto v : g) c.assignment[v] = available[next];
      ++next;
    }
    for (const auto& g : free_groups) {
      if (!is_origin_group(g)) continue;
      for (auto v : g) c.assignment[v] = available.back();
    }
  }
  auto check = is_binomial_coloration(ext, c);
  if (!check.ok) {
    throw Error(ErrorCode::ValidationFailed, "constructed coloration fails: " + check.violations.front().message);
  }
  if (!is_good_coloration(reduced_base_graph(ext), c)) {
    throw Error(ErrorCode::ValidationFailed, "constructed coloration is not good on the reduced base graph");
  }
  return c;
}

std::vector<poly::IntegerPolynomial> reduction_vectors(const Coloration& c, std::size_t num_variables) {
  std::vector<poly::IntegerPolynomial> out;
  auto classes = c.classes();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].empty()) throw Error(ErrorCode::EmptyClass, "class " + std::to_string(k) + " is empty");
    out.push_back(poly::IntegerPolynomial::linear_form(num_variables, classes[k]));
  }
  return out;
}

}  // namespace binext
