#include "binext/cli/run.hpp"

#include <random>
#include <sstream>

#include "binext/color.hpp"
#include "binext/complex.hpp"
#include "binext/poly/groebner.hpp"
#include "binext/poly/hilbert.hpp"
#include "binext/poly/ring.hpp"
#include "binext/reduce.hpp"

namespace binext::cli {

using nlohmann::json;
using poly::IntegerPolynomial;
using poly::Monomial;

namespace {

template <class Fn>
auto in_ring(const InputDocument& doc, const ExtensionComplex& ext, Fn&& fn) {
  const auto kind = poly::parse_order_kind(doc.order);
  if (!kind) throw Error(ErrorCode::SchemaError, "/order: unknown order '" + doc.order + "'");
  return poly::with_field(doc.field, [&](auto field) {
    poly::PolynomialRing<decltype(field)> ring(field, ext.variables(), poly::MonomialOrder(*kind, ext.num_variables()));
    return fn(ring);
  });
}

template <class Ring>
std::vector<typename Ring::Poly> lift(const Ring& ring, const std::vector<IntegerPolynomial>& polys) {
  std::vector<typename Ring::Poly> out;
  for (const auto& f : polys) out.push_back(ring.from_integer(f));
  return out;
}

json names_of(const ExtensionComplex& ext, const std::vector<VertexId>& ids) {
  json out = json::array();
  for (auto v : ids) out.push_back(ext.name(v));
  return out;
}

json strings_of(const std::vector<IntegerPolynomial>& polys, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string(names));
  return out;
}

Monomial face_monomial(std::size_t n, const std::vector<VertexId>& face) {
  Monomial m(n);
  for (auto v : face) m.set(v, static_cast<Monomial::Exponent>(m[v] + 1));
  return m;
}

std::optional<Coloration> given_coloration(const ExtensionComplex& ext, const InputDocument& doc) {
  if (!doc.classes) return std::nullopt;
  Coloration c;
  c.num_classes = doc.classes->size();
  for (std::size_t k = 0; k < doc.classes->size(); ++k) {
    for (const auto& name : (*doc.classes)[k]) {
      auto v = ext.find(name);
      if (!v) throw Error(ErrorCode::UnknownName, "/options/classes: unknown vertex '" + name + "'");
      c.assignment[*v] = k;
    }
  }
  return c;
}

json coloration_json(const ExtensionComplex& ext, const Coloration& c) {
  json classes = json::array();
  for (const auto& cls : c.classes()) classes.push_back(names_of(ext, cls));
  return classes;
}

json containment_json(const ExtensionComplex& ext, const ContainmentResult& r) {
  json uncovered = json::array();
  for (const auto& m : r.uncovered) uncovered.push_back(m.to_string(ext.variables()));
  return {{"rho", r.rho},
          {"contained", r.contained},
          {"rank", r.rank},
          {"target_dimension", r.target_dimension},
          {"uncovered", uncovered}};
}

json trace_json(const ExtensionComplex& ext, const RewriteTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"minor", s.minor.to_string(ext.variables())},
                     {"result", {ext.name(s.result.first), ext.name(s.result.second)}}});
  }
  return {{"start", {ext.name(t.start.first), ext.name(t.start.second)}},
          {"final", {ext.name(t.final.first), ext.name(t.final.second)}},
          {"family", t.family},
          {"steps", steps}};
}

json main_theorem_json(const ExtensionComplex& ext, const MainTheoremReport& r) {
  json hypotheses = json::array();
  for (const auto& h : r.hypotheses) {
    json traces = json::array();
    for (const auto& t : h.traces) traces.push_back(trace_json(ext, t));
    hypotheses.push_back({{"facet", h.facet},
                          {"reason", h.reason},
                          {"holds", h.holds},
                          {"failing_heads", names_of(ext, h.failing_heads)},
                          {"traces", traces}});
  }
  json out = {{"coloration_source", r.coloration_source},
              {"classes", r.coloration ? coloration_json(ext, *r.coloration) : json(nullptr)},
              {"vectors", strings_of(r.vectors, ext.variables())},
              {"goodness_extended", r.goodness_extended},
              {"good_on_reduced_base", r.good_on_reduced_base},
              {"hypotheses", hypotheses},
              {"containment", r.containment ? containment_json(ext, *r.containment) : json(nullptr)},
              {"success", r.success},
              {"failure", r.failure.empty() ? json(nullptr) : json(r.failure)},
              {"detail", r.detail}};
  return out;
}

json run_validate(const ExtensionComplex& ext, Report& report) {
  const auto& base = ext.base();
  json facets = json::array();
  for (const auto& f : base.facets()) facets.push_back(base.names(f));
  json matrices = json::array();
  for (std::size_t l = 0; l < base.facets().size(); ++l) {
    auto m = ext.matrix(l);
    if (!m) continue;
    json blocks = json::array();
    for (const auto& b : m->blocks) blocks.push_back(names_of(ext, b.run));
    matrices.push_back({{"facet", l}, {"blocks", blocks}});
  }
  const int d = base.dimension();
  auto dtree = is_generalized_d_tree(skeleton_graph(base), d);
  std::size_t stars = 0;
  for (const auto& per_facet : proper_edge_stars(base)) stars += per_facet.size();
  report.verdict = true;
  report.summary = std::to_string(base.num_vertices()) + " vertices, " + std::to_string(base.facets().size()) +
                   " facets, dimension " + std::to_string(d) + ", " + std::to_string(ext.num_variables()) +
                   " variables";
  return {{"num_vertices", base.num_vertices()},
          {"num_facets", base.facets().size()},
          {"dimension", d},
          {"facets", facets},
          {"variables", ext.variables()},
          {"matrices", matrices},
          {"proper_stars", stars},
          {"generalized_d_tree", {{"d", d}, {"verdict", dtree.verdict}, {"reason", dtree.reason}}}};
}

json run_ideal(const ExtensionComplex& ext, Report& report) {
  auto b = binomial_extension_ideal(ext);
  std::size_t minors = 0;
  for (std::size_t l = 0; l < ext.base().facets().size(); ++l) {
    if (auto m = ext.matrix(l)) minors += scroll_minors(*m, ext.num_variables()).size();
  }
  report.verdict = true;
  report.summary = std::to_string(b.generators.size()) + " generators (" + std::to_string(minors) + " minors)";
  return {{"variables", b.variables},
          {"minors", minors},
          {"monomials", b.generators.size() - minors},
          {"polynomials", b.generator_strings()}};
}

json run_decompose(const ExtensionComplex& ext, const InputDocument& doc, Report& report) {
  auto b = binomial_extension_ideal(ext);
  auto comps = component_ideals(ext);
  return in_ring(doc, ext, [&](const auto& ring) {
    const std::size_t n = ext.num_variables();
    auto gb_b = poly::buchberger(ring, lift(ring, b.generators));
    json ideals = json::array();
    bool dimensions_ok = true;
    std::vector<std::vector<typename std::decay_t<decltype(ring)>::Poly>> parts;
    for (std::size_t l = 0; l < comps.size(); ++l) {
      auto polys = lift(ring, comps[l].generators);
      const int dim = poly::hilbert_data(poly::buchberger(ring, polys), n).dimension;
      const int expected = static_cast<int>(ext.base().facets()[l].size());
      dimensions_ok = dimensions_ok && dim == expected;
      ideals.push_back({{"facet", l},
                        {"generators", comps[l].generator_strings()},
                        {"dimension", dim},
                        {"expected_dimension", expected}});
      parts.push_back(std::move(polys));
    }
    const bool equal = poly::same_basis(ring, gb_b, poly::ideal_intersection(ring, parts));
    report.verdict = equal && dimensions_ok;
    report.summary = std::to_string(comps.size()) + " components, intersection " +
                     (equal ? "equals" : "differs from") + " B";
    return json{{"ideals", ideals}, {"equal_to_intersection", equal}, {"dimensions_match", dimensions_ok}};
  });
}

json run_hilbert(const ExtensionComplex& ext, const InputDocument& doc, Report& report) {
  auto b = binomial_extension_ideal(ext);
  return in_ring(doc, ext, [&](const auto& ring) {
    auto gb = poly::buchberger(ring, lift(ring, b.generators));
    auto hd = poly::hilbert_data(gb, ext.num_variables());
    const int expected = 1 + ext.dimension();
    report.verdict = hd.dimension == expected;
    report.summary = "dim " + std::to_string(hd.dimension) + ", codim " + std::to_string(hd.codimension) +
                     ", degree " + std::to_string(hd.degree);
    return json{{"dimension", hd.dimension},
                {"codimension", hd.codimension},
                {"degree", hd.degree},
                {"expected_dimension", expected},
                {"numerator", hd.numerator},
                {"reduced_numerator", hd.reduced_numerator}};
  });
}

json run_color(const ExtensionComplex& ext, const InputDocument& doc, Report& report) {
  std::optional<Coloration> c = given_coloration(ext, doc);
  std::string source = "given";
  SearchStats stats;
  if (!c) {
    if (dtree_applicable(ext)) {
      source = "dtree";
      c = dtree_coloration(ext);
    } else {
      source = "search";
      c = search_binomial_coloration(ext, &stats);
    }
  }
  json search = {{"nodes", stats.nodes}, {"limit_reached", stats.limit_reached}};
  if (!c) {
    report.verdict = false;
    report.summary = "no binomial coloration found";
    return {{"source", source}, {"classes", nullptr}, {"search", search}};
  }
  auto check = is_binomial_coloration(ext, *c);
  json violations = json::array();
  for (const auto& v : check.violations) {
    violations.push_back({{"facet", v.facet}, {"condition", v.condition}, {"vertex", ext.name(v.vertex)},
                          {"message", v.message}});
  }
  const bool good = is_good_coloration(reduced_base_graph(ext), *c);
  report.verdict = check.ok && good;
  report.summary = std::to_string(c->classes().size()) + " classes from " + source +
                   (report.verdict ? "" : ", rejected by the checks");
  return {{"source", source},
          {"classes", coloration_json(ext, *c)},
          {"vectors", strings_of(reduction_vectors(*c, ext.num_variables()), ext.variables())},
          {"binomial", check.ok},
          {"violations", violations},
          {"good_on_reduced_base", good},
          {"search", search}};
}

json run_reduce(const ExtensionComplex& ext, const InputDocument& doc, Report& report) {
  auto theorem = verify_main_theorem(ext, doc.field, given_coloration(ext, doc));
  json out = {{"main_theorem", main_theorem_json(ext, theorem)}};
  out["reduction_number"] = nullptr;
  if (!theorem.coloration) {
    report.verdict = false;
    report.summary = "no coloration, reduction number not certified";
    return out;
  }
  auto b = binomial_extension_ideal(ext);
  try {
    auto r = reduction_number(theorem.vectors, b, doc.rho_max, doc.field);
    json verdicts = json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(containment_json(ext, v));
    out["is_sop"] = true;
    out["verdicts"] = verdicts;
    out["bound_exceeded"] = r.bound_exceeded;
    if (r.reduction_number) out["reduction_number"] = *r.reduction_number;
    report.verdict = r.reduction_number.has_value();
    report.summary = r.reduction_number ? "reduction number " + std::to_string(*r.reduction_number)
                                        : "no reduction number up to " + std::to_string(doc.rho_max);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSOP && e.code() != ErrorCode::WrongCount) throw;
    out["is_sop"] = false;
    out["detail"] = e.what();
    report.verdict = false;
    report.summary = std::string("not a system of parameters: ") + e.what();
  }
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "ideal", "decompose", "hilbert", "color", "reduce", "oracle"};
  return names;
}

json oracle_diffs(const ExtensionComplex& ext, const InputDocument& doc) {
  json diffs = json::array();
  std::size_t checks = 0;
  auto compare = [&](const std::string& check, const json& expected, const json& actual) {
    ++checks;
    if (expected != actual) diffs.push_back({{"check", check}, {"expected", expected}, {"actual", actual}});
  };
  const std::size_t n = ext.num_variables();
  const auto& names = ext.variables();
  auto b = binomial_extension_ideal(ext);
  auto comps = component_ideals(ext);
  auto theorem = verify_main_theorem(ext, doc.field, given_coloration(ext, doc));

  in_ring(doc, ext, [&](const auto& ring) {
    auto gb_b = poly::buchberger(ring, lift(ring, b.generators));
    const auto lts = gb_b.leading_monomials();
    const auto hd = poly::hilbert_data(gb_b, n);
    compare("dimension", 1 + ext.dimension(), hd.dimension);
    compare("krull_dimension_lt", hd.dimension, poly::krull_dimension_lt(gb_b, n));
    for (unsigned t = 0; t <= 3; ++t) {
      std::int64_t standard = 0;
      for (const auto& m : poly::monomials_of_degree(n, t)) {
        if (std::none_of(lts.begin(), lts.end(), [&](const Monomial& g) { return g.divides(m); })) ++standard;
      }
      compare("hilbert_function/" + std::to_string(t), standard, poly::hilbert_function(lts, n, t));
    }

    std::vector<std::vector<typename std::decay_t<decltype(ring)>::Poly>> parts;
    for (std::size_t l = 0; l < comps.size(); ++l) {
      auto polys = lift(ring, comps[l].generators);
      compare("component_dimension/" + std::to_string(l), static_cast<int>(ext.base().facets()[l].size()),
              poly::hilbert_data(poly::buchberger(ring, polys), n).dimension);
      parts.push_back(std::move(polys));
    }
    compare("decomposition", true, poly::same_basis(ring, gb_b, poly::ideal_intersection(ring, parts)));

    // Minimal non-faces of the extended complex lie in B; extended facets do not.
    for (const auto& face : stanley_reisner_generators(ext.extended_complex())) {
      auto m = face_monomial(n, face);
      compare("non_face/" + m.to_string(names), true,
              poly::ideal_membership(ring, ring.monomial(m, ring.field().one()), gb_b));
    }
    const auto facets = ext.extended_facets();
    for (std::size_t l = 0; l < facets.size(); ++l) {
      auto m = face_monomial(n, facets[l]);
      compare("facet/" + std::to_string(l), false,
              poly::ideal_membership(ring, ring.monomial(m, ring.field().one()), gb_b));
    }

    for (std::size_t l = 0; l < ext.base().facets().size(); ++l) {
      auto m = ext.matrix(l);
      if (!m) continue;
      auto gb_minors = poly::buchberger(ring, lift(ring, scroll_minors(*m, n)));
      const auto entries = m->variables();
      for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
          RewriteTrace trace;
          try {
            trace = modB_normal_pair(entries[i], entries[j], *m, n);
          } catch (const Error& e) {
            if (e.code() == ErrorCode::BothXVariables) continue;
            throw;
          }
          auto diff = IntegerPolynomial::binomial(face_monomial(n, {trace.start.first, trace.start.second}),
                                                  face_monomial(n, {trace.final.first, trace.final.second}));
          compare("rewriter/" + std::to_string(l) + "/" + names[entries[i]] + "*" + names[entries[j]], true,
                  poly::normal_form(ring, ring.from_integer(diff), gb_minors).is_zero());
        }
      }
    }

    // Degree-wise rank of (g) + B against the Hilbert function of its Gröbner basis.
    auto containment = [&](const std::string& label, const std::vector<IntegerPolynomial>& g, unsigned rho) {
      auto gens = b.generators;
      gens.insert(gens.end(), g.begin(), g.end());
      auto gb = poly::buchberger(ring, lift(ring, gens));
      const auto standard = poly::hilbert_function(gb.leading_monomials(), n, rho + 1);
      auto r = degree_containment(g, b, rho, doc.field);
      compare(label + "/" + std::to_string(rho), static_cast<std::int64_t>(r.target_dimension) - standard,
              static_cast<std::int64_t>(r.rank));
      return gb;
    };

    if (theorem.coloration) {
      auto gb_g = containment("containment/coloration", theorem.vectors, 1);
      containment("containment/coloration", theorem.vectors, 2);
      for (const auto& h : theorem.hypotheses) {
        if (h.reason != "span") continue;
        auto m = *ext.matrix(h.facet);
        for (std::size_t j = 1; j < m.blocks.size(); ++j) {
          const VertexId head = m.head(j);
          const bool fast = std::find(h.failing_heads.begin(), h.failing_heads.end(), head) == h.failing_heads.end();
          auto prod = face_monomial(n, {m.origin(), head});
          compare("hypothesis_span/" + std::to_string(h.facet) + "/" + names[head],
                  poly::ideal_membership(ring, ring.monomial(prod, ring.field().one()), gb_g), fast);
        }
      }
      if (theorem.success) {
        auto r = reduction_number(theorem.vectors, b, 1, doc.field);
        compare("main_theorem_reduction_number", 1, r.reduction_number ? json(*r.reduction_number) : json(nullptr));
      }
    }

    std::mt19937_64 rng(doc.seed);
    std::uniform_int_distribution<int> coefficient(-1, 2);
    std::vector<IntegerPolynomial> random_forms;
    for (int k = 0; k <= ext.dimension(); ++k) {
      std::vector<poly::IntegerTerm> terms;
      for (std::size_t i = 0; i < n; ++i) {
        if (int c = coefficient(rng); c != 0) terms.push_back({Monomial::variable(n, i), c});
      }
      random_forms.emplace_back(std::move(terms));
    }
    containment("containment/seeded", random_forms, 1);
    return 0;
  });
  return {{"checks", checks}, {"diffs", diffs}};
}

Report run(const std::string& command, const InputDocument& doc, bool with_oracle) {
  if (std::find(command_names().begin(), command_names().end(), command) == command_names().end()) {
    throw Error(ErrorCode::SchemaError, "unknown command '" + command + "'");
  }
  auto ext = build_from_document(doc);
  Report report;
  json& body = report.body;
  body["command"] = command;
  body["input"] = to_json(doc);
  body["field"] = doc.field.to_string();
  body["order"] = doc.order;

  if (command == "validate") {
    body["complex"] = run_validate(ext, report);
  } else if (command == "ideal") {
    body["generators"] = run_ideal(ext, report);
  } else if (command == "decompose") {
    body["components"] = run_decompose(ext, doc, report);
  } else if (command == "hilbert") {
    body["hilbert"] = run_hilbert(ext, doc, report);
  } else if (command == "color") {
    body["coloration"] = run_color(ext, doc, report);
  } else if (command == "reduce") {
    body["reduction"] = run_reduce(ext, doc, report);
  }

  if (command == "oracle" || with_oracle) {
    body["oracle"] = oracle_diffs(ext, doc);
    const auto& diffs = body["oracle"]["diffs"];
    const bool clean = diffs.empty();
    std::string line = std::to_string(diffs.size()) + " diffs in " +
                       std::to_string(body["oracle"]["checks"].get<std::size_t>()) + " oracle checks";
    if (command == "oracle") {
      report.verdict = clean;
      report.summary = line;
    } else {
      report.verdict = report.verdict && clean;
      report.summary += "; " + line;
    }
  }
  body["verdict"] = report.verdict;
  return report;
}

int exit_code_for(const Error& error) {
  return error.code() == ErrorCode::ValidationFailed ? kInternalError : kInputError;
}

std::string render(const Report& report) { return report.body.dump(2) + "\n"; }

}  // namespace binext::cli
