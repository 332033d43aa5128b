#include <doctest.h>

#include <random>

#include "binext/cli/document.hpp"
#include "binext/cli/run.hpp"
#include "binext/error.hpp"
#include "generators.hpp"

using namespace binext;
using namespace binext::cli;
using nlohmann::json;

namespace {

const std::vector<std::string> kShipped{"greduit", "greduit1", "cycles_pair", "cycles_full_candidate", "cycles_full.template"};

std::string fixture(const std::string& name) { return std::string(BINEXT_FIXTURE_DIR) + "/" + name + ".json"; }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::SchemaError;
}

// Random document over the extension-complex generator, with every optional
// field exercised.
InputDocument random_document(std::mt19937& rng) {
  auto ext = testing::random_extension_complex(rng, 7, 3, 2);
  InputDocument doc;
  const auto& base = ext.base();
  for (VertexId v = 0; v < base.num_vertices(); ++v) doc.vertices.push_back(base.name(v));
  for (const auto& f : base.facets()) doc.facets.push_back(base.names(f));
  for (const auto& slot : ext.extensions()) {
    if (!slot) continue;
    const auto& fe = *slot;
    ExtensionSpec spec{fe.facet, ext.name(fe.origin), {}};
    for (std::size_t j = 0; j < fe.targets.size(); ++j) {
      EdgeSpec edge{ext.name(fe.targets[j]), {}};
      for (auto p : fe.points[j]) edge.points.push_back(ext.name(p));
      spec.edges.push_back(std::move(edge));
    }
    doc.extensions.push_back(std::move(spec));
  }
  if (testing::uniform(rng, 0, 1)) doc.field = poly::FieldSpec::rational();
  doc.order = std::vector<std::string>{"lex", "deglex", "degrevlex"}[testing::uniform(rng, 0, 2)];
  doc.rho_max = static_cast<unsigned>(testing::uniform(rng, 1, 12));
  doc.seed = testing::uniform(rng, 0, 1'000'000);
  if (testing::uniform(rng, 0, 1)) doc.classes = std::vector<std::vector<std::string>>{{doc.vertices.front()}};
  if (testing::uniform(rng, 0, 1)) doc.note = "random";
  return doc;
}

}  // namespace

TEST_CASE("parse_input accepts minimal documents and rejects bad schemas") {
  auto doc = parse_document(R"({"facets": [["a", "b"]]})");
  CHECK(doc.facets.size() == 1);
  CHECK(doc.order == "degrevlex");
  CHECK(doc.field.prime == poly::PrimeField::kDefaultPrime);

  CHECK(code_of([] { parse_document(R"({"facets": [["a"]], "extensions": [{"facet": 1, "origin": "a", "edges": []}]})"); }) ==
        ErrorCode::SchemaError);
  CHECK(code_of([] { parse_document(R"({"facets": [["a"]], "colour": 1})"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_document(R"({"facets": [["a"]], "field": 32004})"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_document(R"({"facets": [["a"]], "order": "revlex"})"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_document(R"({"facets": [["a"]], "options": {"rho_max": -1}})"); }) == ErrorCode::SchemaError);

  try {
    parse_document("{\"facets\": [[\"a\"]],\n  \"order\": }");
    FAIL("expected SchemaError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2, column 12") != std::string::npos);
  }
  try {
    parse_document(R"({"facets": [["a", 3]]})");
    FAIL("expected SchemaError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/facets/0/1") != std::string::npos);
  }

  auto undeclared = parse_document(R"({"vertices": ["a"], "facets": [["a", "b"]]})");
  CHECK(code_of([&] { build_from_document(undeclared); }) == ErrorCode::UnknownName);
  auto bad_origin = parse_document(R"({"facets": [["a", "b"]], "extensions": [{"facet": 0, "origin": "q", "edges": []}]})");
  CHECK(code_of([&] { build_from_document(bad_origin); }) == ErrorCode::UnknownName);
  auto dropped = parse_document(
      R"({"facets": [["a", "b", "c"], ["a", "b"]], "extensions": [{"facet": 1, "origin": "a", "edges": [{"target": "b", "points": ["x"]}]}]})");
  CHECK(code_of([&] { build_from_document(dropped); }) == ErrorCode::SchemaError);
}

TEST_CASE("shipped fixtures parse") {
  auto g = parse_input(fixture("greduit"));
  REQUIRE(g.extensions.size() == 1);
  CHECK(g.extensions[0].edges.size() == 3);
  CHECK(build_from_document(g).num_variables() == 7);

  auto g1 = parse_input(fixture("greduit1"));
  REQUIRE(g1.note);
  CHECK(g1.note->find("Reconstructed") != std::string::npos);
  auto g1_ext = build_from_document(g1);
  CHECK(std::count_if(g1_ext.extensions().begin(), g1_ext.extensions().end(), [](const auto& e) { return e.has_value(); }) == 4);

  auto full = parse_input(fixture("cycles_full.template"));
  CHECK(build_from_document(full).num_variables() == 10);

  CHECK(code_of([] { parse_input(fixture("missing")); }) == ErrorCode::SchemaError);
}

TEST_CASE("documents round-trip through emit and parse") {
  for (const auto& name : kShipped) {
    auto doc = parse_input(fixture(name));
    CHECK(parse_document(emit_document(doc)) == doc);
  }
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto doc = random_document(rng);
    CAPTURE(trial);
    auto text = emit_document(doc);
    CHECK(parse_document(text) == doc);
    CHECK(emit_document(parse_document(text)) == text);
  }
}

TEST_CASE("command results on the one-facet example") {
  auto doc = parse_input(fixture("greduit"));
  auto ideal = run("ideal", doc);
  CHECK(ideal.body["generators"]["polynomials"] ==
        json({"a*b - x^2", "a*c - x*y", "a*d - x*z", "-b*y + c*x", "-b*z + d*x", "-c*z + d*y"}));

  auto decompose = run("decompose", doc);
  CHECK(decompose.verdict);
  CHECK(decompose.body["components"]["ideals"].size() == 1);
  CHECK(decompose.body["components"]["equal_to_intersection"] == true);

  auto hilbert = run("hilbert", doc);
  CHECK(hilbert.body["hilbert"]["dimension"] == 4);
  CHECK(hilbert.body["hilbert"]["codimension"] == 3);
  CHECK(hilbert.body["hilbert"]["degree"] == 4);

  auto reduce = run("reduce", doc);
  CHECK(reduce.verdict);
  CHECK(reduce.body["reduction"]["reduction_number"] == 1);

  CHECK(code_of([&] { run("factor", doc); }) == ErrorCode::SchemaError);
}

TEST_CASE("reports are byte-identical for equal inputs") {
  for (const auto& name : kShipped) {
    auto doc = parse_input(fixture(name));
    for (const auto& command : command_names()) {
      CAPTURE(command);
      CHECK(render(run(command, doc)) == render(run(command, parse_input(fixture(name)))));
    }
  }
}

TEST_CASE("oracle finds no diffs on the shipped fixtures") {
  for (const auto& name : kShipped) {
    CAPTURE(name);
    auto doc = parse_input(fixture(name));
    auto report = run("oracle", doc);
    CHECK(report.verdict);
    CHECK(report.body["oracle"]["diffs"].empty());
    CHECK(report.body["oracle"]["checks"].get<std::size_t>() > 10);

    doc.field = poly::FieldSpec::rational();
    CHECK(run("oracle", doc).verdict);
    doc.order = "lex";
    CHECK(run("hilbert", doc, true).verdict);
  }
}

TEST_CASE("given classes and exit codes") {
  auto doc = parse_input(fixture("cycles_pair"));
  doc.classes = std::vector<std::vector<std::string>>{{"a", "c", "d"}, {"b"}, {"y", "v"}};
  auto report = run("reduce", doc);
  CHECK(report.verdict);
  CHECK(report.body["reduction"]["main_theorem"]["coloration_source"] == "given");

  doc.classes = std::vector<std::vector<std::string>>{{"a", "c", "d"}, {"b", "y", "v"}};
  auto wrong = run("reduce", doc);
  CHECK_FALSE(wrong.verdict);
  CHECK(wrong.body["reduction"]["is_sop"] == false);

  doc.classes = std::vector<std::vector<std::string>>{{"a", "q"}};
  CHECK(code_of([&] { run("reduce", doc); }) == ErrorCode::UnknownName);

  CHECK(exit_code_for(Error(ErrorCode::SchemaError, "")) == kInputError);
  CHECK(exit_code_for(Error(ErrorCode::ValidationFailed, "")) == kInternalError);
}
