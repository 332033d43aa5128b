#include "binext/cli/document.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "binext/error.hpp"
#include "binext/poly/order.hpp"

namespace binext::cli {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& message) {
  throw Error(ErrorCode::SchemaError, (pointer.empty() ? std::string("/") : pointer) + ": " + message);
}

void only_keys(const json& object, const std::string& pointer, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : object.items()) {
    if (!allowed.count(key)) schema_error(pointer + "/" + key, "unknown key");
  }
}

const json& require_object(const json& value, const std::string& pointer) {
  if (!value.is_object()) schema_error(pointer, "expected an object");
  return value;
}

std::string as_name(const json& value, const std::string& pointer) {
  if (!value.is_string()) schema_error(pointer, "expected a name string");
  auto name = value.get<std::string>();
  if (name.empty()) schema_error(pointer, "empty name");
  return name;
}

std::vector<std::string> as_names(const json& value, const std::string& pointer) {
  if (!value.is_array()) schema_error(pointer, "expected an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(as_name(value[i], pointer + "/" + std::to_string(i)));
  return out;
}

std::vector<std::vector<std::string>> as_name_lists(const json& value, const std::string& pointer) {
  if (!value.is_array()) schema_error(pointer, "expected an array of name arrays");
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(as_names(value[i], pointer + "/" + std::to_string(i)));
  return out;
}

std::uint64_t as_unsigned(const json& value, const std::string& pointer, std::uint64_t max) {
  const bool negative = value.is_number_integer() && !value.is_number_unsigned() && value.get<std::int64_t>() < 0;
  if (!value.is_number_integer() || negative) {
    schema_error(pointer, "expected a non-negative integer");
  }
  auto v = value.get<std::uint64_t>();
  if (v > max) schema_error(pointer, "value out of range");
  return v;
}

poly::FieldSpec as_field(const json& value) {
  std::string text;
  if (value.is_number_integer()) {
    text = std::to_string(as_unsigned(value, "/field", std::numeric_limits<std::uint32_t>::max()));
  } else if (value.is_string()) {
    text = value.get<std::string>();
  } else {
    schema_error("/field", "expected a prime or \"rational\"");
  }
  try {
    return poly::FieldSpec::parse(text);
  } catch (const Error& e) {
    schema_error("/field", e.what());
  }
}

ExtensionSpec as_extension(const json& value, const std::string& pointer, std::size_t num_facets) {
  require_object(value, pointer);
  only_keys(value, pointer, {"facet", "origin", "edges"});
  for (const char* key : {"facet", "origin", "edges"}) {
    if (!value.contains(key)) schema_error(pointer + "/" + key, "missing key");
  }
  ExtensionSpec spec;
  spec.facet = as_unsigned(value["facet"], pointer + "/facet", std::numeric_limits<std::size_t>::max());
  if (spec.facet >= num_facets) {
    schema_error(pointer + "/facet", "facet index " + std::to_string(spec.facet) + " out of range for " +
                                         std::to_string(num_facets) + " facets");
  }
  spec.origin = as_name(value["origin"], pointer + "/origin");
  const auto& edges = value["edges"];
  if (!edges.is_array()) schema_error(pointer + "/edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = pointer + "/edges/" + std::to_string(i);
    require_object(edges[i], at);
    only_keys(edges[i], at, {"target", "points"});
    if (!edges[i].contains("target")) schema_error(at + "/target", "missing key");
    EdgeSpec edge;
    edge.target = as_name(edges[i]["target"], at + "/target");
    if (edges[i].contains("points")) edge.points = as_names(edges[i]["points"], at + "/points");
    spec.edges.push_back(std::move(edge));
  }
  return spec;
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

bool operator==(const InputDocument& a, const InputDocument& b) {
  return a.vertices == b.vertices && a.facets == b.facets && a.extensions == b.extensions &&
         a.field.prime == b.field.prime && a.order == b.order && a.rho_max == b.rho_max && a.seed == b.seed &&
         a.classes == b.classes && a.note == b.note;
}

InputDocument document_from_json(const json& value) {
  require_object(value, "");
  only_keys(value, "", {"vertices", "facets", "extensions", "field", "order", "options", "note"});
  InputDocument doc;
  if (!value.contains("facets")) schema_error("/facets", "missing key");
  doc.facets = as_name_lists(value["facets"], "/facets");
  if (value.contains("vertices")) doc.vertices = as_names(value["vertices"], "/vertices");
  if (value.contains("extensions")) {
    const auto& exts = value["extensions"];
    if (!exts.is_array()) schema_error("/extensions", "expected an array");
    for (std::size_t i = 0; i < exts.size(); ++i) {
      doc.extensions.push_back(as_extension(exts[i], "/extensions/" + std::to_string(i), doc.facets.size()));
    }
  }
  if (value.contains("field")) doc.field = as_field(value["field"]);
  if (value.contains("order")) {
    if (!value["order"].is_string()) schema_error("/order", "expected an order name");
    doc.order = value["order"].get<std::string>();
    if (!poly::parse_order_kind(doc.order)) schema_error("/order", "unknown order '" + doc.order + "'");
  }
  if (value.contains("options")) {
    const auto& opts = require_object(value["options"], "/options");
    only_keys(opts, "/options", {"rho_max", "seed", "classes"});
    if (opts.contains("rho_max")) {
      doc.rho_max = static_cast<unsigned>(as_unsigned(opts["rho_max"], "/options/rho_max", 64));
      if (doc.rho_max == 0) schema_error("/options/rho_max", "must be at least 1");
    }
    if (opts.contains("seed")) {
      doc.seed = as_unsigned(opts["seed"], "/options/seed", std::numeric_limits<std::uint64_t>::max());
    }
    if (opts.contains("classes")) doc.classes = as_name_lists(opts["classes"], "/options/classes");
  }
  if (value.contains("note")) {
    if (!value["note"].is_string()) schema_error("/note", "expected a string");
    doc.note = value["note"].get<std::string>();
  }
  return doc;
}

InputDocument parse_document(const std::string& text) {
  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::SchemaError, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                            ": malformed JSON");
  }
  return document_from_json(value);
}

InputDocument parse_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

json to_json(const InputDocument& doc) {
  json out = json::object();
  if (doc.note) out["note"] = *doc.note;
  out["vertices"] = doc.vertices;
  out["facets"] = doc.facets;
  out["extensions"] = json::array();
  for (const auto& spec : doc.extensions) {
    json edges = json::array();
    for (const auto& e : spec.edges) edges.push_back({{"target", e.target}, {"points", e.points}});
    out["extensions"].push_back({{"facet", spec.facet}, {"origin", spec.origin}, {"edges", edges}});
  }
  if (doc.field.prime) {
    out["field"] = *doc.field.prime;
  } else {
    out["field"] = "rational";
  }
  out["order"] = doc.order;
  json options = {{"rho_max", doc.rho_max}, {"seed", doc.seed}};
  if (doc.classes) options["classes"] = *doc.classes;
  out["options"] = options;
  return out;
}

std::string emit_document(const InputDocument& doc) { return to_json(doc).dump(2) + "\n"; }

ExtensionComplex build_from_document(const InputDocument& doc) {
  auto built = build_complex(doc.facets, doc.vertices);
  std::vector<ExtensionSpec> specs;
  for (std::size_t i = 0; i < doc.extensions.size(); ++i) {
    auto spec = doc.extensions[i];
    auto kept = built.facet_of_input.at(spec.facet);
    if (!kept) {
      schema_error("/extensions/" + std::to_string(i) + "/facet",
                   "facet " + std::to_string(spec.facet) + " is contained in another facet");
    }
    spec.facet = *kept;
    specs.push_back(std::move(spec));
  }
  return build_extension_complex(built.complex, specs);
}

}  // namespace binext::cli
