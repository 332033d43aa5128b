#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "binext/extension.hpp"
#include "binext/poly/field.hpp"

namespace binext::cli {

/// One input file. Keys: `vertices`, `facets`, `extensions`, `field`, `order`,
/// `options` {`rho_max`, `seed`, `classes`}, and an optional free-text `note`.
/// Omitted keys take the defaults below and are emitted explicitly.
struct InputDocument {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> facets;
  /// Facet indices refer to `facets` as given, before non-maximal ones are dropped.
  std::vector<ExtensionSpec> extensions;
  poly::FieldSpec field;
  std::string order = "degrevlex";
  unsigned rho_max = 10;
  std::uint64_t seed = 0;
  /// Classes of a coloration to certify instead of computing one.
  std::optional<std::vector<std::vector<std::string>>> classes;
  std::optional<std::string> note;

  friend bool operator==(const InputDocument& a, const InputDocument& b);
};

/// Schema check of an already parsed JSON value. Throws SchemaError naming the
/// offending JSON pointer.
InputDocument document_from_json(const nlohmann::json& value);

/// Throws SchemaError with line and column on malformed JSON.
InputDocument parse_document(const std::string& text);

/// Reads and parses a file; an unreadable path is a SchemaError.
InputDocument parse_input(const std::filesystem::path& path);

nlohmann::json to_json(const InputDocument& doc);
std::string emit_document(const InputDocument& doc);

/// The complex and its extensions with every name resolved. Throws
/// UnknownName, or SchemaError for an extension on a dropped facet.
ExtensionComplex build_from_document(const InputDocument& doc);

}  // namespace binext::cli
