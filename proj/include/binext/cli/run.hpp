#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "binext/cli/document.hpp"
#include "binext/error.hpp"

namespace binext::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kInputError = 2, kInternalError = 3 };

/// validate, ideal, decompose, hilbert, color, reduce, oracle.
const std::vector<std::string>& command_names();

struct Report {
  /// Keys: `command`, `input`, `field`, `order`, `verdict`, and per command one
  /// of `complex`, `generators`, `components`, `hilbert`, `coloration`,
  /// `reduction`, `oracle`. Contains no timing, so equal inputs give equal bytes.
  nlohmann::json body;
  bool verdict = false;
  /// One line for the plain-text summary.
  std::string summary;
};

/// Runs one command. With `with_oracle`, the oracle diffs are attached under
/// `oracle` and any diff makes the verdict false. Throws SchemaError for an
/// unknown command.
Report run(const std::string& command, const InputDocument& doc, bool with_oracle = false);

/// Gröbner recomputation of every fast-path result, as a list of diffs
/// {`check`, `expected`, `actual`} plus the number of checks made.
nlohmann::json oracle_diffs(const ExtensionComplex& ext, const InputDocument& doc);

/// 2 for errors caused by the input, 3 for failed internal validations.
int exit_code_for(const Error& error);

std::string render(const Report& report);

}  // namespace binext::cli
