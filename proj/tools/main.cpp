#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "binext/cli/run.hpp"
#include "binext/poly/order.hpp"

using namespace binext;

int main(int argc, char** argv) {
  CLI::App app{"Binomial extensions of simplicial ideals: ideals, decompositions, colorations, reduction numbers"};
  std::string command, input, out, field, order;
  std::optional<unsigned> rho_max;
  std::optional<std::uint64_t> seed;
  bool oracle = false;
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(cli::command_names()));
  app.add_option("--input", input, "Input document (JSON)")->required();
  app.add_option("--out", out, "Write the JSON report here instead of stdout");
  app.add_option("--field", field, "Coefficient field: an odd prime or \"rational\"");
  app.add_option("--order", order, "Monomial order: lex, deglex or degrevlex");
  app.add_option("--rho-max", rho_max, "Largest reduction number tried")->check(CLI::Range(1u, 64u));
  app.add_option("--seed", seed, "Seed for the randomized oracle probe");
  app.add_flag("--oracle", oracle, "Cross-check every fast path against the Groebner engine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kInputError;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    auto doc = cli::parse_input(input);
    if (!field.empty()) doc.field = poly::FieldSpec::parse(field);
    if (!order.empty()) {
      if (!poly::parse_order_kind(order)) throw Error(ErrorCode::SchemaError, "--order: unknown order '" + order + "'");
      doc.order = order;
    }
    if (rho_max) doc.rho_max = *rho_max;
    if (seed) doc.seed = *seed;

    auto report = cli::run(command, doc, oracle);
    const std::string text = cli::render(report);
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(out);
      if (!file) throw Error(ErrorCode::SchemaError, "cannot write " + out);
      file << text;
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    std::cerr << command << ": " << (report.verdict ? "ok" : "FAILED") << " (" << report.summary << ") in "
              << static_cast<long long>(ms) << " ms\n";
    return report.verdict ? cli::kSuccess : cli::kVerificationFailed;
  } catch (const Error& e) {
    std::cerr << command << ": error: " << e.what() << "\n";
    return cli::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << command << ": internal error: " << e.what() << "\n";
    return cli::kInternalError;
  }
}
