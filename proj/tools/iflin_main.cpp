// Command-line front end: iflin <command> [--input FILE] [options]

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "iflin/cli.hpp"

int main(int argc, char** argv) {
  using namespace iflin::cli;

  CLI::App app{"Intuitionistic fuzzy linear algebra over exact rationals"};
  app.require_subcommand(1);

  RunConfig config;
  std::string orientation = "standard";
  bool no_timestamp = false;
  std::string output;

  for (Command c : all_commands()) {
    auto* sub = app.add_subcommand(std::string(command_name(c)));
    sub->add_option("-i,--input", config.inputs, "Input JSON document (default: stdin)");
    sub->add_option("-o,--output", output, "Write the report here instead of stdout");
    sub->add_option("--budget", config.budget, "Candidate cap for exhaustive searches")
        ->check(CLI::PositiveNumber);
    sub->add_option("--orientation", orientation, "standard | row-literal")
        ->check(CLI::IsMember({"standard", "row-literal"}));
    sub->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp field");
    if (c == Command::kGinvFind)
      sub->add_flag("--exhaustive", config.exhaustive, "Brute-force grid search");
    sub->callback([&config, c] { config.command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  config.timestamp = !no_timestamp;
  config.orientation =
      orientation == "row-literal" ? Orientation::kRowLiteral : Orientation::kStandard;
  if (!output.empty()) config.output = output;
  return run(config, std::cout, std::cerr);
}
