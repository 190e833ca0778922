#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iflin/grid.hpp"
#include "iflin/io.hpp"

namespace iflin::cli {

enum class Command {
  kSolve,
  kSolveLeft,
  kVerify,
  kCompose,
  kIndep,
  kSpan,
  kBasisCheck,
  kLtmat,
  kGinvCheck,
  kGinvFind,
  kLaws,
  kAxioms,
};

/// How a system matrix is read by `solve` and `verify`: `kStandard` solves
/// A x = b; `kRowLiteral` solves A^T x = b, i.e. x_j aggregates over row j.
enum class Orientation { kStandard, kRowLiteral };

struct RunConfig {
  Command command = Command::kSolve;
  std::vector<std::string> inputs;  // empty: read standard input
  std::optional<std::string> output;
  std::uint64_t budget = kDefaultBudget;
  Orientation orientation = Orientation::kStandard;
  bool timestamp = true;
  bool exhaustive = false;  // ginv-find: brute-force search instead of construction
};

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // computed, and the answer is "no"
  kExitInput = 2,     // could not compute: bad input
  kExitBudget = 3,    // could not compute: search too large
};

struct Outcome {
  int exit_code = kExitOk;
  io::Json report;
};

std::string_view command_name(Command c);
std::optional<Command> command_from_name(std::string_view name);
const std::vector<Command>& all_commands();

/// Runs one command and builds its report document
/// {"command", "inputs", "result", "diagnostics"[, "timestamp"]}.
/// Never throws for domain or input errors; they land in the report and the
/// exit code.
Outcome execute(const RunConfig& config);

/// execute() plus writing the report to config.output or `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace iflin::cli
