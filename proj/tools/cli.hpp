#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "covergame/adversary_search.hpp"
#include "covergame/errors.hpp"
#include "covergame/game.hpp"
#include "covergame/rulesets.hpp"

namespace covergame::cli {

struct UsageError : Error {
  explicit UsageError(const std::string& message)
      : Error("UsageError", message) {}
};

struct UnsupportedFormatError : Error {
  explicit UnsupportedFormatError(const std::string& message)
      : Error("UnsupportedFormat", message) {}
};

struct FileError : Error {
  explicit FileError(const std::string& message) : Error("FileError", message) {}
};

enum class CommandKind {
  Exact,
  Simulate,
  Inequality,
  Adversary,
  Sweep,
  RulesetCheck,
  RulesetSample,
  Play,
  Help,
};

enum class OutputFormat { Default, Json, Csv, Text };

struct Command {
  CommandKind kind = CommandKind::Help;
  OutputFormat format = OutputFormat::Default;

  std::vector<double> points;
  std::string method = "dp";  // enum | dp
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;

  SearchConfig search;  // adversary knobs

  std::vector<double> scales;

  std::string ruleset_file;
  std::string sample_kind;                      // mirror | vertical
  std::vector<std::vector<double>> sample_at;   // one entry per --at

  int play_n = 3;

  std::string help_text;
};

/// Parses the argv tail (program name excluded) into a validated Command.
/// Malformed flags and values raise UsageError; semantic validation of the
/// parsed values (distinctness, finiteness, ...) is left to the modules and
/// surfaces as input errors.
Command parse_args(const std::vector<std::string>& args);

// Rendered results, one per subcommand.

struct ExactReport {
  int n = 0;
  std::vector<double> points;
  double win_probability = 0.0;
  double baseline = 0.0;
  double edge = 0.0;
  std::string method;
};

struct SimulateReport {
  int n = 0;
  std::vector<double> points;
  double win_probability = 0.0;
  double baseline = 0.0;
  double edge = 0.0;
  std::uint64_t trials = 0;
  double standard_error = 0.0;
  std::uint64_t seed = 0;
};

struct InequalityReport {
  int n = 0;
  std::vector<double> points;
  double lhs = 0.0;
  bool holds = false;
};

struct AdversaryReport {
  int n = 0;
  std::vector<double> best_points;
  double best_value = 0.0;
  double baseline = 0.0;
  double edge = 0.0;
  std::uint64_t evaluations = 0;
  std::vector<double> restart_best;
  std::uint64_t seed = 0;
};

struct SweepReport {
  double baseline = 0.0;
  std::vector<SweepRow> rows;
};

struct RulesetCheckReport {
  SolveResult solve;
  std::optional<DominanceReport> dominance;  // engaged iff solvable
};

struct RulesetSampleReport {
  Ruleset ruleset;
};

using CommandOutput =
    std::variant<ExactReport, SimulateReport, InequalityReport,
                 AdversaryReport, SweepReport, RulesetCheckReport,
                 RulesetSampleReport>;

/// Renders a result in the requested format. JSON uses a fixed key order and
/// reals are printed with 12 significant digits, so identical inputs yield
/// byte-identical output. Throws UnsupportedFormatError when the format does
/// not apply to the result kind (csv is for sweep tables only).
void emit_output(const CommandOutput& output, OutputFormat format,
                 std::ostream& out);

/// Executes a parsed command. `in` feeds interactive play, `out` receives
/// results, `err` receives prompts. Throws covergame errors on invalid
/// input; the binary maps them to exit status 1 (2 for UsageError).
void run_command(const Command& cmd, std::istream& in, std::ostream& out,
                 std::ostream& err);

/// %.12g rendering used for every real in CLI output.
std::string format_real(double value);

}  // namespace covergame::cli
