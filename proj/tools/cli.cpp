#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "covergame/evaluator.hpp"
#include "covergame/permutation.hpp"
#include "covergame/rng.hpp"
#include "ruleset_io.hpp"

namespace covergame::cli {
namespace {

std::vector<double> parse_decimal_list(const std::string& text,
                                       const std::string& flag) {
  std::vector<double> values;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = std::min(text.find(',', begin), text.size());
    const std::string token = text.substr(begin, end - begin);
    char* parsed_end = nullptr;
    const double value = std::strtod(token.c_str(), &parsed_end);
    if (token.empty() || parsed_end != token.c_str() + token.size()) {
      throw UsageError(flag + ": '" + token + "' is not a decimal number");
    }
    values.push_back(value);
    begin = end + 1;
  }
  return values;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  return OutputFormat::Default;
}

std::string join_reals(const std::vector<double>& values,
                       const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += separator;
    out += format_real(values[i]);
  }
  return out;
}

std::string json_real_array(const std::vector<double>& values) {
  return "[" + join_reals(values, ", ") + "]";
}

// --- emitters ---------------------------------------------------------

void emit(const ExactReport& r, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      out << "{\"n\": " << r.n << ", \"points\": " << json_real_array(r.points)
          << ", \"win_probability\": " << format_real(r.win_probability)
          << ", \"baseline\": " << format_real(r.baseline)
          << ", \"edge\": " << format_real(r.edge) << ", \"method\": \""
          << r.method << "\"}\n";
      return;
    case OutputFormat::Text:
      out << "n: " << r.n << "\npoints: " << join_reals(r.points, ", ")
          << "\nwin_probability: " << format_real(r.win_probability)
          << "\nbaseline: " << format_real(r.baseline)
          << "\nedge: " << format_real(r.edge) << "\nmethod: " << r.method
          << "\n";
      return;
    default:
      throw UnsupportedFormatError("exact supports json or text");
  }
}

void emit(const SimulateReport& r, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      out << "{\"n\": " << r.n << ", \"points\": " << json_real_array(r.points)
          << ", \"win_probability\": " << format_real(r.win_probability)
          << ", \"baseline\": " << format_real(r.baseline)
          << ", \"edge\": " << format_real(r.edge)
          << ", \"method\": \"mc\", \"trials\": " << r.trials
          << ", \"stderr\": " << format_real(r.standard_error)
          << ", \"seed\": " << r.seed << "}\n";
      return;
    case OutputFormat::Text:
      out << "n: " << r.n << "\npoints: " << join_reals(r.points, ", ")
          << "\nwin_probability: " << format_real(r.win_probability)
          << "\nbaseline: " << format_real(r.baseline)
          << "\nedge: " << format_real(r.edge) << "\nmethod: mc\ntrials: "
          << r.trials << "\nstderr: " << format_real(r.standard_error)
          << "\nseed: " << r.seed << "\n";
      return;
    default:
      throw UnsupportedFormatError("simulate supports json or text");
  }
}

void emit(const InequalityReport& r, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      out << "{\"n\": " << r.n << ", \"points\": " << json_real_array(r.points)
          << ", \"lhs\": " << format_real(r.lhs) << ", \"holds\": "
          << (r.holds ? "true" : "false") << "}\n";
      return;
    case OutputFormat::Text:
      out << "n: " << r.n << "\npoints: " << join_reals(r.points, ", ")
          << "\nlhs: " << format_real(r.lhs) << "\nholds: "
          << (r.holds ? "true" : "false") << "\n";
      return;
    default:
      throw UnsupportedFormatError("inequality supports json or text");
  }
}

void emit(const AdversaryReport& r, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      out << "{\"n\": " << r.n
          << ", \"best_points\": " << json_real_array(r.best_points)
          << ", \"best_value\": " << format_real(r.best_value)
          << ", \"baseline\": " << format_real(r.baseline)
          << ", \"edge\": " << format_real(r.edge)
          << ", \"evaluations\": " << r.evaluations
          << ", \"restart_best\": " << json_real_array(r.restart_best)
          << ", \"seed\": " << r.seed << "}\n";
      return;
    case OutputFormat::Text:
      out << "n: " << r.n << "\nbest_points: " << join_reals(r.best_points, ", ")
          << "\nbest_value: " << format_real(r.best_value)
          << "\nbaseline: " << format_real(r.baseline)
          << "\nedge: " << format_real(r.edge)
          << "\nevaluations: " << r.evaluations
          << "\nrestart_best: " << join_reals(r.restart_best, ", ")
          << "\nseed: " << r.seed << "\n";
      return;
    default:
      throw UnsupportedFormatError("adversary supports json or text");
  }
}

void emit(const SweepReport& r, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Csv:
      out << "scale,win_probability,baseline,edge\n";
      for (const SweepRow& row : r.rows) {
        out << format_real(row.scale) << ',' << format_real(row.win_probability)
            << ',' << format_real(r.baseline) << ',' << format_real(row.edge)
            << '\n';
      }
      return;
    case OutputFormat::Json: {
      out << "[";
      for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const SweepRow& row = r.rows[i];
        if (i > 0) out << ", ";
        out << "{\"scale\": " << format_real(row.scale)
            << ", \"win_probability\": " << format_real(row.win_probability)
            << ", \"baseline\": " << format_real(r.baseline)
            << ", \"edge\": " << format_real(row.edge) << "}";
      }
      out << "]\n";
      return;
    }
    default:
      throw UnsupportedFormatError("sweep supports csv or json");
  }
}

void emit(const RulesetCheckReport& r, OutputFormat format, std::ostream& out) {
  if (format != OutputFormat::Json && format != OutputFormat::Text) {
    throw UnsupportedFormatError("ruleset check supports json or text");
  }
  if (!r.solve.solvable()) {
    if (format == OutputFormat::Json) {
      out << "{\"verdict\": \"unsolvable\", \"witness\": "
          << json_real_array(r.solve.witness_cycle) << "}\n";
    } else {
      out << "verdict: unsolvable\nwitness: "
          << join_reals(r.solve.witness_cycle, " -> ") << "\n";
    }
    return;
  }

  const OrderMap& map = *r.solve.map;
  const DominanceReport& dom = *r.dominance;
  if (format == OutputFormat::Json) {
    out << "{\"verdict\": \"solvable\", \"order_map\": [";
    for (std::size_t i = 0; i < map.assignment.size(); ++i) {
      if (i > 0) out << ", ";
      out << "[" << format_real(map.assignment[i].first) << ", "
          << format_real(map.assignment[i].second) << "]";
    }
    out << "], \"dominant\": " << (dom.dominant ? "true" : "false")
        << ", \"worst_pair\": " << dom.worst_pair
        << ", \"worst_win_prob\": " << format_real(dom.worst_win_prob)
        << "}\n";
  } else {
    out << "verdict: solvable\n";
    for (const auto& [node, value] : map.assignment) {
      out << "f(" << format_real(node) << ") = " << format_real(value) << "\n";
    }
    out << "dominant: " << (dom.dominant ? "true" : "false")
        << "\nworst_pair: " << dom.worst_pair
        << "\nworst_win_prob: " << format_real(dom.worst_win_prob) << "\n";
  }
}

void emit(const RulesetSampleReport& r, OutputFormat format,
          std::ostream& out) {
  if (format != OutputFormat::Json) {
    throw UnsupportedFormatError("ruleset sample emits the json file format");
  }
  out << ruleset_to_json(r.ruleset) << "\n";
}

OutputFormat default_format(const CommandOutput& output) {
  if (std::holds_alternative<SweepReport>(output)) return OutputFormat::Csv;
  return OutputFormat::Json;
}

// --- command execution ------------------------------------------------

CommandOutput execute(const Command& cmd) {
  switch (cmd.kind) {
    case CommandKind::Exact: {
      const AdversaryInput input(cmd.points);
      const double win = cmd.method == "enum" ? exact_win_prob_enum(input)
                                              : dp_win_prob(input);
      const double baseline = uniform_baseline(input.size());
      return ExactReport{input.size(), input.values(), win,
                         baseline,     win - baseline, cmd.method};
    }
    case CommandKind::Simulate: {
      const AdversaryInput input(cmd.points);
      const McResult mc = mc_estimate(input, cmd.trials, cmd.seed);
      const double baseline = uniform_baseline(input.size());
      return SimulateReport{input.size(),          input.values(),
                            mc.estimate,           baseline,
                            mc.estimate - baseline, mc.trials,
                            mc.standard_error,     mc.seed};
    }
    case CommandKind::Inequality: {
      const AdversaryInput input(cmd.points);
      const double lhs = inequality_lhs(input);
      return InequalityReport{input.size(), input.values(), lhs, lhs > 1.0};
    }
    case CommandKind::Adversary: {
      const SearchResult result = minimize_edge(cmd.search);
      return AdversaryReport{cmd.search.n,
                             result.best_input.values(),
                             result.best_value,
                             result.baseline,
                             result.edge,
                             result.evaluations,
                             result.restart_best(),
                             cmd.search.seed};
    }
    case CommandKind::Sweep: {
      const AdversaryInput base(cmd.points);
      return SweepReport{uniform_baseline(base.size()),
                         edge_sweep(base, cmd.scales)};
    }
    case CommandKind::RulesetCheck: {
      const Ruleset ruleset = load_ruleset(cmd.ruleset_file);
      const RelationGraph graph = derive_relation(ruleset);
      RulesetCheckReport report{build_order_map(graph), std::nullopt};
      if (report.solve.solvable()) {
        report.dominance = check_dominance(*report.solve.map, ruleset);
      }
      return report;
    }
    case CommandKind::RulesetSample: {
      if (cmd.sample_kind == "mirror") {
        std::vector<std::pair<double, double>> spans;
        for (const std::vector<double>& at : cmd.sample_at) {
          if (at.size() != 2) {
            throw UsageError("--at for mirror takes 'a,b'");
          }
          spans.emplace_back(at[0], at[1]);
        }
        return RulesetSampleReport{mirror_ruleset(spans)};
      }
      std::vector<VerticalSample> samples;
      for (const std::vector<double>& at : cmd.sample_at) {
        if (at.size() != 3) {
          throw UsageError("--at for vertical takes 'x,epsA,epsB'");
        }
        samples.push_back(VerticalSample{at[0], at[1], at[2]});
      }
      return RulesetSampleReport{vertical_ruleset(samples)};
    }
    default:
      throw UsageError("no executable subcommand");
  }
}

void run_play(const Command& cmd, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const int n = cmd.play_n;
  err << "enter " << n << " distinct numbers separated by spaces: "
      << std::flush;
  std::vector<double> raw(n);
  for (double& v : raw) {
    if (!(in >> v)) {
      throw Error("InvalidInput",
                  "could not read " + std::to_string(n) + " numbers");
    }
  }
  const AdversaryInput input(std::move(raw));

  RngStream rng = RngStream::derived(cmd.seed, 0);
  const Permutation sigma = sample_permutation(n, rng);
  const GameTranscript transcript = play_game(input, sigma, rng);

  out << "n: " << n << "\nseed: " << cmd.seed << "\n";
  out << "revealed 1/" << n << ": "
      << format_real(input.value_of_rank(sigma.rank_at_time(1))) << "\n";
  for (const StageRecord& stage : transcript.stages) {
    out << "stage " << stage.stage << ": distribution ["
        << join_reals(stage.guess_dist.probs, ", ") << "]\n";
    out << "stage " << stage.stage << ": guess " << stage.guess
        << " (p=" << format_real(stage.guess_dist.probs[stage.guess])
        << "), truth " << stage.truth << ", "
        << (stage.correct ? "correct" : "incorrect") << "\n";
    const int revealed_time = stage.stage + 1;
    out << "revealed " << revealed_time << "/" << n << ": "
        << format_real(input.value_of_rank(sigma.rank_at_time(revealed_time)))
        << "\n";
  }
  if (transcript.win) {
    out << "outcome: win\n";
  } else {
    out << "outcome: loss at stage " << transcript.loss_stage << "\n";
  }

  const LehmerCode code = lehmer_encode(sigma);
  out << "permutation (reveal time per rank): [";
  for (int r = 1; r <= n; ++r) {
    out << (r > 1 ? ", " : "") << sigma.time_of_rank(r);
  }
  out << "]\ncode: [";
  for (int k = 1; k <= n; ++k) {
    out << (k > 1 ? ", " : "") << code.entries[k - 1];
  }
  out << "]\n";
}

}  // namespace

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

Command parse_args(const std::vector<std::string>& args) {
  Command cmd;
  CLI::App app{"Staged permutation-guessing game: exact evaluation, "
               "simulation, adversarial search, and ruleset solvability."};
  app.name("covergame");
  app.require_subcommand(0, 1);

  std::string points_str;
  std::string scales_str;
  std::string format_str;
  std::vector<std::string> at_strs;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_str, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* exact = app.add_subcommand(
      "exact", "Exact win probability for the given points");
  exact->add_option("--points", points_str, "comma-separated distinct reals")
      ->required();
  exact->add_option("--method", cmd.method, "enum | dp (default dp)")
      ->check(CLI::IsMember({"enum", "dp"}));
  add_format(exact);

  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte Carlo estimate of the win "
                                     "probability");
  simulate->add_option("--points", points_str, "comma-separated distinct reals")
      ->required();
  simulate->add_option("--trials", cmd.trials, "number of trials");
  simulate->add_option("--seed", cmd.seed, "64-bit unsigned seed");
  add_format(simulate);

  CLI::App* inequality = app.add_subcommand(
      "inequality", "Stagewise inequality left-hand side for the points");
  inequality
      ->add_option("--points", points_str, "comma-separated distinct reals")
      ->required();
  add_format(inequality);

  CLI::App* adversary = app.add_subcommand(
      "adversary", "Minimize the win probability over adversary inputs");
  adversary->add_option("--n", cmd.search.n, "number of values (2..12)");
  adversary->add_option("--restarts", cmd.search.restarts, "random restarts");
  adversary->add_option("--max-iters", cmd.search.max_iters,
                        "pattern-search sweeps per restart");
  adversary->add_option("--initial-step", cmd.search.initial_step,
                        "starting step size");
  adversary->add_option("--step-shrink", cmd.search.step_shrink,
                        "step multiplier when a sweep stalls");
  adversary->add_option("--min-gap", cmd.search.min_gap,
                        "smallest allowed pairwise spacing");
  adversary->add_option("--range-lo", cmd.search.range_lo,
                        "initialization interval lower end");
  adversary->add_option("--range-hi", cmd.search.range_hi,
                        "initialization interval upper end");
  adversary->add_option("--seed", cmd.search.seed, "64-bit unsigned seed");
  add_format(adversary);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Win probability under scalings of a base input");
  sweep->add_option("--points", points_str, "comma-separated distinct reals")
      ->required();
  sweep->add_option("--scales", scales_str, "comma-separated positive scales")
      ->required();
  add_format(sweep);

  CLI::App* ruleset =
      app.add_subcommand("ruleset", "Ruleset solvability machinery");
  ruleset->require_subcommand(1);
  CLI::App* check = ruleset->add_subcommand(
      "check", "Decide solvability of a ruleset file and build a strategy");
  check->add_option("file", cmd.ruleset_file, "ruleset json file")->required();
  add_format(check);
  CLI::App* sample = ruleset->add_subcommand(
      "sample", "Emit a finite sample of a classical ruleset");
  sample->add_option("kind", cmd.sample_kind, "mirror | vertical")
      ->required()
      ->check(CLI::IsMember({"mirror", "vertical"}));
  sample
      ->add_option("--at", at_strs,
                   "mirror: 'a,b'; vertical: 'x,epsA,epsB' (repeatable)")
      ->required();
  add_format(sample);

  CLI::App* play = app.add_subcommand(
      "play", "Interactive game: you are the adversary");
  play->add_option("--n", cmd.play_n, "number of values")
      ->check(CLI::Range(2, 20));
  play->add_option("--seed", cmd.seed, "64-bit unsigned seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    cmd.kind = CommandKind::Help;
    cmd.help_text = app.help();
    return cmd;
  } catch (const CLI::CallForAllHelp&) {
    cmd.kind = CommandKind::Help;
    cmd.help_text = app.help("", CLI::AppFormatMode::All);
    return cmd;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (exact->parsed()) {
    cmd.kind = CommandKind::Exact;
    cmd.points = parse_decimal_list(points_str, "--points");
  } else if (simulate->parsed()) {
    cmd.kind = CommandKind::Simulate;
    cmd.points = parse_decimal_list(points_str, "--points");
  } else if (inequality->parsed()) {
    cmd.kind = CommandKind::Inequality;
    cmd.points = parse_decimal_list(points_str, "--points");
  } else if (adversary->parsed()) {
    cmd.kind = CommandKind::Adversary;
  } else if (sweep->parsed()) {
    cmd.kind = CommandKind::Sweep;
    cmd.points = parse_decimal_list(points_str, "--points");
    cmd.scales = parse_decimal_list(scales_str, "--scales");
  } else if (ruleset->parsed()) {
    if (check->parsed()) {
      cmd.kind = CommandKind::RulesetCheck;
    } else {
      cmd.kind = CommandKind::RulesetSample;
      for (const std::string& at : at_strs) {
        cmd.sample_at.push_back(parse_decimal_list(at, "--at"));
      }
    }
  } else if (play->parsed()) {
    cmd.kind = CommandKind::Play;
  } else {
    throw UsageError(
        "a subcommand is required: exact | simulate | inequality | adversary "
        "| sweep | ruleset | play (see --help)");
  }

  cmd.format = parse_format(format_str);
  return cmd;
}

void emit_output(const CommandOutput& output, OutputFormat format,
                 std::ostream& out) {
  const OutputFormat resolved =
      format == OutputFormat::Default ? default_format(output) : format;
  std::visit([&](const auto& report) { emit(report, resolved, out); }, output);
}

void run_command(const Command& cmd, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  switch (cmd.kind) {
    case CommandKind::Help:
      out << cmd.help_text;
      return;
    case CommandKind::Play:
      run_play(cmd, in, out, err);
      return;
    default:
      emit_output(execute(cmd), cmd.format, out);
  }
}

}  // namespace covergame::cli
