#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "covergame/evaluator.hpp"
#include "covergame/strategy.hpp"
#include "doctest.h"
#include "json.hpp"
#include "ruleset_io.hpp"

using namespace covergame;
using namespace covergame::cli;

namespace {

std::string run_to_string(const std::vector<std::string>& args,
                          const std::string& stdin_text = "") {
  const Command cmd = parse_args(args);
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  run_command(cmd, in, out, err);
  return out.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("parse_args: exact") {
  const Command cmd = parse_args({"exact", "--points", "1,0,-1"});
  CHECK(cmd.kind == CommandKind::Exact);
  CHECK(cmd.points == std::vector{1.0, 0.0, -1.0});
  CHECK(cmd.method == "dp");
  CHECK(cmd.format == OutputFormat::Default);

  const Command with_method =
      parse_args({"exact", "--points", "2,1", "--method", "enum"});
  CHECK(with_method.method == "enum");
}

TEST_CASE("parse_args: simulate flags") {
  const Command cmd = parse_args(
      {"simulate", "--points", "1,0", "--trials", "1000000", "--seed", "7"});
  CHECK(cmd.kind == CommandKind::Simulate);
  CHECK(cmd.trials == 1000000);
  CHECK(cmd.seed == 7);
  // 64-bit seeds survive parsing.
  const Command big = parse_args(
      {"simulate", "--points", "1,0", "--seed", "18446744073709551615"});
  CHECK(big.seed == 18446744073709551615ull);
}

TEST_CASE("parse_args: usage errors") {
  CHECK_THROWS_AS(parse_args({"exact"}), UsageError);
  CHECK_THROWS_AS(parse_args({"exact", "--points", "1,abc"}), UsageError);
  CHECK_THROWS_AS(parse_args({"exact", "--points", "1,"}), UsageError);
  CHECK_THROWS_AS(parse_args({"exact", "--points", "1,2", "--wat"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"exact", "--points", "1,2", "--method", "x"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"ruleset"}), UsageError);
  CHECK_THROWS_AS(parse_args({"ruleset", "check"}), UsageError);
  CHECK_THROWS_AS(
      parse_args({"exact", "--points", "1,2", "--format", "yaml"}),
      UsageError);
  CHECK_THROWS_AS(parse_args({"frobnicate"}), UsageError);
}

TEST_CASE("parse_args: semantic validation is deferred to the modules") {
  const Command cmd = parse_args({"exact", "--points", "1,1"});
  CHECK(cmd.points == std::vector{1.0, 1.0});
  std::istringstream in;
  std::ostringstream out, err;
  CHECK_THROWS_AS(run_command(cmd, in, out, err), DuplicateValuesError);
}

TEST_CASE("parse_args: ruleset subcommands and play") {
  const Command check = parse_args({"ruleset", "check", "r.json"});
  CHECK(check.kind == CommandKind::RulesetCheck);
  CHECK(check.ruleset_file == "r.json");

  const Command sample = parse_args(
      {"ruleset", "sample", "mirror", "--at", "0,1", "--at", "1,2"});
  CHECK(sample.kind == CommandKind::RulesetSample);
  CHECK(sample.sample_kind == "mirror");
  REQUIRE(sample.sample_at.size() == 2);
  CHECK(sample.sample_at[0] == std::vector{0.0, 1.0});

  const Command play = parse_args({"play", "--n", "4", "--seed", "11"});
  CHECK(play.kind == CommandKind::Play);
  CHECK(play.play_n == 4);
  CHECK(play.seed == 11);
}

TEST_CASE("format_real uses 12 significant digits") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(1.0 / 6.0) == "0.166666666667");
  CHECK(format_real(0.29224531122122976) == "0.292245311221");
}

TEST_CASE("exact: json output round-trips with correct values") {
  const std::string text = run_to_string({"exact", "--points", "1,0,-1"});
  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["n"] == 3);
  CHECK(doc["points"] == nlohmann::json({1.0, 0.0, -1.0}));
  CHECK(doc["method"] == "dp");
  CHECK(std::abs(doc["win_probability"].get<double>() - 0.29224531122122976) <
        1e-9);
  CHECK(std::abs(doc["baseline"].get<double>() - 1.0 / 6.0) < 1e-12);
  CHECK(std::abs(doc["edge"].get<double>() -
                 (0.29224531122122976 - 1.0 / 6.0)) < 1e-9);

  // Key order is pinned.
  CHECK(text.find("\"n\"") < text.find("\"points\""));
  CHECK(text.find("\"points\"") < text.find("\"win_probability\""));
  CHECK(text.find("\"win_probability\"") < text.find("\"baseline\""));
  CHECK(text.find("\"baseline\"") < text.find("\"edge\""));
  CHECK(text.find("\"edge\"") < text.find("\"method\""));
}

TEST_CASE("exact: methods agree and text format renders") {
  const std::string via_dp = run_to_string({"exact", "--points", "3,1,-2"});
  const std::string via_enum =
      run_to_string({"exact", "--points", "3,1,-2", "--method", "enum"});
  const double dp_value =
      nlohmann::json::parse(via_dp)["win_probability"].get<double>();
  const double enum_value =
      nlohmann::json::parse(via_enum)["win_probability"].get<double>();
  CHECK(std::abs(dp_value - enum_value) < 1e-12);

  const std::string text =
      run_to_string({"exact", "--points", "1,0", "--format", "text"});
  CHECK(text.find("win_probability: 0.615529289315") != std::string::npos);
}

TEST_CASE("simulate: output is reproducible byte for byte") {
  const std::vector<std::string> args{"simulate",  "--points", "1,0,-1",
                                      "--trials",  "20000",    "--seed",
                                      "42"};
  CHECK(run_to_string(args) == run_to_string(args));
  const nlohmann::json doc = nlohmann::json::parse(run_to_string(args));
  CHECK(doc["method"] == "mc");
  CHECK(doc["trials"] == 20000);
  CHECK(doc["seed"] == 42);
  CHECK(doc["stderr"].get<double>() > 0.0);
}

TEST_CASE("inequality: json fields") {
  const nlohmann::json doc = nlohmann::json::parse(
      run_to_string({"inequality", "--points", "1,0,-1"}));
  CHECK(std::abs(doc["lhs"].get<double>() - 1.2995013116434255) < 1e-9);
  CHECK(doc["holds"] == true);
}

TEST_CASE("sweep: csv header and rows") {
  const std::string csv =
      run_to_string({"sweep", "--points", "1,0,-1", "--scales", "0.5,1"});
  CHECK(csv.rfind("scale,win_probability,baseline,edge\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

  const std::string json = run_to_string(
      {"sweep", "--points", "1,0,-1", "--scales", "1", "--format", "json"});
  const nlohmann::json rows = nlohmann::json::parse(json);
  REQUIRE(rows.is_array());
  CHECK(rows.size() == 1);
  CHECK(rows[0]["scale"] == 1.0);
}

TEST_CASE("unsupported formats are rejected") {
  CHECK_THROWS_AS(run_to_string({"exact", "--points", "1,0", "--format", "csv"}),
                  UnsupportedFormatError);
  CHECK_THROWS_AS(
      run_to_string({"inequality", "--points", "1,0", "--format", "csv"}),
      UnsupportedFormatError);
  CHECK_THROWS_AS(
      run_to_string(
          {"ruleset", "sample", "mirror", "--at", "0,1", "--format", "text"}),
      UnsupportedFormatError);
}

TEST_CASE("adversary: deterministic and sound") {
  const std::vector<std::string> args{"adversary", "--n",   "2",
                                      "--restarts", "2",    "--max-iters",
                                      "60",         "--seed", "3"};
  const std::string a = run_to_string(args);
  CHECK(a == run_to_string(args));
  const nlohmann::json doc = nlohmann::json::parse(a);
  CHECK(doc["baseline"] == 0.5);
  CHECK(doc["best_value"].get<double>() > 0.5);
  CHECK(doc["restart_best"].size() == 2);
}

TEST_CASE("ruleset check: vertical sample is unsolvable") {
  const std::string path = std::string(COVERGAME_TEST_DATA_DIR) +
                           "/vertical.json";
  const nlohmann::json doc =
      nlohmann::json::parse(run_to_string({"ruleset", "check", path}));
  CHECK(doc["verdict"] == "unsolvable");
  CHECK(doc["witness"] == nlohmann::json({0.0}));
}

TEST_CASE("ruleset check: mirror sample solves and dominates") {
  const std::string path =
      std::string(COVERGAME_TEST_DATA_DIR) + "/mirror.json";
  const nlohmann::json doc =
      nlohmann::json::parse(run_to_string({"ruleset", "check", path}));
  CHECK(doc["verdict"] == "solvable");
  CHECK(doc["dominant"] == true);
  CHECK(doc["order_map"].size() == 3);
  CHECK(doc["worst_win_prob"].get<double>() == 0.625);
}

TEST_CASE("ruleset io: sample round-trips through the file format") {
  const std::string text = run_to_string(
      {"ruleset", "sample", "vertical", "--at", "0,1,1"});
  CHECK(text == "{\"pairs\": [{\"xa\": [0, 1], \"xb\": [0, -1]}]}\n");

  std::istringstream in(text);
  const Ruleset parsed = parse_ruleset_json(in, "test");
  REQUIRE(parsed.pairs.size() == 1);
  CHECK(parsed.pairs[0] == PlanePair{0.0, 1.0, 0.0, -1.0});
}

TEST_CASE("ruleset io: errors") {
  CHECK_THROWS_AS(load_ruleset("/nonexistent/path.json"), FileError);
  std::istringstream bad("{\"pairs\": \"nope\"}");
  CHECK_THROWS_AS(parse_ruleset_json(bad, "test"), Error);
  std::istringstream malformed("{");
  CHECK_THROWS_AS(parse_ruleset_json(malformed, "test"), Error);
}

TEST_CASE("play: printed distributions match the stage strategy") {
  // Seed 7 on points {1, 0, -1} reveals 0, then 1, then -1.
  const std::string text =
      run_to_string({"play", "--n", "3", "--seed", "7"}, "1 0 -1\n");

  const std::string stage1 =
      "stage 1: distribution [" + format_real(0.5) + ", " + format_real(0.5) +
      "]";
  CHECK(text.find(stage1) != std::string::npos);

  const CategoricalDistribution stage2 =
      softmax_guess(std::vector{0.0, 1.0});
  const std::string stage2_line =
      "stage 2: distribution [" + format_real(stage2.probs[0]) + ", " +
      format_real(stage2.probs[1]) + ", " + format_real(stage2.probs[2]) + "]";
  CHECK(text.find(stage2_line) != std::string::npos);

  CHECK(text.find("revealed 1/3: 0") != std::string::npos);
  const bool has_outcome = text.find("outcome: win") != std::string::npos ||
                           text.find("outcome: loss at stage") !=
                               std::string::npos;
  CHECK(has_outcome);

  // Same command, same transcript.
  CHECK(text == run_to_string({"play", "--n", "3", "--seed", "7"}, "1 0 -1\n"));
}

TEST_CASE("play: input errors") {
  CHECK_THROWS_AS(run_to_string({"play", "--n", "3", "--seed", "1"}, "1 2\n"),
                  Error);
  CHECK_THROWS_AS(
      run_to_string({"play", "--n", "2", "--seed", "1"}, "5 5\n"),
      DuplicateValuesError);
}

TEST_CASE("help is reachable, bare invocation is a usage error") {
  const Command help = parse_args({"--help"});
  CHECK(help.kind == CommandKind::Help);
  CHECK(!help.help_text.empty());
  CHECK_THROWS_AS(parse_args({}), UsageError);
}

TEST_SUITE_END();
