#include "ruleset_io.hpp"

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace covergame::cli {
namespace {

double number_at(const nlohmann::json& arr, std::size_t index,
                 const std::string& origin) {
  if (!arr.is_array() || arr.size() != 2 || !arr[index].is_number()) {
    throw Error("RulesetParse",
                origin + ": \"xa\"/\"xb\" must be arrays of two numbers");
  }
  return arr[index].get<double>();
}

}  // namespace

Ruleset load_ruleset(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw FileError("cannot open ruleset file '" + path + "'");
  }
  return parse_ruleset_json(file, path);
}

Ruleset parse_ruleset_json(std::istream& in, const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("RulesetParse", origin + ": " + e.what());
  }

  if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array() ||
      doc["pairs"].empty()) {
    throw Error("RulesetParse",
                origin + ": expected {\"pairs\": [...]} with at least one pair");
  }

  Ruleset ruleset;
  for (const nlohmann::json& entry : doc["pairs"]) {
    if (!entry.is_object() || !entry.contains("xa") || !entry.contains("xb")) {
      throw Error("RulesetParse",
                  origin + ": each pair needs \"xa\" and \"xb\" points");
    }
    PlanePair pair;
    pair.above_x1 = number_at(entry["xa"], 0, origin);
    pair.above_x2 = number_at(entry["xa"], 1, origin);
    pair.below_x1 = number_at(entry["xb"], 0, origin);
    pair.below_x2 = number_at(entry["xb"], 1, origin);
    ruleset.pairs.push_back(pair);
  }
  return ruleset;
}

std::string ruleset_to_json(const Ruleset& ruleset) {
  std::ostringstream out;
  out << "{\"pairs\": [";
  for (std::size_t i = 0; i < ruleset.pairs.size(); ++i) {
    const PlanePair& p = ruleset.pairs[i];
    if (i > 0) out << ", ";
    out << "{\"xa\": [" << format_real(p.above_x1) << ", "
        << format_real(p.above_x2) << "], \"xb\": [" << format_real(p.below_x1)
        << ", " << format_real(p.below_x2) << "]}";
  }
  out << "]}";
  return out.str();
}

}  // namespace covergame::cli
