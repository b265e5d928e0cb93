#pragma once

#include <iosfwd>
#include <string>

#include "covergame/rulesets.hpp"

namespace covergame::cli {

/// Reads the ruleset file format:
///   {"pairs": [{"xa": [a1, a2], "xb": [b1, b2]}, ...]}
/// Throws FileError if the path cannot be read and Error("RulesetParse", ...)
/// on malformed content. Region membership is checked later by
/// derive_relation.
Ruleset load_ruleset(const std::string& path);

Ruleset parse_ruleset_json(std::istream& in, const std::string& origin);

/// Serializes in the same file format (fixed key order, 12-significant-digit
/// reals, one line).
std::string ruleset_to_json(const Ruleset& ruleset);

}  // namespace covergame::cli
