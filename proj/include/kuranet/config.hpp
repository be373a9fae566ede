#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace kuranet {

/// Parses a plain-text config stream of `key = value` lines. '#' starts a
/// comment (whole-line or trailing), blank lines are skipped, whitespace
/// around keys and values is trimmed. Pairs are returned in file order;
/// duplicate keys are legal and the last occurrence wins at application
/// time. Throws InvalidParameterError on lines without '=' or empty keys.
std::vector<std::pair<std::string, std::string>> parse_config(std::istream& in);

}  // namespace kuranet
