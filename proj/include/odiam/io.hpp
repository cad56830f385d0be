#pragma once

#include "odiam/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace odiam {

using ordered_json = nlohmann::ordered_json;

// {"parts":[...],"arcs":[[u,v],...]} with arcs sorted lexicographically.
ordered_json orientation_to_json(const Orientation &d);
// Compact canonical text followed by a newline; identical orientations give identical bytes.
std::string orientation_json_text(const Orientation &d);

// Extra keys are ignored. Syntax errors raise ParseError with line and column;
// structural problems raise the matching validation error from orient().
Orientation orientation_from_json_text(std::string_view text);

Orientation read_orientation_file(const std::filesystem::path &path);
std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

// Parts as same-rank clusters.
std::string orientation_to_dot(const Orientation &d);

// "3,3,6" -> {3,3,6}
std::vector<int> parse_parts(std::string_view text);

} // namespace odiam
