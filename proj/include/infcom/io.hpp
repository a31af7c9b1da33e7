#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace infcom {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Whitespace-separated edge list, one "u v" pair per line; '#' starts a
// comment line; a line with a single token declares an isolated vertex.
struct EdgeFile {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
};

EdgeFile read_edge_file(const std::string& path);
EdgeFile parse_edge_stream(std::istream& in, const std::string& origin);

// "label weight" per line, '#' comments.
std::vector<std::pair<std::string, double>> read_weight_file(const std::string& path);
std::vector<std::pair<std::string, double>> parse_weight_stream(std::istream& in,
                                                                const std::string& origin);

// Round-trip-exact "label weight" lines.
std::string format_weight_lines(
    const std::vector<std::pair<std::string, double>>& weights);

}  // namespace infcom
