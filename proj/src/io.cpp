#include "infcom/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace infcom {
namespace {

[[noreturn]] void fail(const std::string& origin, std::size_t line,
                       const std::string& what) {
  throw IoError(origin + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

// Splits a line into tokens, empty when blank or a '#' comment.
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    if (tok.front() == '#') break;
    out.push_back(std::move(tok));
  }
  return out;
}

}  // namespace

EdgeFile parse_edge_stream(std::istream& in, const std::string& origin) {
  EdgeFile out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() == 1) {
      out.isolated.push_back(std::move(toks[0]));
    } else if (toks.size() == 2) {
      out.edges.emplace_back(std::move(toks[0]), std::move(toks[1]));
    } else {
      fail(origin, lineno, "expected 'u v', got " + std::to_string(toks.size()) +
                               " tokens");
    }
  }
  return out;
}

EdgeFile read_edge_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_edge_stream(in, path);
}

std::vector<std::pair<std::string, double>> parse_weight_stream(
    std::istream& in, const std::string& origin) {
  std::vector<std::pair<std::string, double>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) fail(origin, lineno, "expected 'vertex weight'");
    try {
      std::size_t used = 0;
      const double w = std::stod(toks[1], &used);
      if (used != toks[1].size()) throw std::invalid_argument(toks[1]);
      out.emplace_back(std::move(toks[0]), w);
    } catch (const std::exception&) {
      fail(origin, lineno, "bad weight '" + toks[1] + "'");
    }
  }
  return out;
}

std::vector<std::pair<std::string, double>> read_weight_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_weight_stream(in, path);
}

std::string format_weight_lines(
    const std::vector<std::pair<std::string, double>>& weights) {
  std::string out;
  char buf[64];
  for (const auto& [label, w] : weights) {
    std::snprintf(buf, sizeof buf, "%.17g", w);
    out += label;
    out += ' ';
    out += buf;
    out += '\n';
  }
  return out;
}

}  // namespace infcom
