#include "infcom/report.hpp"

#include <algorithm>
#include <cstdio>

namespace infcom {

std::string canonical_result(const WeightedGraph& g, std::span<const Community> cs) {
  std::string out;
  std::vector<std::string> labels;
  for (const Community& c : cs) {
    labels.clear();
    labels.reserve(c.members.size());
    for (VertexId v : c.members) labels.push_back(g.label(v));
    std::sort(labels.begin(), labels.end());
    out += std::to_string(c.rank);
    out += ' ';
    out += g.label(c.keynode);
    out += ':';
    for (const std::string& l : labels) {
      out += ' ';
      out += l;
    }
    out += '\n';
  }
  return out;
}

std::string result_hash(const WeightedGraph& g, std::span<const Community> cs) {
  const std::string text = canonical_result(g, cs);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace infcom
