#include <algorithm>
#include <cctype>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "infcom/baselines.hpp"
#include "infcom/core.hpp"
#include "infcom/extensions.hpp"
#include "infcom/generate.hpp"
#include "infcom/graph.hpp"
#include "infcom/io.hpp"
#include "infcom/pagerank.hpp"
#include "infcom/report.hpp"
#include "infcom/search.hpp"

using nlohmann::ordered_json;
using namespace infcom;

namespace {

volatile std::sig_atomic_t g_interrupted = 0;
void on_sigint(int) { g_interrupted = 1; }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   t0)
      .count();
}

std::vector<std::string> sorted_labels(const WeightedGraph& g,
                                       const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (VertexId v : vs) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

ordered_json community_json(const WeightedGraph& g, const Community& c, bool nested) {
  ordered_json j;
  j["rank"] = c.rank;
  j["influence"] = c.influence;
  j["influence_rank"] = c.keynode;  // position in the weight order; breaks ties
  j["keynode"] = g.label(c.keynode);
  j["member_count"] = c.members.size();
  if (nested) {
    j["group"] = sorted_labels(g, c.group);
    j["children"] = sorted_labels(g, c.children);
  } else {
    j["members"] = sorted_labels(g, c.members);
  }
  return j;
}

ordered_json trace_json(const SearchTrace& trace) {
  ordered_json arr = ordered_json::array();
  for (const TraceIteration& it : trace.iterations) {
    arr.push_back({{"tau", it.tau},
                   {"prefix_len", it.prefix_len},
                   {"size", it.size},
                   {"count", it.count}});
  }
  return {{"iterations", arr}, {"accessed_size", trace.accessed_size()}};
}

ordered_json graph_json(const WeightedGraph& g) {
  return {{"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"self_loops_dropped", g.self_loops_dropped()},
          {"duplicates_dropped", g.duplicates_dropped()}};
}

WeightedGraph load_graph(const std::string& edges_path, const std::string& weights_path) {
  EdgeFile ef = read_edge_file(edges_path);
  auto weights = read_weight_file(weights_path);
  // Isolated-vertex mentions must still have weights; they add no edges.
  for (const std::string& v : ef.isolated) {
    bool known = false;
    for (const auto& [label, w] : weights)
      if (label == v) {
        known = true;
        break;
      }
    if (!known) throw std::runtime_error("no weight for vertex '" + v + "'");
  }
  return ingest(ef.edges, weights);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw IoError("cannot open '" + output + "' for writing");
  out << text;
}

std::uint32_t oracle_bound_from_env() {
  const char* s = std::getenv("INFCOMM_ORACLE_MAX");
  if (!s) return kDefaultOracleBound;
  char* end = nullptr;
  const unsigned long v = std::strtoul(s, &end, 10);
  if (end == s || *end != '\0' || v == 0)
    throw std::invalid_argument("INFCOMM_ORACLE_MAX must be a positive integer");
  return static_cast<std::uint32_t>(v);
}

struct TopkOptions {
  std::string edges, weights, output;
  std::uint32_t gamma = 1;
  std::uint32_t k = 1;
  double delta = 2.0;
  std::string variant = "core";
  std::string format = "json";
  bool nested = false;
  bool timings = false;
};

int run_topk(const TopkOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  WeightedGraph g = load_graph(o.edges, o.weights);
  const double ingest_ms = ms_since(t0);

  const QueryParams params{o.gamma, o.k, o.delta};
  const auto t1 = std::chrono::steady_clock::now();
  TopKResult res;
  if (o.variant == "core") {
    res = local_search(g, params);
  } else if (o.variant == "noncontainment") {
    res = local_search_noncontainment(g, params);
  } else {
    res = local_search_truss(g, params);
  }
  const double search_ms = ms_since(t1);

  if (o.format == "ndjson") {
    std::string text;
    for (const Community& c : res.communities)
      text += community_json(g, c, o.nested).dump() + "\n";
    ordered_json summary{{"summary", true},
                         {"found", res.communities.size()},
                         {"complete", res.complete},
                         {"accessed_size", res.trace.accessed_size()},
                         {"iterations", res.trace.iterations.size()}};
    text += summary.dump() + "\n";
    emit(text, o.output);
    return 0;
  }

  ordered_json j;
  j["command"] = "topk";
  j["variant"] = o.variant;
  j["gamma"] = o.gamma;
  j["k"] = o.k;
  j["delta"] = o.delta;
  j["graph"] = graph_json(g);
  j["complete"] = res.complete;
  j["total_in_window"] = res.total_in_window;
  ordered_json cs = ordered_json::array();
  for (const Community& c : res.communities) cs.push_back(community_json(g, c, o.nested));
  j["communities"] = cs;
  j["trace"] = trace_json(res.trace);
  if (o.timings)
    j["timings_ms"] = {{"ingest", ingest_ms}, {"search", search_ms}};
  emit(j.dump(2) + "\n", o.output);
  return 0;
}

struct ProgressiveOptions {
  std::string edges, weights, output;
  std::uint32_t gamma = 1;
  double delta = 2.0;
  std::uint64_t limit = 0;  // 0 = run to completion
};

int run_progressive(const ProgressiveOptions& o) {
  WeightedGraph g = load_graph(o.edges, o.weights);
  std::signal(SIGINT, on_sigint);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw IoError("cannot open '" + o.output + "' for writing");
    out = &file;
  }

  std::uint64_t emitted = 0;
  bool stopped = false;
  SearchTrace trace = local_search_progressive(
      g, o.gamma, o.delta, [&](Community&& c) {
        *out << community_json(g, c, false).dump() << '\n';
        out->flush();
        ++emitted;
        if (g_interrupted || (o.limit > 0 && emitted >= o.limit)) {
          stopped = true;
          return false;
        }
        return true;
      });

  ordered_json summary{{"summary", true},
                       {"emitted", emitted},
                       {"stopped_early", stopped},
                       {"iterations", trace.iterations.size()},
                       {"accessed_size", trace.accessed_size()}};
  *out << summary.dump() << '\n';
  return 0;
}

struct PagerankOptions {
  std::string edges, output;
  double damping = 0.85;
  std::uint32_t iters = 100;
  double tol = 1e-9;
};

int run_pagerank(const PagerankOptions& o) {
  EdgeFile ef = read_edge_file(o.edges);
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::uint32_t> index;
  auto intern = [&](const std::string& s) {
    auto [it, fresh] = index.emplace(s, static_cast<std::uint32_t>(labels.size()));
    if (fresh) labels.push_back(s);
    return it->second;
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(ef.edges.size());
  for (const auto& [a, b] : ef.edges) edges.emplace_back(intern(a), intern(b));
  for (const auto& v : ef.isolated) intern(v);

  std::vector<double> scores =
      pagerank(static_cast<std::uint32_t>(labels.size()), edges, o.damping, o.iters, o.tol);

  std::vector<std::pair<std::string, double>> rows;
  rows.reserve(labels.size());
  for (std::uint32_t v = 0; v < labels.size(); ++v) rows.emplace_back(labels[v], scores[v]);
  std::sort(rows.begin(), rows.end());
  emit(format_weight_lines(rows), o.output);
  return 0;
}

struct GenSpec {
  std::string text;
  std::string kind;
  std::uint32_t n = 0;
  double p = 0;
  std::uint32_t mpv = 0;
  std::uint64_t seed = 0;
};

GenSpec parse_gen(const std::string& s, std::uint64_t default_seed) {
  GenSpec spec;
  spec.text = s;
  spec.seed = default_seed;
  const auto open = s.find('(');
  const auto close = s.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw std::invalid_argument("bad generator spec '" + s + "'");
  spec.kind = s.substr(0, open);
  std::vector<std::string> args;
  std::string cur;
  for (char ch : s.substr(open + 1, close - open - 1)) {
    if (ch == ',') {
      args.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) args.push_back(cur);
  try {
    if (spec.kind == "erdos") {
      if (args.size() < 2 || args.size() > 3) throw std::invalid_argument(s);
      spec.n = static_cast<std::uint32_t>(std::stoul(args[0]));
      spec.p = std::stod(args[1]);
      if (args.size() == 3) spec.seed = std::stoull(args[2]);
    } else if (spec.kind == "powerlaw") {
      if (args.size() < 2 || args.size() > 3) throw std::invalid_argument(s);
      spec.n = static_cast<std::uint32_t>(std::stoul(args[0]));
      spec.mpv = static_cast<std::uint32_t>(std::stoul(args[1]));
      if (args.size() == 3) spec.seed = std::stoull(args[2]);
    } else {
      throw std::invalid_argument(s);
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad generator spec '" + s +
                                "' (want erdos(n,p[,seed]) or powerlaw(n,m[,seed]))");
  }
  return spec;
}

struct BenchOptions {
  std::vector<std::string> gens;
  std::vector<std::uint32_t> gammas{10};
  std::vector<std::uint32_t> ks{10};
  std::vector<double> deltas{2.0};
  std::vector<std::string> algos{"local", "online", "forward"};
  std::uint64_t seed = 1;
  std::string output;
};

int run_bench(const BenchOptions& o) {
  std::string csv =
      "graph,n,m,algorithm,gamma,k,delta,found,iterations,accessed_size,millis,"
      "result_hash\n";
  for (const std::string& gen_text : o.gens) {
    const GenSpec spec = parse_gen(gen_text, o.seed);
    GeneratedGraph gg = spec.kind == "erdos" ? gen_erdos(spec.n, spec.p, spec.seed)
                                             : gen_powerlaw(spec.n, spec.mpv, spec.seed);
    std::vector<double> w = pagerank(gg.n, gg.edges);
    WeightedGraph g = to_weighted(gg, w);
    for (const std::uint32_t gamma : o.gammas) {
      for (const std::uint32_t k : o.ks) {
        for (const double delta : o.deltas) {
          for (const std::string& algo : o.algos) {
            const auto t0 = std::chrono::steady_clock::now();
            std::vector<Community> cs;
            std::uint64_t iterations = 1;
            std::uint64_t accessed = g.prefix_size(g.vertex_count());
            if (algo == "local") {
              TopKResult r = local_search(g, {gamma, k, delta});
              cs = std::move(r.communities);
              iterations = r.trace.iterations.size();
              accessed = r.trace.accessed_size();
            } else if (algo == "online") {
              cs = online_all(g, gamma, k);
            } else if (algo == "forward") {
              cs = forward_search(g, gamma, k);
              iterations = 2;
              accessed *= 2;
            } else if (algo == "progressive") {
              SearchTrace tr = local_search_progressive(
                  g, gamma, delta, [&](Community&& c) {
                    cs.push_back(std::move(c));
                    return cs.size() < k;
                  });
              iterations = tr.iterations.size();
              accessed = tr.accessed_size();
            } else {
              throw std::invalid_argument("unknown algorithm '" + algo + "'");
            }
            const double ms = ms_since(t0);
            char msbuf[32];
            std::snprintf(msbuf, sizeof msbuf, "%.3f", ms);
            csv += spec.text + "," + std::to_string(g.vertex_count()) + "," +
                   std::to_string(g.edge_count()) + "," + algo + "," +
                   std::to_string(gamma) + "," + std::to_string(k) + "," +
                   std::to_string(delta) + "," + std::to_string(cs.size()) + "," +
                   std::to_string(iterations) + "," + std::to_string(accessed) + "," +
                   msbuf + "," + result_hash(g, cs) + "\n";
          }
        }
      }
    }
  }
  emit(csv, o.output);
  return 0;
}

struct OracleOptions {
  std::string edges, weights, output;
  std::uint32_t gamma = 1;
  std::string variant = "core";
};

int run_oracle(const OracleOptions& o) {
  WeightedGraph g = load_graph(o.edges, o.weights);
  const std::uint32_t bound = oracle_bound_from_env();
  std::vector<Community> cs;
  if (o.variant == "truss") {
    cs = truss_oracle(g, o.gamma, bound);
  } else {
    cs = oracle_enumerate(g, o.gamma, bound);
    if (o.variant == "noncontainment") {
      // Keep only communities that contain no other community.
      std::vector<Community> kept;
      for (const Community& c : cs) {
        bool contains_other = false;
        for (const Community& other : cs) {
          if (&other == &c || other.members.size() >= c.members.size()) continue;
          if (std::includes(c.members.begin(), c.members.end(), other.members.begin(),
                            other.members.end())) {
            contains_other = true;
            break;
          }
        }
        if (!contains_other) kept.push_back(c);
      }
      for (std::size_t i = 0; i < kept.size(); ++i)
        kept[i].rank = static_cast<std::uint32_t>(i) + 1;
      cs = std::move(kept);
    }
  }
  ordered_json j;
  j["command"] = "oracle";
  j["variant"] = o.variant;
  j["gamma"] = o.gamma;
  j["graph"] = graph_json(g);
  j["count"] = cs.size();
  ordered_json arr = ordered_json::array();
  for (const Community& c : cs) arr.push_back(community_json(g, c, false));
  j["communities"] = arr;
  emit(j.dump(2) + "\n", o.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"top-k influential community search"};
  app.require_subcommand(1);

  TopkOptions topk;
  auto* cmd_topk = app.add_subcommand("topk", "top-k communities by local search");
  cmd_topk->add_option("--edges", topk.edges, "edge list file")->required();
  cmd_topk->add_option("--weights", topk.weights, "vertex weight file")->required();
  cmd_topk->add_option("--gamma", topk.gamma, "minimum degree")->required()
      ->check(CLI::PositiveNumber);
  cmd_topk->add_option("--k", topk.k, "number of communities")->required()
      ->check(CLI::PositiveNumber);
  cmd_topk->add_option("--delta", topk.delta, "window growth ratio (> 1)");
  cmd_topk->add_option("--variant", topk.variant, "community variant")
      ->check(CLI::IsMember({"core", "noncontainment", "truss"}));
  cmd_topk->add_option("--format", topk.format, "output format")
      ->check(CLI::IsMember({"json", "ndjson"}));
  cmd_topk->add_flag("--nested", topk.nested, "emit group/children instead of members");
  cmd_topk->add_flag("--timings", topk.timings, "include wall-clock timings");
  cmd_topk->add_option("--output", topk.output, "write to file instead of stdout");

  ProgressiveOptions prog;
  auto* cmd_prog = app.add_subcommand("progressive", "stream every community, heaviest first");
  cmd_prog->add_option("--edges", prog.edges)->required();
  cmd_prog->add_option("--weights", prog.weights)->required();
  cmd_prog->add_option("--gamma", prog.gamma)->required()->check(CLI::PositiveNumber);
  cmd_prog->add_option("--delta", prog.delta, "window growth ratio (> 1)");
  cmd_prog->add_option("--limit", prog.limit, "stop after this many communities");
  cmd_prog->add_option("--output", prog.output);

  PagerankOptions pr;
  auto* cmd_pr = app.add_subcommand("pagerank", "PageRank scores as a weight file");
  cmd_pr->add_option("--edges", pr.edges)->required();
  cmd_pr->add_option("--damping", pr.damping)->check(CLI::Range(0.0, 0.9999));
  cmd_pr->add_option("--iterations", pr.iters)->check(CLI::PositiveNumber);
  cmd_pr->add_option("--tolerance", pr.tol);
  cmd_pr->add_option("--output", pr.output);

  BenchOptions bench;
  auto* cmd_bench = app.add_subcommand("bench", "timing grid over generated graphs");
  cmd_bench->add_option("--gen", bench.gens, "erdos(n,p[,seed]) or powerlaw(n,m[,seed])")
      ->required();
  cmd_bench->add_option("--gamma", bench.gammas);
  cmd_bench->add_option("--k", bench.ks);
  cmd_bench->add_option("--delta", bench.deltas);
  cmd_bench->add_option("--algos", bench.algos,
                        "any of: local online forward progressive");
  cmd_bench->add_option("--seed", bench.seed, "seed when the --gen string omits one");
  cmd_bench->add_option("--output", bench.output);

  OracleOptions oracle;
  auto* cmd_oracle = app.add_subcommand("oracle", "definition-direct enumeration (small graphs)");
  cmd_oracle->add_option("--edges", oracle.edges)->required();
  cmd_oracle->add_option("--weights", oracle.weights)->required();
  cmd_oracle->add_option("--gamma", oracle.gamma)->required()->check(CLI::PositiveNumber);
  cmd_oracle->add_option("--variant", oracle.variant)
      ->check(CLI::IsMember({"core", "noncontainment", "truss"}));
  cmd_oracle->add_option("--output", oracle.output);

  try {
    app.parse(argc, argv);
    if (cmd_topk->parsed()) return run_topk(topk);
    if (cmd_prog->parsed()) return run_progressive(prog);
    if (cmd_pr->parsed()) return run_pagerank(pr);
    if (cmd_bench->parsed()) return run_bench(bench);
    if (cmd_oracle->parsed()) return run_oracle(oracle);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const OracleBoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
