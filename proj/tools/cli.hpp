// Copyright 2026 The srpf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line frontend: `solve`, `bench` and `oracle-check`.
//
// Exit codes: 0 ok, 1 bad flags, 2 topology read/parse error, 3 unknown node
// name, 4 engine mismatch in oracle-check.

#ifndef SRPF_TOOLS_CLI_HPP_
#define SRPF_TOOLS_CLI_HPP_

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "srpf/srpf.hpp"

namespace srpf::cli {

enum ExitCode : int {
  kOk = 0,
  kBadFlags = 1,
  kParseError = 2,
  kUnknownNode = 3,
  kMismatch = 4,
};

class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

inline Topology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kParseError, "cannot open topology file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_topology(buf.str());
  } catch (const ParseError& e) {
    throw CliError(kParseError, path + ": " + e.what());
  }
}

inline NodeId resolve_node(const Topology& topo, const std::string& name) {
  if (auto id = topo.find(name)) return *id;
  throw CliError(kUnknownNode, "unknown node '" + name + "'");
}

inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("SRPF_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CliError(kBadFlags, "SRPF_SEED is not an integer");
    }
  }
  return 1;
}

// Smallest physical delay from src to dst. Equals the least guarantee any
// segment list can give, since adjacency segments realize any path.
inline Metric min_delay(const Topology& topo, NodeId src, NodeId dst) {
  std::vector<Metric> dist(topo.node_count(), kInfinity);
  using Item = std::pair<Metric, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[src] = 0;
  heap.emplace(0, src);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;
    for (EdgeIndex ei : topo.out_edges(u)) {
      const Edge& e = topo.edge(ei);
      if (d + e.delay < dist[e.dst]) {
        dist[e.dst] = d + e.delay;
        heap.emplace(dist[e.dst], e.dst);
      }
    }
  }
  return dist[dst];
}

enum class Mode { kRoutourne, kClique, kOracle };

inline Mode parse_mode(const std::string& s) {
  if (s == "routourne") return Mode::kRoutourne;
  if (s == "clique") return Mode::kClique;
  if (s == "oracle") return Mode::kOracle;
  throw CliError(kBadFlags, "unknown mode '" + s + "'");
}

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::kRoutourne:
      return "routourne";
    case Mode::kClique:
      return "clique";
    case Mode::kOracle:
      return "oracle";
  }
  return "?";
}

struct SolveOptions {
  std::string topo;
  std::string src;
  std::optional<std::string> dst;
  std::optional<Metric> delay_bound;
  int msd = 10;
  std::string mode = "routourne";
  bool diversity = false;
  bool dump_segdb = false;
};

inline int cmd_solve(const SolveOptions& opt, std::ostream& out,
                     std::ostream& err) {
  const Mode mode = parse_mode(opt.mode);
  const Topology topo = load_topology(opt.topo);
  Query q;
  q.src = resolve_node(topo, opt.src);
  if (opt.dst) q.dst = resolve_node(topo, *opt.dst);
  q.delay_bound = opt.delay_bound;
  q.msd = opt.msd;
  q.diversity =
      opt.diversity ? DiversityMode::kMaxDiversity : DiversityMode::kStandard;

  const SegmentDb db = build_segment_db(topo);
  if (opt.dump_segdb) write_segment_db_csv(err, db, topo);

  Solutions sols;
  switch (mode) {
    case Mode::kRoutourne:
      sols = solve(db, topo, q).solutions;
      break;
    case Mode::kClique:
      sols = solve_clique(build_sr_graph(db, topo), topo, q).solutions;
      break;
    case Mode::kOracle:
      if (q.dst) {
        sols[*q.dst] =
            enumerate_fronts(db, topo, q.src, *q.dst, q.msd, q.delay_bound);
      } else {
        sols = enumerate_all_fronts(db, topo, q.src, q.msd, q.delay_bound);
      }
      break;
  }
  write_solutions_csv(out, topo, sols);
  return kOk;
}

struct BenchOptions {
  std::optional<std::string> topo;
  std::size_t random_n = 0;
  double avg_degree = 4.0;
  std::uint64_t seed = 1;
  std::uint32_t cost_min = 1;
  std::uint32_t cost_max = 5;
  std::uint32_t delay_min = 1;
  std::uint32_t delay_max = 10;
  int instances = 1;
  std::string pairs = "10";
  std::optional<double> delay_bound_factor;
  int msd = 10;
  std::vector<std::string> modes{"routourne", "clique"};
  int repeat = 1;
};

struct BenchRow {
  std::string instance;
  std::string src;
  std::string dst;
  std::string mode;
  std::int64_t runtime_ns = 0;
  std::size_t labels_pushed = 0;
  std::size_t labels_stored = 0;
  double front_overhead_ratio = 1.0;
};

inline void write_bench_header(std::ostream& out) {
  out << "instance,src,dst,mode,runtime_ns,labels_pushed,labels_stored,"
         "front_overhead_ratio\n";
}

inline void write_bench_row(std::ostream& out, const BenchRow& r) {
  out << r.instance << ',' << r.src << ',' << r.dst << ',' << r.mode << ','
      << r.runtime_ns << ',' << r.labels_pushed << ',' << r.labels_stored << ','
      << std::fixed << std::setprecision(4) << r.front_overhead_ratio
      << std::defaultfloat << '\n';
}

// Ordered pairs (src != dst): all of them, or k distinct ones drawn with a
// generator seeded from `seed`.
inline std::vector<std::pair<NodeId, NodeId>> pick_pairs(
    std::size_t n, const std::string& spec, std::uint64_t seed) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  const std::size_t total = n * (n - 1);
  std::size_t k = total;
  if (spec != "all") {
    try {
      std::size_t used = 0;
      k = std::stoull(spec, &used);
      if (used != spec.size()) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
      throw CliError(kBadFlags, "--pairs expects an integer or 'all'");
    }
  }
  if (k >= total) {
    for (NodeId s = 0; s < n; ++s)
      for (NodeId d = 0; d < n; ++d)
        if (s != d) pairs.emplace_back(s, d);
    return pairs;
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::set<std::pair<NodeId, NodeId>> seen;
  while (pairs.size() < k) {
    const auto s = static_cast<NodeId>(detail::draw(rng, 0, n - 1));
    const auto d = static_cast<NodeId>(detail::draw(rng, 0, n - 1));
    if (s == d || !seen.emplace(s, d).second) continue;
    pairs.emplace_back(s, d);
  }
  return pairs;
}

// Runs one (instance, pair) cell for each mode and repetition.
inline std::vector<BenchRow> bench_instance(const std::string& name,
                                            const Topology& topo,
                                            const BenchOptions& opt,
                                            std::uint64_t pair_seed) {
  std::vector<Mode> modes;
  for (const auto& m : opt.modes) modes.push_back(parse_mode(m));
  if (opt.repeat < 1) throw CliError(kBadFlags, "--repeat must be >= 1");
  if (opt.msd < 1) throw CliError(kBadFlags, "--msd must be >= 1");

  const SegmentDb db = build_segment_db(topo);
  const SrGraph sr = build_sr_graph(db, topo);
  Pathfinder<> finder(db, topo);
  CliqueSolver clique(sr, topo);

  std::vector<BenchRow> rows;
  for (auto [s, d] : pick_pairs(topo.node_count(), opt.pairs, pair_seed)) {
    Query q;
    q.src = s;
    q.dst = d;
    q.msd = opt.msd;
    if (opt.delay_bound_factor) {
      const Metric lo = min_delay(topo, s, d);
      if (lo != kInfinity)
        q.delay_bound =
            static_cast<Metric>(*opt.delay_bound_factor * static_cast<double>(lo));
    }
    for (Mode mode : modes) {
      for (int rep = 0; rep < opt.repeat; ++rep) {
        BenchRow row{name, topo.name(s), topo.name(d), mode_name(mode)};
        const auto t0 = std::chrono::steady_clock::now();
        switch (mode) {
          case Mode::kRoutourne: {
            const SearchResult r = finder.run(q);
            row.labels_pushed = r.stats.labels_pushed;
            row.labels_stored = r.stats.labels_stored;
            row.front_overhead_ratio = r.stats.front_overhead_ratio();
            break;
          }
          case Mode::kClique: {
            const SearchResult r = clique.run(q);
            row.labels_pushed = r.stats.labels_pushed;
            row.labels_stored = r.stats.labels_stored;
            break;
          }
          case Mode::kOracle: {
            OracleStats os;
            const Solutions all =
                enumerate_all_fronts(db, topo, s, q.msd, q.delay_bound, &os);
            row.labels_pushed = os.lists_enumerated;
            if (auto it = all.find(d); it != all.end())
              row.labels_stored = it->second.size();
            break;
          }
        }
        row.runtime_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

inline int cmd_bench(const BenchOptions& opt, std::ostream& out) {
  if (opt.topo.has_value() == (opt.random_n > 0))
    throw CliError(kBadFlags, "give exactly one of --topo or --random-n");
  write_bench_header(out);
  if (opt.topo) {
    const Topology topo = load_topology(*opt.topo);
    std::string name = *opt.topo;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
      name = name.substr(slash + 1);
    for (const auto& row : bench_instance(name, topo, opt, opt.seed))
      write_bench_row(out, row);
    return kOk;
  }
  if (opt.instances < 0) throw CliError(kBadFlags, "--instances must be >= 0");
  for (int i = 0; i < opt.instances; ++i) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
    Topology topo;
    try {
      topo = generate_random(opt.random_n, opt.avg_degree,
                             {opt.cost_min, opt.cost_max},
                             {opt.delay_min, opt.delay_max}, seed);
    } catch (const std::invalid_argument& e) {
      throw CliError(kBadFlags, e.what());
    }
    std::ostringstream name;
    name << "random-n" << opt.random_n << "-d" << opt.avg_degree << "-s"
         << seed;
    for (const auto& row : bench_instance(name.str(), topo, opt, seed))
      write_bench_row(out, row);
  }
  return kOk;
}

struct OracleCheckOptions {
  int count = 10;
  int n = 8;
  int msd = 4;
  std::uint64_t seed = 1;
};

// Criterion-style instance family: |V| uniform in [min(4, max_n), max_n],
// average out-degree 2.5, costs [1,5], delays [1,10].
inline Topology oracle_instance(int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int lo = std::min(4, max_n);
  const auto n = static_cast<std::size_t>(
      detail::draw(rng, static_cast<std::uint64_t>(lo),
                   static_cast<std::uint64_t>(max_n)));
  const double degree = std::min(2.5, static_cast<double>(n) - 1.0);
  return generate_random(n, degree, {1, 5}, {1, 10}, seed);
}

inline std::string format_triples(const std::set<Triple>& ts) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [c, d, k] : ts) {
    if (!first) out << ' ';
    first = false;
    out << '(' << c << ',' << d << ',' << k << ')';
  }
  out << '}';
  return out.str();
}

inline int cmd_oracle_check(const OracleCheckOptions& opt, std::ostream& out) {
  if (opt.count < 0) throw CliError(kBadFlags, "--count must be >= 0");
  if (opt.n < 2 || opt.n > 8) throw CliError(kBadFlags, "--n must be in [2,8]");
  if (opt.msd < 1 || opt.msd > 4)
    throw CliError(kBadFlags, "--msd must be in [1,4]");
  std::size_t pairs = 0;
  for (int i = 0; i < opt.count; ++i) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
    const Topology topo = oracle_instance(opt.n, seed);
    const SegmentDb db = build_segment_db(topo);
    const SrGraph sr = build_sr_graph(db, topo);
    Pathfinder<> finder(db, topo);
    CliqueSolver clique(sr, topo);
    for (NodeId s = 0; s < topo.node_count(); ++s) {
      const Solutions oracle =
          enumerate_all_fronts(db, topo, s, opt.msd, std::nullopt);
      for (NodeId d = 0; d < topo.node_count(); ++d) {
        Query q;
        q.src = s;
        q.dst = d;
        q.msd = opt.msd;
        const auto a = triples(finder.run(q).solutions.at(d));
        const auto b = triples(clique.run(q).solutions.at(d));
        std::set<Triple> c;
        if (auto it = oracle.find(d); it != oracle.end()) c = triples(it->second);
        ++pairs;
        if (a != c || b != c) {
          out << "FAIL instance " << i << " (seed " << seed << ") pair "
              << topo.name(s) << " -> " << topo.name(d) << "\n"
              << "routourne " << format_triples(a) << "\n"
              << "clique    " << format_triples(b) << "\n"
              << "oracle    " << format_triples(c) << "\n"
              << serialize_topology(topo);
          return kMismatch;
        }
      }
    }
  }
  out << "PASS " << opt.count << " instances, " << pairs << " pairs\n";
  return kOk;
}

// Entry point shared by the binary and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Segment-routing path computation"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  Metric delay_bound = 0;
  auto* solve_cmd = app.add_subcommand("solve", "Compute Pareto segment lists");
  solve_cmd->add_option("--topo", solve_opt.topo, "Topology file")->required();
  solve_cmd->add_option("--src", solve_opt.src, "Source node")->required();
  auto* dst_opt = solve_cmd->add_option("--dst", "Destination node");
  auto* bound_opt =
      solve_cmd->add_option("--delay-bound", delay_bound, "Delay bound (us)")
          ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--msd", solve_opt.msd, "Maximum segment depth")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--mode", solve_opt.mode, "routourne|clique|oracle")
      ->check(CLI::IsMember({"routourne", "clique", "oracle"}));
  solve_cmd->add_flag("--diversity", solve_opt.diversity,
                      "Return every distinct list per Pareto triple");
  solve_cmd->add_flag("--dump-segdb", solve_opt.dump_segdb,
                      "Write the segment table CSV to stderr");

  BenchOptions bench_opt;
  bench_opt.seed = 0;
  double bound_factor = 0;
  std::string modes = "routourne,clique";
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark engines");
  auto* topo_opt = bench_cmd->add_option("--topo", "Topology file");
  bench_cmd->add_option("--random-n", bench_opt.random_n, "Random graph size");
  bench_cmd->add_option("--avg-degree", bench_opt.avg_degree,
                        "Average out-degree");
  auto* bench_seed = bench_cmd->add_option("--seed", bench_opt.seed, "Seed");
  bench_cmd->add_option("--cost-min", bench_opt.cost_min);
  bench_cmd->add_option("--cost-max", bench_opt.cost_max);
  bench_cmd->add_option("--delay-min", bench_opt.delay_min);
  bench_cmd->add_option("--delay-max", bench_opt.delay_max);
  bench_cmd->add_option("--instances", bench_opt.instances,
                        "Generated graphs (seeds seed, seed+1, ...)");
  bench_cmd->add_option("--pairs", bench_opt.pairs, "Pair count or 'all'");
  auto* factor_opt =
      bench_cmd->add_option("--delay-bound-factor", bound_factor,
                            "Bound = factor x least achievable delay")
          ->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--msd", bench_opt.msd);
  bench_cmd->add_option("--modes", modes, "Comma-separated engines");
  bench_cmd->add_option("--repeat", bench_opt.repeat);

  OracleCheckOptions check_opt;
  auto* check_cmd = app.add_subcommand(
      "oracle-check", "Cross-check engines against exhaustive enumeration");
  check_cmd->add_option("--count", check_opt.count, "Instances");
  check_cmd->add_option("--n", check_opt.n, "Max nodes (<= 8)");
  check_cmd->add_option("--msd", check_opt.msd, "Maximum segment depth (<= 4)");
  auto* check_seed = check_cmd->add_option("--seed", check_opt.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kBadFlags;
  }

  try {
    if (*solve_cmd) {
      if (*dst_opt) solve_opt.dst = dst_opt->as<std::string>();
      if (*bound_opt) solve_opt.delay_bound = delay_bound;
      return cmd_solve(solve_opt, out, err);
    }
    if (*bench_cmd) {
      if (*topo_opt) bench_opt.topo = topo_opt->as<std::string>();
      if (!*bench_seed) bench_opt.seed = default_seed();
      if (*factor_opt) bench_opt.delay_bound_factor = bound_factor;
      bench_opt.modes.clear();
      std::stringstream ss(modes);
      for (std::string m; std::getline(ss, m, ',');)
        if (!m.empty()) bench_opt.modes.push_back(m);
      return cmd_bench(bench_opt, out);
    }
    if (*check_cmd) {
      if (!*check_seed) check_opt.seed = default_seed();
      return cmd_oracle_check(check_opt, out);
    }
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadFlags;
  }
  return kBadFlags;
}

}  // namespace srpf::cli

#endif  // SRPF_TOOLS_CLI_HPP_
