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

#ifndef SRPF_TOPOLOGY_HPP_
#define SRPF_TOPOLOGY_HPP_

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace srpf {

using NodeId = std::uint32_t;
using EdgeIndex = std::uint32_t;
// Path sums. Link weights fit 32 bits, sums are accumulated in 64.
using Metric = std::int64_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr EdgeIndex kNoEdge = std::numeric_limits<EdgeIndex>::max();

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  std::uint32_t cost = 1;   // IGP metric, >= 1
  std::uint32_t delay = 0;  // microseconds
  // Distinguishes parallel edges of the same ordered pair: 0, 1, ...
  std::uint32_t edge_id = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Directed multigraph. Undirected inputs are stored as pairs of directed
// edges at indices (2k, 2k+1). Immutable once built.
class Topology {
 public:
  Topology() = default;

  explicit Topology(bool directed) : directed_(directed) {}

  NodeId add_node(std::string name) {
    if (auto it = ids_.find(name); it != ids_.end()) return it->second;
    const auto id = static_cast<NodeId>(names_.size());
    ids_.emplace(name, id);
    names_.push_back(std::move(name));
    out_.emplace_back();
    return id;
  }

  // Adds one directed edge; edge_id is assigned per ordered pair.
  EdgeIndex add_edge(NodeId src, NodeId dst, std::uint32_t cost,
                     std::uint32_t delay) {
    if (src >= node_count() || dst >= node_count())
      throw std::out_of_range("edge endpoint out of range");
    if (src == dst) throw std::invalid_argument("self-loop");
    if (cost == 0) throw std::invalid_argument("edge cost must be >= 1");
    std::uint32_t parallel = 0;
    for (EdgeIndex e : out_[src])
      if (edges_[e].dst == dst) ++parallel;
    const auto index = static_cast<EdgeIndex>(edges_.size());
    edges_.push_back(Edge{src, dst, cost, delay, parallel});
    out_[src].push_back(index);
    return index;
  }

  // Adds a link in both directions when the topology is undirected.
  void add_link(NodeId a, NodeId b, std::uint32_t cost, std::uint32_t delay) {
    add_edge(a, b, cost, delay);
    if (!directed_) add_edge(b, a, cost, delay);
  }

  std::size_t node_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool directed() const { return directed_; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(NodeId v) const { return names_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  const std::vector<EdgeIndex>& out_edges(NodeId v) const { return out_[v]; }

  std::optional<NodeId> find(std::string_view name) const {
    if (auto it = ids_.find(std::string(name)); it != ids_.end())
      return it->second;
    return std::nullopt;
  }

 private:
  bool directed_ = false;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r')
      ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline std::uint32_t parse_weight(std::string_view token, std::size_t line,
                                  const char* what) {
  if (!token.empty() && token.front() == '-')
    throw ParseError(line, std::string("negative ") + what + " '" +
                               std::string(token) + "'");
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range ||
      (ec == std::errc() && value > std::numeric_limits<std::uint32_t>::max()))
    throw ParseError(line, std::string(what) + " overflows 32 bits '" +
                               std::string(token) + "'");
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, std::string("malformed ") + what + " '" +
                               std::string(token) + "'");
  return static_cast<std::uint32_t>(value);
}

}  // namespace detail

// Parses the topology text format:
//
//   # comment
//   directed | undirected        (optional header, default undirected)
//   <src> <dst> <cost> <delay>   (one link per line)
//
// Node ids follow first appearance. Throws ParseError.
inline Topology parse_topology(std::string_view text) {
  std::optional<Topology> topo;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;

    if (tokens.size() == 1) {
      if (tokens[0] == "directed" || tokens[0] == "undirected") {
        if (topo) throw ParseError(line_no, "header must precede all links");
        topo.emplace(tokens[0] == "directed");
        continue;
      }
      throw ParseError(line_no,
                       "unknown directive '" + std::string(tokens[0]) + "'");
    }
    if (tokens.size() != 4)
      throw ParseError(line_no, "expected '<src> <dst> <cost> <delay>', got " +
                                    std::to_string(tokens.size()) + " fields");
    if (!topo) topo.emplace(false);
    for (int i = 0; i < 2; ++i)
      if (tokens[i].find(',') != std::string_view::npos)
        throw ParseError(line_no, "node name may not contain ','");
    if (tokens[0] == tokens[1])
      throw ParseError(line_no, "self-loop on '" + std::string(tokens[0]) + "'");
    const auto cost = detail::parse_weight(tokens[2], line_no, "cost");
    const auto delay = detail::parse_weight(tokens[3], line_no, "delay");
    if (cost == 0) throw ParseError(line_no, "cost must be >= 1");
    const NodeId a = topo->add_node(std::string(tokens[0]));
    const NodeId b = topo->add_node(std::string(tokens[1]));
    topo->add_link(a, b, cost, delay);
  }
  return topo ? std::move(*topo) : Topology(false);
}

// Emits the same text format parse_topology reads.
inline std::string serialize_topology(const Topology& topo) {
  std::ostringstream out;
  out << (topo.directed() ? "directed" : "undirected") << '\n';
  const auto& edges = topo.edges();
  const std::size_t step = topo.directed() ? 1 : 2;
  for (std::size_t i = 0; i < edges.size(); i += step) {
    const Edge& e = edges[i];
    out << topo.name(e.src) << ' ' << topo.name(e.dst) << ' ' << e.cost << ' '
        << e.delay << '\n';
  }
  return out.str();
}

struct WeightRange {
  std::uint32_t lo = 1;
  std::uint32_t hi = 1;
};

namespace detail {

// Unbiased draw in [lo, hi]; independent of the standard library's
// distribution implementations so seeds reproduce across toolchains.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo,
                          std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return rng();
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % span;
}

}  // namespace detail

// Random strongly connected simple digraph with round(n * avg_degree) edges.
// A random Hamiltonian cycle guarantees strong connectivity; the remaining
// edges are distinct ordered pairs drawn uniformly. Nodes are named n0..n{n-1}.
inline Topology generate_random(std::size_t n, double avg_degree,
                                WeightRange cost, WeightRange delay,
                                std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_random: need n >= 2");
  if (!(avg_degree >= 1.0))
    throw std::invalid_argument("generate_random: need avg_degree >= 1");
  if (avg_degree >= static_cast<double>(n))
    throw std::invalid_argument("generate_random: avg_degree must be < n");
  if (cost.lo == 0 || cost.lo > cost.hi || delay.lo > delay.hi)
    throw std::invalid_argument("generate_random: bad weight range");
  const auto m = static_cast<std::size_t>(
      std::llround(static_cast<double>(n) * avg_degree));
  if (m > n * (n - 1))
    throw std::invalid_argument(
        "generate_random: more edges requested than ordered pairs");

  std::mt19937_64 rng(seed);
  Topology topo(true);
  for (std::size_t i = 0; i < n; ++i) topo.add_node("n" + std::to_string(i));

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  for (std::size_t i = n - 1; i > 0; --i)
    std::swap(order[i], order[detail::draw(rng, 0, i)]);

  std::vector<bool> used(n * n, false);
  auto add = [&](NodeId u, NodeId v) {
    used[u * n + v] = true;
    topo.add_edge(u, v,
                  static_cast<std::uint32_t>(detail::draw(rng, cost.lo, cost.hi)),
                  static_cast<std::uint32_t>(
                      detail::draw(rng, delay.lo, delay.hi)));
  };
  for (std::size_t i = 0; i < n; ++i) add(order[i], order[(i + 1) % n]);
  std::size_t placed = n;
  // Dense requests: enumerate the free pairs instead of rejection sampling.
  if (m * 2 > n * (n - 1)) {
    std::vector<std::pair<NodeId, NodeId>> free_pairs;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = 0; v < n; ++v)
        if (u != v && !used[u * n + v]) free_pairs.emplace_back(u, v);
    for (std::size_t i = 0; placed < m; ++i, ++placed) {
      std::swap(free_pairs[i],
                free_pairs[detail::draw(rng, i, free_pairs.size() - 1)]);
      add(free_pairs[i].first, free_pairs[i].second);
    }
  } else {
    while (placed < m) {
      const auto u = static_cast<NodeId>(detail::draw(rng, 0, n - 1));
      const auto v = static_cast<NodeId>(detail::draw(rng, 0, n - 1));
      if (u == v || used[u * n + v]) continue;
      add(u, v);
      ++placed;
    }
  }
  return topo;
}

// Forward and backward reachability from node 0.
inline bool strongly_connected(const Topology& topo) {
  const std::size_t n = topo.node_count();
  if (n == 0) return true;
  std::vector<std::vector<NodeId>> in(n);
  for (const Edge& e : topo.edges()) in[e.dst].push_back(e.src);
  auto reach_all = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<NodeId> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      auto visit = [&](NodeId v) {
        if (!seen[v]) {
          seen[v] = true;
          ++count;
          stack.push_back(v);
        }
      };
      if (forward) {
        for (EdgeIndex e : topo.out_edges(u)) visit(topo.edge(e).dst);
      } else {
        for (NodeId v : in[u]) visit(v);
      }
    }
    return count == n;
  };
  return reach_all(true) && reach_all(false);
}

}  // namespace srpf

#endif  // SRPF_TOPOLOGY_HPP_
