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

#ifndef SRPF_TESTS_TEST_UTIL_HPP_
#define SRPF_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "srpf/srpf.hpp"

namespace srpf::testing {

inline constexpr const char* kG1 = R"(directed
S A 1 1
S B 1 3
A D 1 1
B D 1 1
)";

inline constexpr const char* kG2 = R"(directed
S A 1 1
A C 1 1
S B 1 2
B C 1 1
S F 1 9
F C 1 9
C D 1 1
A G 1 9
G D 1 9
)";

inline constexpr const char* kT1 = R"(directed
X Y 5 1
X Z 1 10
Z Y 1 10
)";

struct Instance {
  Topology topo;
  SegmentDb db;

  explicit Instance(const std::string& text)
      : topo(parse_topology(text)), db(build_segment_db(topo)) {}
  explicit Instance(Topology t) : topo(std::move(t)), db(build_segment_db(topo)) {}

  NodeId id(const std::string& name) const { return *topo.find(name); }
  EdgeIndex edge(const std::string& a, const std::string& b) const {
    for (EdgeIndex e : topo.out_edges(id(a)))
      if (topo.edge(e).dst == id(b)) return e;
    throw std::out_of_range("no edge " + a + "->" + b);
  }
};

// Small-instance family: |V| in [4,8], average out-degree 2.5, costs [1,5],
// delays [1,10].
inline Topology small_random(int i, std::uint64_t base_seed = 1000) {
  return generate_random(4 + static_cast<std::size_t>(i) % 5, 2.5, {1, 5},
                         {1, 10}, base_seed + static_cast<std::uint64_t>(i));
}

// Independent reference for the segment table: enumerate every simple path
// (minimum-cost paths are simple since costs are >= 1), then take the least
// cost and the largest delay among paths achieving it.
inline PairEntry brute_force_pair(const Topology& topo, NodeId s, NodeId t) {
  if (s == t) return {0, 0};
  PairEntry best;
  std::vector<bool> on_path(topo.node_count(), false);
  auto dfs = [&](auto&& self, NodeId u, Metric cost, Metric delay) -> void {
    if (u == t) {
      if (cost < best.igp_dist) {
        best = {cost, delay};
      } else if (cost == best.igp_dist) {
        best.worst_delay = std::max(best.worst_delay, delay);
      }
      return;
    }
    on_path[u] = true;
    for (EdgeIndex ei : topo.out_edges(u)) {
      const Edge& e = topo.edge(ei);
      if (!on_path[e.dst]) self(self, e.dst, cost + e.cost, delay + e.delay);
    }
    on_path[u] = false;
  };
  dfs(dfs, s, 0, 0);
  return best;
}

inline std::set<Triple> triple_set(std::initializer_list<Triple> ts) {
  return std::set<Triple>(ts);
}

}  // namespace srpf::testing

#endif  // SRPF_TESTS_TEST_UTIL_HPP_
