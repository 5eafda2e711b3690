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

// Exhaustive reference: every chaining segment list of length <= msd, scored
// with guaranteed_distance, then Pareto-filtered. Cost grows as
// O((|V| + |E|)^msd); keep it to desk-sized graphs.

#ifndef SRPF_ORACLE_HPP_
#define SRPF_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "srpf/pareto.hpp"
#include "srpf/segment.hpp"
#include "srpf/segment_db.hpp"
#include "srpf/solution.hpp"
#include "srpf/topology.hpp"

namespace srpf {

struct OracleStats {
  std::size_t lists_enumerated = 0;
};

// Pareto sets for every destination reachable from src.
inline Solutions enumerate_all_fronts(const SegmentDb& db, const Topology& topo,
                                      NodeId src, int msd,
                                      std::optional<Metric> delay_bound,
                                      OracleStats* stats = nullptr) {
  const std::size_t n = topo.node_count();
  // Plain Pareto fronts; the first list found for a triple is its witness.
  std::vector<ParetoFront<PathSolution, PlainDominance>> found(n);
  SegmentList list;
  std::size_t enumerated = 0;

  auto record = [&](NodeId at) {
    ++enumerated;
    const Distance d = guaranteed_distance(db, topo, list, src);
    if (delay_bound && d.delay > *delay_bound) return;
    found[at].insert(
        PathSolution{d.cost, d.delay, static_cast<int>(list.size()), list});
  };
  // Each call extends `list` from `at` by one more segment. Delay only grows,
  // so over-bound prefixes are cut.
  auto descend = [&](auto&& self, NodeId at, Metric delay) -> void {
    record(at);
    if (static_cast<int>(list.size()) >= msd) return;
    auto try_segment = [&](const Segment& s, NodeId next, Metric seg_delay) {
      const Metric nd = saturating_add(delay, seg_delay);
      if (delay_bound && nd > *delay_bound) return;
      list.push_back(s);
      self(self, next, nd);
      list.pop_back();
    };
    for (NodeId t = 0; t < n; ++t) {
      if (t == at || !db.lookup(at, t).connected()) continue;
      try_segment(Segment::node(t), t, db.worst_delay(at, t));
    }
    for (EdgeIndex e : topo.out_edges(at))
      try_segment(Segment::adjacency(topo, e), topo.edge(e).dst,
                  topo.edge(e).delay);
  };
  descend(descend, src, 0);
  if (stats) stats->lists_enumerated += enumerated;

  Solutions out;
  for (NodeId v = 0; v < n; ++v)
    if (!found[v].empty())
      out[v] = pareto_filter(topo, found[v].members(),
                             DiversityMode::kStandard);
  return out;
}

inline std::vector<PathSolution> enumerate_fronts(
    const SegmentDb& db, const Topology& topo, NodeId src, NodeId dst, int msd,
    std::optional<Metric> delay_bound) {
  Solutions all = enumerate_all_fronts(db, topo, src, msd, delay_bound);
  auto it = all.find(dst);
  if (it == all.end()) return {};
  return std::move(it->second);
}

}  // namespace srpf

#endif  // SRPF_ORACLE_HPP_
