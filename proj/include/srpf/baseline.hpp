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

// Clique-transform baseline. Every arc of the SR graph is one segment, so the
// segment count becomes an ordinary additive metric and a plain Pareto
// label-setting search is exact on it.

#ifndef SRPF_BASELINE_HPP_
#define SRPF_BASELINE_HPP_

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "srpf/pareto.hpp"
#include "srpf/pathfinder.hpp"
#include "srpf/segment.hpp"
#include "srpf/segment_db.hpp"
#include "srpf/solution.hpp"
#include "srpf/topology.hpp"

namespace srpf {

struct SrArc {
  NodeId to = kNoNode;
  Metric cost = 0;
  Metric delay = 0;
  Segment segment;
};

struct SrGraph {
  std::vector<std::vector<SrArc>> out;
  std::size_t node_arcs = 0;
  std::size_t adjacency_arcs = 0;

  std::size_t node_count() const { return out.size(); }
  std::size_t arc_count() const { return node_arcs + adjacency_arcs; }
};

// One node-segment arc per connected ordered pair, plus one adjacency arc per
// physical edge unless the pair's node-segment arc is at least as good on
// both cost and delay.
inline SrGraph build_sr_graph(const SegmentDb& db, const Topology& topo) {
  const std::size_t n = topo.node_count();
  SrGraph g;
  g.out.resize(n);
  for (NodeId u = 0; u < n; ++u) {
    auto& arcs = g.out[u];
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      const PairEntry& p = db.lookup(u, v);
      if (!p.connected()) continue;
      arcs.push_back({v, p.igp_dist, p.worst_delay, Segment::node(v)});
      ++g.node_arcs;
    }
    for (EdgeIndex ei : topo.out_edges(u)) {
      const Edge& e = topo.edge(ei);
      const PairEntry& p = db.lookup(u, e.dst);
      if (p.igp_dist <= e.cost && p.worst_delay <= e.delay) continue;
      arcs.push_back({e.dst, e.cost, e.delay, Segment::adjacency(topo, ei)});
      ++g.adjacency_arcs;
    }
  }
  return g;
}

struct CliqueLabel {
  NodeId at = kNoNode;
  Metric cost = 0;
  Metric delay = 0;
  std::uint16_t nsegs = 0;
  std::uint32_t parent = kNoLabel;
  Segment segment;
};

// Plain 3-metric label-setting search on the SR graph. Same queue order,
// feasibility and destination pruning as Pathfinder.
class CliqueSolver {
 public:
  CliqueSolver(const SrGraph& g, const Topology& topo) : g_(g), topo_(topo) {}

  SearchResult run(const Query& q) {
    const std::size_t n = g_.node_count();
    detail::check_query(q, n);
    labels_.clear();
    alive_.clear();
    fronts_.assign(n, Front{});

    SearchResult result;
    SearchStats& stats = result.stats;
    const auto msd = static_cast<std::uint16_t>(q.msd);
    auto beaten_at_target = [&](const CliqueLabel& l) {
      if (!q.dst || l.at == *q.dst) return false;
      for (const Entry& f : fronts_[*q.dst].members())
        if (plain_dominates(f, l)) return true;
      return false;
    };
    std::priority_queue<detail::QueueItem> queue;
    auto admit = [&](const CliqueLabel& l) {
      const auto id = static_cast<LabelId>(labels_.size());
      labels_.push_back(l);
      alive_.push_back(true);
      const bool accepted =
          fronts_[l.at].insert(Entry{id, l.cost, l.delay, l.nsegs},
                               [&](const Entry& e) { alive_[e.id] = false; });
      if (!accepted) {
        alive_[id] = false;
        return;
      }
      queue.push({l.cost, l.delay, l.nsegs, id});
      ++stats.labels_pushed;
    };

    CliqueLabel source;
    source.at = q.src;
    admit(source);
    ++stats.labels_created;
    while (!queue.empty()) {
      const detail::QueueItem item = queue.top();
      queue.pop();
      if (!alive_[item.id]) continue;
      ++stats.labels_popped;
      const CliqueLabel label = labels_[item.id];
      if (label.nsegs >= msd || beaten_at_target(label)) continue;
      for (const SrArc& arc : g_.out[label.at]) {
        CliqueLabel child{arc.to,
                          label.cost + arc.cost,
                          label.delay + arc.delay,
                          static_cast<std::uint16_t>(label.nsegs + 1),
                          item.id,
                          arc.segment};
        ++stats.labels_created;
        if (q.delay_bound && child.delay > *q.delay_bound) continue;
        if (beaten_at_target(child)) continue;
        admit(child);
      }
    }
    stats.max_increment = 1;
    for (NodeId v = 0; v < n; ++v) {
      stats.labels_stored += fronts_[v].size();
      stats.plain_stored += fronts_[v].size();
    }
    if (stats.labels_stored > 0) stats.max_front_ratio = 1.0;

    auto collect = [&](NodeId v) {
      std::vector<PathSolution> candidates;
      for (const Entry& f : fronts_[v].members())
        candidates.push_back({f.cost, f.delay, f.nsegs, list_of(f.id)});
      return pareto_filter(topo_, std::move(candidates), q.diversity);
    };
    if (q.dst) {
      result.solutions[*q.dst] = collect(*q.dst);
    } else {
      for (NodeId v = 0; v < n; ++v)
        if (!fronts_[v].empty()) result.solutions[v] = collect(v);
    }
    return result;
  }

 private:
  struct Entry {
    LabelId id;
    Metric cost;
    Metric delay;
    std::uint16_t nsegs;
  };
  using Front = ParetoFront<Entry, PlainDominance>;

  SegmentList list_of(LabelId id) const {
    SegmentList list;
    for (LabelId cur = id; labels_[cur].parent != kNoLabel;
         cur = labels_[cur].parent)
      list.push_back(labels_[cur].segment);
    std::reverse(list.begin(), list.end());
    return list;
  }

  const SrGraph& g_;
  const Topology& topo_;
  std::vector<CliqueLabel> labels_;
  std::vector<bool> alive_;
  std::vector<Front> fronts_;
};

inline SearchResult solve_clique(const SrGraph& g, const Topology& topo,
                                 const Query& q) {
  CliqueSolver solver(g, topo);
  return solver.run(q);
}

}  // namespace srpf

#endif  // SRPF_BASELINE_HPP_
