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

#ifndef SRPF_SEGMENT_DB_HPP_
#define SRPF_SEGMENT_DB_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <queue>
#include <utility>
#include <vector>

#include "srpf/topology.hpp"

namespace srpf {

inline constexpr Metric kInfinity = std::numeric_limits<Metric>::max();

constexpr Metric saturating_add(Metric a, Metric b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  if (a > kInfinity - b) return kInfinity;
  return a + b;
}

// What a node segment u -> v guarantees: its IGP cost, and the largest delay
// among all minimum-cost paths (any of them may be taken under ECMP).
struct PairEntry {
  Metric igp_dist = kInfinity;
  Metric worst_delay = kInfinity;

  bool connected() const { return igp_dist != kInfinity; }
  friend bool operator==(const PairEntry&, const PairEntry&) = default;
};

// All-pairs segment table. The full |V|^2 matrix is materialized so that the
// encoder's per-extension checks are two array reads.
class SegmentDb {
 public:
  SegmentDb() = default;

  explicit SegmentDb(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t node_count() const { return n_; }

  const PairEntry& lookup(NodeId u, NodeId v) const {
    return entries_[static_cast<std::size_t>(u) * n_ + v];
  }
  PairEntry& at(NodeId u, NodeId v) {
    return entries_[static_cast<std::size_t>(u) * n_ + v];
  }

  Metric dist(NodeId u, NodeId v) const { return lookup(u, v).igp_dist; }
  Metric worst_delay(NodeId u, NodeId v) const {
    return lookup(u, v).worst_delay;
  }

  // True iff e lies on the shortest-path DAG rooted at s.
  bool on_dag(NodeId s, const Edge& e) const {
    const Metric du = dist(s, e.src);
    return du != kInfinity && du + e.cost == dist(s, e.dst);
  }

 private:
  std::size_t n_ = 0;
  std::vector<PairEntry> entries_;
};

// One Dijkstra per source on IGP cost, then the worst delay by dynamic
// programming over the shortest-path DAG in pop order (costs are >= 1, so
// increasing distance is a topological order).
inline SegmentDb build_segment_db(const Topology& topo) {
  const std::size_t n = topo.node_count();
  SegmentDb db(n);
  std::vector<Metric> dist(n);
  std::vector<NodeId> order;
  order.reserve(n);
  std::vector<std::vector<EdgeIndex>> in(n);
  for (EdgeIndex e = 0; e < topo.edge_count(); ++e)
    in[topo.edge(e).dst].push_back(e);

  using Item = std::pair<Metric, NodeId>;
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kInfinity);
    order.clear();
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0;
    heap.emplace(0, s);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u]) continue;
      order.push_back(u);
      for (EdgeIndex ei : topo.out_edges(u)) {
        const Edge& e = topo.edge(ei);
        const Metric nd = d + e.cost;
        if (nd < dist[e.dst]) {
          dist[e.dst] = nd;
          heap.emplace(nd, e.dst);
        }
      }
    }
    for (NodeId v = 0; v < n; ++v) db.at(s, v).igp_dist = dist[v];
    db.at(s, s).worst_delay = 0;
    for (NodeId w : order) {
      if (w == s) continue;
      Metric worst = -1;
      for (EdgeIndex ei : in[w]) {
        const Edge& e = topo.edge(ei);
        if (dist[e.src] != kInfinity && dist[e.src] + e.cost == dist[w])
          worst = std::max(worst, db.worst_delay(s, e.src) + e.delay);
      }
      db.at(s, w).worst_delay = worst;
    }
  }
  return db;
}

inline const PairEntry& lookup(const SegmentDb& db, NodeId u, NodeId v) {
  return db.lookup(u, v);
}

// Whether a minimum-cost path s ~> u extended by e (u -> v) is still a
// minimum-cost path from s.
inline bool is_shortest_extension(const SegmentDb& db, NodeId s, NodeId u,
                                  const Edge& e) {
  const Metric du = db.dist(s, u);
  return e.src == u && du != kInfinity && du + e.cost == db.dist(s, e.dst);
}

// CSV dump: src,dst,igp_dist,worst_delay. Unreachable pairs print "inf".
inline void write_segment_db_csv(std::ostream& out, const SegmentDb& db,
                                 const Topology& topo) {
  out << "src,dst,igp_dist,worst_delay\n";
  auto metric = [&](Metric m) {
    if (m == kInfinity)
      out << "inf";
    else
      out << m;
  };
  for (NodeId u = 0; u < db.node_count(); ++u) {
    for (NodeId v = 0; v < db.node_count(); ++v) {
      const PairEntry& p = db.lookup(u, v);
      out << topo.name(u) << ',' << topo.name(v) << ',';
      metric(p.igp_dist);
      out << ',';
      metric(p.worst_delay);
      out << '\n';
    }
  }
}

}  // namespace srpf

#endif  // SRPF_SEGMENT_DB_HPP_
