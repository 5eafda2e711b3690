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

#ifndef SRPF_SEGMENT_HPP_
#define SRPF_SEGMENT_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "srpf/segment_db.hpp"
#include "srpf/topology.hpp"

namespace srpf {

// A detour instruction. A node segment reaches `target` over any IGP
// shortest path; an adjacency segment crosses exactly one link.
struct Segment {
  enum class Kind : std::uint8_t { kNode, kAdjacency };

  Kind kind = Kind::kNode;
  NodeId target = kNoNode;  // endpoint, for both kinds
  EdgeIndex edge = kNoEdge; // adjacency only

  static Segment node(NodeId target) {
    return Segment{Kind::kNode, target, kNoEdge};
  }
  static Segment adjacency(const Topology& topo, EdgeIndex e) {
    return Segment{Kind::kAdjacency, topo.edge(e).dst, e};
  }

  bool is_node() const { return kind == Kind::kNode; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Ordered segments; the start is the query source, left implicit.
using SegmentList = std::vector<Segment>;

struct Distance {
  Metric cost = 0;
  Metric delay = 0;

  friend bool operator==(const Distance&, const Distance&) = default;
};

// `node:<name>` or `adj:<src>-<dst>#<edge_id>`.
inline std::string format_segment(const Topology& topo, const Segment& s) {
  if (s.is_node()) return "node:" + topo.name(s.target);
  const Edge& e = topo.edge(s.edge);
  return "adj:" + topo.name(e.src) + "-" + topo.name(e.dst) + "#" +
         std::to_string(e.edge_id);
}

inline std::string format_segment_list(const Topology& topo,
                                       const SegmentList& list) {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ',';
    out += format_segment(topo, list[i]);
  }
  return out;
}

// Distance the list guarantees from `source`: node segments contribute their
// IGP distance and worst ECMP delay, adjacency segments their link weights.
// Throws std::invalid_argument if an adjacency segment does not start where
// the previous segment ended.
inline Distance guaranteed_distance(const SegmentDb& db, const Topology& topo,
                                    const SegmentList& list, NodeId source) {
  Distance total;
  NodeId at = source;
  for (const Segment& s : list) {
    if (s.is_node()) {
      const PairEntry& p = db.lookup(at, s.target);
      total.cost = saturating_add(total.cost, p.igp_dist);
      total.delay = saturating_add(total.delay, p.worst_delay);
      at = s.target;
    } else {
      const Edge& e = topo.edge(s.edge);
      if (e.src != at)
        throw std::invalid_argument("segment list does not chain: " +
                                    format_segment(topo, s) + " after " +
                                    topo.name(at));
      total.cost = saturating_add(total.cost, e.cost);
      total.delay = saturating_add(total.delay, e.delay);
      at = e.dst;
    }
  }
  return total;
}

}  // namespace srpf

#endif  // SRPF_SEGMENT_HPP_
