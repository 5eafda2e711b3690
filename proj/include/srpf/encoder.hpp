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

// Greedy on-the-fly encoding of explored paths into segment lists.
//
// Every label carries an "open" segment: the last segment of its list, which
// starts at `open_src` and currently ends at `at`. Extending a label by an
// edge either pushes the open node segment one hop further, when the longer
// segment still guarantees the guide's cost and delay under any ECMP choice,
// or closes it at `at` and opens a fresh segment covering the new edge.

#ifndef SRPF_ENCODER_HPP_
#define SRPF_ENCODER_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "srpf/segment.hpp"
#include "srpf/segment_db.hpp"
#include "srpf/topology.hpp"

namespace srpf {

using LabelId = std::uint32_t;
inline constexpr LabelId kNoLabel = std::numeric_limits<LabelId>::max();

struct Label {
  NodeId at = kNoNode;
  Metric cost = 0;
  Metric delay = 0;
  // Closed segments plus the open one; 0 only for the source label.
  std::uint16_t nsegs = 0;
  NodeId open_src = kNoNode;
  Segment open;
  // Guide delay accumulated since open_src.
  Metric open_delay = 0;

  LabelId parent = kNoLabel;
  EdgeIndex via = kNoEdge;
  // Set when this extension closed the parent's open segment.
  bool closed_parent = false;

  // Future extensions depend only on this state and `at`: a node segment
  // from open_src always carries (dist, worst_delay) of the pair, while an
  // adjacency segment can never be pushed.
  bool same_open_state(const Label& other) const {
    return open_src == other.open_src && open.kind == other.open.kind;
  }
  bool open_pushable() const { return nsegs == 0 || open.is_node(); }
};

inline Label source_label(NodeId source) {
  Label l;
  l.at = source;
  l.open_src = source;
  l.open = Segment::node(source);
  return l;
}

// Extends `label` (stored as `self` in its pool) along edge `ei`.
inline Label extend_label(const SegmentDb& db, const Topology& topo,
                          const Label& label, LabelId self, EdgeIndex ei) {
  const Edge& e = topo.edge(ei);
  Label next;
  next.at = e.dst;
  next.cost = label.cost + e.cost;
  next.delay = label.delay + e.delay;
  next.parent = self;
  next.via = ei;

  // Adjacency segments are never pushed: their guide cost may exceed the
  // IGP distance that is_shortest_extension reasons about.
  if (label.open_pushable() && is_shortest_extension(db, label.open_src, label.at, e) &&
      db.worst_delay(label.open_src, e.dst) <= label.open_delay + e.delay) {
    next.nsegs = std::max<std::uint16_t>(label.nsegs, 1);
    next.open_src = label.open_src;
    next.open = Segment::node(e.dst);
    next.open_delay = label.open_delay + e.delay;
    return next;
  }

  next.nsegs = static_cast<std::uint16_t>(label.nsegs + 1);
  next.open_src = label.at;
  next.open_delay = e.delay;
  next.closed_parent = label.nsegs > 0;
  const PairEntry& hop = db.lookup(label.at, e.dst);
  if (e.cost == hop.igp_dist && hop.worst_delay <= e.delay)
    next.open = Segment::node(e.dst);
  else
    next.open = Segment::adjacency(topo, ei);
  return next;
}

// Append-only label storage; labels refer to their parents by index.
class LabelPool {
 public:
  LabelId add(const Label& l) {
    labels_.push_back(l);
    return static_cast<LabelId>(labels_.size() - 1);
  }
  const Label& operator[](LabelId id) const { return labels_[id]; }
  std::size_t size() const { return labels_.size(); }
  void clear() { labels_.clear(); }
  void reserve(std::size_t n) { labels_.reserve(n); }

  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

 private:
  std::vector<Label> labels_;
};

// Walks the parent chain: one segment per close event plus the final open
// segment. The result has exactly pool[id].nsegs segments.
inline SegmentList finalize_list(const LabelPool& pool, LabelId id) {
  SegmentList list;
  const Label* cur = &pool[id];
  if (cur->nsegs == 0) return list;
  list.push_back(cur->open);
  while (cur->parent != kNoLabel) {
    const Label& parent = pool[cur->parent];
    if (cur->closed_parent) list.push_back(parent.open);
    cur = &parent;
  }
  std::reverse(list.begin(), list.end());
  return list;
}

}  // namespace srpf

#endif  // SRPF_ENCODER_HPP_
