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

#include "srpf/encoder.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace srpf {
namespace {

using testing::Instance;

// Extends along a sequence of edges from `src`, storing every label.
LabelId walk(const Instance& g, LabelPool& pool, NodeId src,
             const std::vector<EdgeIndex>& edges) {
  LabelId id = pool.add(source_label(src));
  for (EdgeIndex e : edges)
    id = pool.add(extend_label(g.db, g.topo, pool[id], id, e));
  return id;
}

TEST(ExtendLabel, G1PushFromSource) {
  const Instance g(testing::kG1);
  const Label src = source_label(g.id("S"));
  const Label l = extend_label(g.db, g.topo, src, 0, g.edge("S", "A"));
  EXPECT_EQ(l.at, g.id("A"));
  EXPECT_EQ(l.cost, 1);
  EXPECT_EQ(l.delay, 1);
  EXPECT_EQ(l.nsegs, 1);
  EXPECT_EQ(l.open_src, g.id("S"));
  EXPECT_FALSE(l.closed_parent);
}

TEST(ExtendLabel, G1CloseOnWorstDelay) {
  const Instance g(testing::kG1);
  LabelPool pool;
  const LabelId id = walk(g, pool, g.id("S"), {g.edge("S", "A"), g.edge("A", "D")});
  const Label& l = pool[id];
  EXPECT_EQ(l.at, g.id("D"));
  EXPECT_EQ(l.cost, 2);
  EXPECT_EQ(l.delay, 2);
  EXPECT_EQ(l.nsegs, 2);
  EXPECT_EQ(l.open_src, g.id("A"));
  EXPECT_EQ(finalize_list(pool, id),
            (SegmentList{Segment::node(g.id("A")), Segment::node(g.id("D"))}));
}

TEST(ExtendLabel, G1PushAlongSlowPath) {
  const Instance g(testing::kG1);
  LabelPool pool;
  const LabelId id = walk(g, pool, g.id("S"), {g.edge("S", "B"), g.edge("B", "D")});
  const Label& l = pool[id];
  EXPECT_EQ(std::tie(l.cost, l.delay, l.nsegs), std::make_tuple(Metric{2}, Metric{4}, std::uint16_t{1}));
  EXPECT_EQ(l.open_src, g.id("S"));
  EXPECT_EQ(finalize_list(pool, id), SegmentList{Segment::node(g.id("D"))});
}

TEST(ExtendLabel, T1AdjacencyFallback) {
  const Instance g(testing::kT1);
  LabelPool pool;
  const LabelId id = walk(g, pool, g.id("X"), {g.edge("X", "Y")});
  const Label& l = pool[id];
  EXPECT_EQ(std::tie(l.cost, l.delay, l.nsegs), std::make_tuple(Metric{5}, Metric{1}, std::uint16_t{1}));
  EXPECT_EQ(l.open_src, g.id("X"));
  EXPECT_FALSE(l.open.is_node());
  EXPECT_EQ(format_segment_list(g.topo, finalize_list(pool, id)), "adj:X-Y#0");
}

TEST(ExtendLabel, AdjacencyOpenIsNeverPushed) {
  // X->Y costs more than the IGP route, so it is encoded as an adjacency.
  // dist(X,Y) + cost(Y->W) = dist(X,W), but the guide went through the
  // expensive link: the next hop must open a new segment.
  const Instance g("directed\nX Y 5 1\nX Z 1 10\nZ Y 1 10\nY W 1 1\n");
  LabelPool pool;
  const LabelId id = walk(g, pool, g.id("X"), {g.edge("X", "Y"), g.edge("Y", "W")});
  const Label& l = pool[id];
  EXPECT_EQ(l.nsegs, 2);
  EXPECT_EQ(l.open_src, g.id("Y"));
  EXPECT_EQ(format_segment_list(g.topo, finalize_list(pool, id)),
            "adj:X-Y#0,node:W");
  EXPECT_EQ(guaranteed_distance(g.db, g.topo, finalize_list(pool, id), g.id("X")),
            (Distance{6, 2}));
}

TEST(ExtendLabel, AdjacencyOpenIsNotPushedEvenWhenDelayAllows) {
  // Here the IGP route X~>W is fast enough, so a node segment to W would
  // satisfy the delay test, but it would not follow the guide.
  const Instance g("directed\nX Y 5 10\nX Z 1 1\nZ Y 1 1\nY W 1 1\n");
  LabelPool pool;
  const LabelId id = walk(g, pool, g.id("X"), {g.edge("X", "Y"), g.edge("Y", "W")});
  const Label& l = pool[id];
  EXPECT_EQ(std::tie(l.cost, l.delay, l.nsegs),
            std::make_tuple(Metric{6}, Metric{11}, std::uint16_t{2}));
  const SegmentList list = finalize_list(pool, id);
  EXPECT_EQ(format_segment_list(g.topo, list), "adj:X-Y#0,node:W");
  EXPECT_EQ(guaranteed_distance(g.db, g.topo, list, g.id("X")), (Distance{6, 11}));
}

TEST(ExtendLabel, ParallelEdgeAdjacencyNamesTraversedEdge) {
  const Instance g("directed\na b 1 5\na b 3 1\n");
  const EdgeIndex slow_cheap = g.topo.out_edges(g.id("a"))[0];
  const EdgeIndex fast_dear = g.topo.out_edges(g.id("a"))[1];
  LabelPool pool;
  EXPECT_EQ(format_segment_list(
                g.topo, finalize_list(pool, walk(g, pool, g.id("a"), {slow_cheap}))),
            "node:b");
  EXPECT_EQ(format_segment_list(
                g.topo, finalize_list(pool, walk(g, pool, g.id("a"), {fast_dear}))),
            "adj:a-b#1");
}

TEST(FinalizeList, SourceLabelIsEmpty) {
  LabelPool pool;
  const LabelId id = pool.add(source_label(3));
  EXPECT_TRUE(finalize_list(pool, id).empty());
}

TEST(GuaranteedDistance, Examples) {
  const Instance g(testing::kG1);
  const NodeId s = g.id("S");
  EXPECT_EQ(guaranteed_distance(g.db, g.topo, {}, s), (Distance{0, 0}));
  EXPECT_EQ(guaranteed_distance(g.db, g.topo, {Segment::node(g.id("D"))}, s),
            (Distance{2, 4}));
  EXPECT_EQ(guaranteed_distance(
                g.db, g.topo,
                {Segment::node(g.id("A")), Segment::node(g.id("D"))}, s),
            (Distance{2, 2}));
  EXPECT_EQ(guaranteed_distance(g.db, g.topo, {Segment::node(s)}, g.id("D")),
            (Distance{kInfinity, kInfinity}));
  EXPECT_THROW(guaranteed_distance(
                   g.db, g.topo, {Segment::adjacency(g.topo, g.edge("A", "D"))}, s),
               std::invalid_argument);
}

// Fewest segments that cover a fixed guide path with a guarantee no worse
// than the guide: interval DP, independent of the greedy encoder.
int min_segments_for_guide(const Instance& g, NodeId src,
                           const std::vector<EdgeIndex>& path) {
  const std::size_t m = path.size();
  if (m == 0) return 0;
  std::vector<NodeId> nodes{src};
  for (EdgeIndex e : path) nodes.push_back(g.topo.edge(e).dst);
  std::vector<int> best(m + 1, 1 << 20);
  best[0] = 0;
  for (std::size_t j = 1; j <= m; ++j) {
    best[j] = best[j - 1] + 1;  // adjacency segment for the last edge
    Metric cost = 0;
    Metric delay = 0;
    for (std::size_t i = j; i-- > 0;) {
      cost += g.topo.edge(path[i]).cost;
      delay += g.topo.edge(path[i]).delay;
      const PairEntry& p = g.db.lookup(nodes[i], nodes[j]);
      if (p.igp_dist == cost && p.worst_delay <= delay)
        best[j] = std::min(best[j], best[i] + 1);
    }
  }
  return best[m];
}

TEST(EncoderProperty, RandomWalksAreSoundMinimalAndIncremental) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 80; ++i) {
    const Instance g(testing::small_random(i, 9000));
    for (int w = 0; w < 25; ++w) {
      LabelPool pool;
      const auto src = static_cast<NodeId>(rng() % g.topo.node_count());
      LabelId id = pool.add(source_label(src));
      std::vector<EdgeIndex> path;
      const int steps = static_cast<int>(rng() % 9);
      for (int k = 0; k < steps; ++k) {
        const auto& out = g.topo.out_edges(pool[id].at);
        const EdgeIndex e = out[rng() % out.size()];
        const Label child = extend_label(g.db, g.topo, pool[id], id, e);
        const int inc = child.nsegs - pool[id].nsegs;
        ASSERT_TRUE(inc == 0 || inc == 1);
        id = pool.add(child);
        path.push_back(e);

        const Label& l = pool[id];
        const SegmentList list = finalize_list(pool, id);
        ASSERT_EQ(list.size(), l.nsegs);
        ASSERT_EQ(list.back().target, l.at);
        ASSERT_EQ(guaranteed_distance(g.db, g.topo, list, src),
                  (Distance{l.cost, l.delay}));
        ASSERT_EQ(l.nsegs, min_segments_for_guide(g, src, path));
      }
    }
  }
}

}  // namespace
}  // namespace srpf
