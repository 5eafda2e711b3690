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

#include "srpf/segment_db.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "test_util.hpp"

namespace srpf {
namespace {

using testing::Instance;

TEST(SegmentDb, G1Entries) {
  const Instance g(testing::kG1);
  EXPECT_EQ(lookup(g.db, g.id("S"), g.id("D")), (PairEntry{2, 4}));
  EXPECT_EQ(lookup(g.db, g.id("A"), g.id("D")), (PairEntry{1, 1}));
  EXPECT_EQ(lookup(g.db, g.id("S"), g.id("B")), (PairEntry{1, 3}));
  // Directed, no return edges.
  EXPECT_EQ(lookup(g.db, g.id("D"), g.id("S")), (PairEntry{kInfinity, kInfinity}));
  EXPECT_FALSE(lookup(g.db, g.id("D"), g.id("S")).connected());
}

TEST(SegmentDb, Reflexive) {
  for (int i = 0; i < 10; ++i) {
    const Instance g(testing::small_random(i));
    for (NodeId v = 0; v < g.topo.node_count(); ++v)
      EXPECT_EQ(g.db.lookup(v, v), (PairEntry{0, 0}));
  }
}

TEST(SegmentDb, MatchesPathEnumeration) {
  for (int i = 0; i < 60; ++i) {
    const Instance g(testing::small_random(i, 77));
    const auto n = static_cast<NodeId>(g.topo.node_count());
    for (NodeId s = 0; s < n; ++s)
      for (NodeId t = 0; t < n; ++t)
        ASSERT_EQ(g.db.lookup(s, t), testing::brute_force_pair(g.topo, s, t))
            << "instance " << i << " pair " << s << "->" << t;
  }
}

TEST(SegmentDb, BellmanRecurrences) {
  for (int i = 0; i < 30; ++i) {
    const Instance g(generate_random(12, 3, {1, 4}, {0, 20}, 500 + i));
    const auto n = static_cast<NodeId>(g.topo.node_count());
    for (NodeId s = 0; s < n; ++s) {
      for (NodeId w = 0; w < n; ++w) {
        if (w == s) continue;
        Metric best = kInfinity;
        for (const Edge& e : g.topo.edges())
          if (e.dst == w)
            best = std::min(best, saturating_add(g.db.dist(s, e.src), e.cost));
        EXPECT_EQ(g.db.dist(s, w), best);
        Metric worst = -1;
        for (const Edge& e : g.topo.edges())
          if (e.dst == w && g.db.on_dag(s, e))
            worst = std::max(worst, g.db.worst_delay(s, e.src) + e.delay);
        EXPECT_EQ(g.db.worst_delay(s, w), worst);
      }
    }
  }
}

TEST(SegmentDb, UniformWeightsGiveHopDistance) {
  const Topology t = parse_topology("a b 3 1\nb c 3 1\nc d 3 1\na d 3 1\n");
  const SegmentDb db = build_segment_db(t);
  EXPECT_EQ(db.dist(0, 2), 6);  // a-b-c or a-d-c
  EXPECT_EQ(db.dist(0, 3), 3);
  EXPECT_EQ(db.worst_delay(0, 2), 2);
}

TEST(SegmentDb, ParallelEdgesUseCheapest) {
  const Topology t = parse_topology("directed\na b 5 1\na b 2 9\n");
  const SegmentDb db = build_segment_db(t);
  EXPECT_EQ(db.lookup(0, 1), (PairEntry{2, 9}));
}

TEST(SegmentDb, SaturatingArithmetic) {
  EXPECT_EQ(saturating_add(kInfinity, 5), kInfinity);
  EXPECT_EQ(saturating_add(5, kInfinity), kInfinity);
  EXPECT_EQ(saturating_add(kInfinity - 1, 5), kInfinity);
  EXPECT_EQ(saturating_add(2, 3), 5);
}

TEST(IsShortestExtension, Examples) {
  const Instance g1(testing::kG1);
  EXPECT_TRUE(is_shortest_extension(g1.db, g1.id("S"), g1.id("A"),
                                    g1.topo.edge(g1.edge("A", "D"))));
  // S->B has cost 1, so B->C continues a shortest S~>C path.
  const Instance g2(testing::kG2);
  EXPECT_TRUE(is_shortest_extension(g2.db, g2.id("S"), g2.id("B"),
                                    g2.topo.edge(g2.edge("B", "C"))));
  const Instance t1(testing::kT1);
  EXPECT_FALSE(is_shortest_extension(t1.db, t1.id("X"), t1.id("X"),
                                     t1.topo.edge(t1.edge("X", "Y"))));
  EXPECT_TRUE(is_shortest_extension(t1.db, t1.id("X"), t1.id("X"),
                                    t1.topo.edge(t1.edge("X", "Z"))));
  // Wrong tail node.
  EXPECT_FALSE(is_shortest_extension(t1.db, t1.id("X"), t1.id("Y"),
                                     t1.topo.edge(t1.edge("X", "Z"))));
}

TEST(SegmentDb, CsvDump) {
  const Instance g(testing::kT1);
  std::ostringstream out;
  write_segment_db_csv(out, g.db, g.topo);
  const std::string csv = out.str();
  EXPECT_EQ(csv.rfind("src,dst,igp_dist,worst_delay\n", 0), 0u);
  EXPECT_NE(csv.find("X,Y,2,20\n"), std::string::npos);
  EXPECT_NE(csv.find("Y,X,inf,inf\n"), std::string::npos);
}

}  // namespace
}  // namespace srpf
