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

// Label-setting search over (cost, delay, segment count) that returns
// deployable segment lists directly. Each explored path is encoded as it is
// extended (see encoder.hpp), and per-node fronts are kept under extended
// dominance so that labels which may recover a segment later survive.

#ifndef SRPF_PATHFINDER_HPP_
#define SRPF_PATHFINDER_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "srpf/encoder.hpp"
#include "srpf/pareto.hpp"
#include "srpf/segment_db.hpp"
#include "srpf/solution.hpp"
#include "srpf/topology.hpp"

namespace srpf {

// Compact front member; the full label lives in the pool.
struct FrontEntry {
  LabelId id = kNoLabel;
  Metric cost = 0;
  Metric delay = 0;
  std::uint16_t nsegs = 0;
  NodeId open_src = kNoNode;
  Segment::Kind open_kind = Segment::Kind::kNode;

  static FrontEntry of(const Label& l, LabelId id) {
    return {id, l.cost, l.delay, l.nsegs, l.open_src, l.open.kind};
  }
  bool same_open_state(const FrontEntry& o) const {
    return open_src == o.open_src && open_kind == o.open_kind;
  }
  bool open_pushable() const {
    return nsegs == 0 || open_kind == Segment::Kind::kNode;
  }
};

struct NullObserver {
  void on_extend(const LabelPool&, const Label& /*parent*/,
                 const Label& /*child*/) {}
};

namespace detail {

struct QueueItem {
  Metric cost;
  Metric delay;
  std::uint16_t nsegs;
  LabelId id;

  auto key() const { return std::tie(cost, delay, nsegs, id); }
  // Inverted for std::priority_queue's max-heap.
  bool operator<(const QueueItem& o) const { return o.key() < key(); }
};

inline void check_query(const Query& q, std::size_t n) {
  if (q.src >= n) throw std::out_of_range("query source out of range");
  if (q.dst && *q.dst >= n)
    throw std::out_of_range("query destination out of range");
  if (q.msd < 1) throw std::invalid_argument("msd must be >= 1");
  if (q.delay_bound && *q.delay_bound < 0)
    throw std::invalid_argument("delay bound must be >= 0");
}

}  // namespace detail

// Reusable search state for one topology. Not thread-safe; use one instance
// per thread over the shared SegmentDb/Topology.
template <class Dominance = ExtendedDominance>
class Pathfinder {
 public:
  using Front = ParetoFront<FrontEntry, Dominance>;

  Pathfinder(const SegmentDb& db, const Topology& topo) : db_(db), topo_(topo) {
    if (db.node_count() != topo.node_count())
      throw std::invalid_argument("segment db does not match topology");
  }

  template <class Observer = NullObserver>
  SearchResult run(const Query& q, Observer&& observer = {}) {
    const std::size_t n = topo_.node_count();
    detail::check_query(q, n);
    pool_.clear();
    fronts_.assign(n, Front{});
    alive_.clear();

    SearchResult result;
    SearchStats& stats = result.stats;
    const auto msd = static_cast<std::uint16_t>(q.msd);
    auto feasible = [&](const Label& l) {
      return l.nsegs <= msd && (!q.delay_bound || l.delay <= *q.delay_bound);
    };
    // A destination label dominating `l` dominates all of l's descendants,
    // whose cost is strictly larger.
    auto beaten_at_target = [&](const Label& l) {
      if (!q.dst || l.at == *q.dst) return false;
      for (const FrontEntry& f : fronts_[*q.dst].members())
        if (plain_dominates(f, l)) return true;
      return false;
    };

    std::priority_queue<detail::QueueItem> queue;
    auto admit = [&](const Label& l) {
      const LabelId id = pool_.add(l);
      alive_.push_back(true);
      const bool accepted = fronts_[l.at].insert(
          FrontEntry::of(l, id),
          [&](const FrontEntry& evicted) { alive_[evicted.id] = false; });
      if (!accepted) {
        alive_[id] = false;
        return;
      }
      queue.push({l.cost, l.delay, l.nsegs, id});
      ++stats.labels_pushed;
    };

    admit(source_label(q.src));
    ++stats.labels_created;
    std::tuple<Metric, Metric, std::uint16_t> last{0, 0, 0};
    while (!queue.empty()) {
      const detail::QueueItem item = queue.top();
      queue.pop();
      if (!alive_[item.id]) continue;
      const std::tuple<Metric, Metric, std::uint16_t> key{item.cost, item.delay,
                                                          item.nsegs};
      if (key < last) stats.queue_monotone = false;
      last = key;
      ++stats.labels_popped;

      const Label label = pool_[item.id];
      if (beaten_at_target(label)) continue;
      for (EdgeIndex e : topo_.out_edges(label.at)) {
        const Label child = extend_label(db_, topo_, label, item.id, e);
        ++stats.labels_created;
        stats.max_increment =
            std::max(stats.max_increment, child.nsegs - label.nsegs);
        observer.on_extend(pool_, label, child);
        if (!feasible(child) || beaten_at_target(child)) continue;
        admit(child);
      }
    }

    for (NodeId v = 0; v < n; ++v) {
      const auto& members = fronts_[v].members();
      if (members.empty()) continue;
      const std::size_t plain = plain_front_size(members);
      stats.labels_stored += members.size();
      stats.plain_stored += plain;
      stats.max_front_ratio =
          std::max(stats.max_front_ratio, static_cast<double>(members.size()) /
                                              static_cast<double>(plain));
      if (members.size() > n * plain) ++stats.front_bound_violations;
    }

    auto collect = [&](NodeId v) {
      std::vector<PathSolution> candidates;
      for (const FrontEntry& f : fronts_[v].members())
        candidates.push_back(PathSolution{f.cost, f.delay, f.nsegs,
                                          finalize_list(pool_, f.id)});
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

  // State of the last run.
  const LabelPool& pool() const { return pool_; }
  const std::vector<Front>& fronts() const { return fronts_; }

 private:
  const SegmentDb& db_;
  const Topology& topo_;
  LabelPool pool_;
  std::vector<Front> fronts_;
  std::vector<bool> alive_;
};

template <class Dominance = ExtendedDominance>
SearchResult solve(const SegmentDb& db, const Topology& topo, const Query& q) {
  Pathfinder<Dominance> finder(db, topo);
  return finder.run(q);
}

// Delay-constrained least-cost list to q.dst.
inline std::optional<PathSolution> dclc(const SegmentDb& db,
                                        const Topology& topo, const Query& q) {
  if (!q.dst) throw std::invalid_argument("dclc needs a destination");
  if (!q.delay_bound) throw std::invalid_argument("dclc needs a delay bound");
  const SearchResult r = solve(db, topo, q);
  const auto it = r.solutions.find(*q.dst);
  if (it == r.solutions.end()) return std::nullopt;
  return pick_least_cost(topo, it->second);
}

}  // namespace srpf

#endif  // SRPF_PATHFINDER_HPP_
