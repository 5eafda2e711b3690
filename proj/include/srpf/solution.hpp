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

#ifndef SRPF_SOLUTION_HPP_
#define SRPF_SOLUTION_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "srpf/pareto.hpp"
#include "srpf/segment.hpp"
#include "srpf/topology.hpp"

namespace srpf {

enum class DiversityMode { kStandard, kMaxDiversity };

struct Query {
  NodeId src = 0;
  std::optional<NodeId> dst;  // nullopt: every destination
  std::optional<Metric> delay_bound;
  int msd = 10;
  DiversityMode diversity = DiversityMode::kStandard;
};

struct PathSolution {
  Metric cost = 0;
  Metric delay = 0;
  int nsegs = 0;
  SegmentList list;

  friend bool operator==(const PathSolution&, const PathSolution&) = default;
};

using Triple = std::tuple<Metric, Metric, int>;

inline Triple triple_of(const PathSolution& s) {
  return {s.cost, s.delay, s.nsegs};
}

using Solutions = std::map<NodeId, std::vector<PathSolution>>;

inline std::set<Triple> triples(const std::vector<PathSolution>& sols) {
  std::set<Triple> out;
  for (const auto& s : sols) out.insert(triple_of(s));
  return out;
}

inline std::map<NodeId, std::set<Triple>> triples(const Solutions& sols) {
  std::map<NodeId, std::set<Triple>> out;
  for (const auto& [dst, list] : sols)
    if (!list.empty()) out[dst] = triples(list);
  return out;
}

// Plain Pareto filter on (cost, delay, nsegs), sorted by triple. Standard
// mode keeps one witness per triple, the one whose serialized list sorts
// first; max-diversity keeps every distinct list.
inline std::vector<PathSolution> pareto_filter(
    const Topology& topo, std::vector<PathSolution> candidates,
    DiversityMode mode) {
  std::vector<PathSolution> kept;
  for (const auto& c : candidates) {
    bool dominated = false;
    for (const auto& m : candidates) {
      if (plain_dominates(m, c) && triple_of(m) != triple_of(c)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(c);
  }
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    keys.emplace_back(format_segment_list(topo, kept[i].list), i);
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    const auto ta = triple_of(kept[a.second]);
    const auto tb = triple_of(kept[b.second]);
    if (ta != tb) return ta < tb;
    return a.first < b.first;
  });
  std::vector<PathSolution> out;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (k > 0) {
      const auto& prev = kept[keys[k - 1].second];
      const auto& cur = kept[keys[k].second];
      if (triple_of(prev) == triple_of(cur) &&
          (mode == DiversityMode::kStandard ||
           keys[k - 1].first == keys[k].first))
        continue;
    }
    out.push_back(kept[keys[k].second]);
  }
  return out;
}

// Minimum cost, then delay, then nsegs, then serialized list.
inline std::optional<PathSolution> pick_least_cost(
    const Topology& topo, const std::vector<PathSolution>& sols) {
  std::optional<PathSolution> best;
  std::string best_key;
  for (const auto& s : sols) {
    std::string key = format_segment_list(topo, s.list);
    if (!best || triple_of(s) < triple_of(*best) ||
        (triple_of(s) == triple_of(*best) && key < best_key)) {
      best = s;
      best_key = std::move(key);
    }
  }
  return best;
}

// CSV: dst,cost,delay,nsegs,segment_list, rows sorted by destination name
// then (cost, delay, nsegs). The list's tokens are comma-joined and fill the
// remaining columns.
inline void write_solutions_csv(std::ostream& out, const Topology& topo,
                                const Solutions& sols) {
  out << "dst,cost,delay,nsegs,segment_list\n";
  std::vector<std::pair<std::string, const std::vector<PathSolution>*>> rows;
  for (const auto& [dst, list] : sols) rows.emplace_back(topo.name(dst), &list);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [name, list] : rows) {
    for (const auto& s : *list) {
      out << name << ',' << s.cost << ',' << s.delay << ',' << s.nsegs << ','
          << format_segment_list(topo, s.list) << '\n';
    }
  }
}

// Counters shared by the search engines.
struct SearchStats {
  std::size_t labels_created = 0;
  std::size_t labels_pushed = 0;
  std::size_t labels_popped = 0;
  // Sum over nodes of the final front sizes.
  std::size_t labels_stored = 0;
  // Same, counting only distinct plain-Pareto triples per node.
  std::size_t plain_stored = 0;
  int max_increment = 0;
  bool queue_monotone = true;
  // Nodes where |front| > |V| * |plain front|.
  std::size_t front_bound_violations = 0;
  double max_front_ratio = 0.0;

  double front_overhead_ratio() const {
    return plain_stored == 0 ? 1.0
                             : static_cast<double>(labels_stored) /
                                   static_cast<double>(plain_stored);
  }
};

struct SearchResult {
  Solutions solutions;
  SearchStats stats;
};

}  // namespace srpf

#endif  // SRPF_SOLUTION_HPP_
