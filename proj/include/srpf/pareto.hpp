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

#ifndef SRPF_PARETO_HPP_
#define SRPF_PARETO_HPP_

#include <concepts>
#include <cstddef>
#include <utility>
#include <vector>

namespace srpf {

template <class T>
concept Weighted = requires(const T& t) {
  { t.cost } -> std::convertible_to<long long>;
  { t.delay } -> std::convertible_to<long long>;
  { t.nsegs } -> std::convertible_to<long long>;
};

template <class T>
concept OpenStateful = Weighted<T> && requires(const T& a, const T& b) {
  { a.same_open_state(b) } -> std::convertible_to<bool>;
  { a.open_pushable() } -> std::convertible_to<bool>;
};

// Componentwise <= on (cost, delay, nsegs). Equal triples dominate each
// other, so only one of a set of duplicates survives.
template <Weighted A, Weighted B>
bool plain_dominates(const A& incumbent, const B& candidate) {
  return incumbent.cost <= candidate.cost &&
         incumbent.delay <= candidate.delay &&
         incumbent.nsegs <= candidate.nsegs;
}

// Extended dominance. The segment count is not isotone: a label that is
// worse on (cost, delay) may later need one segment fewer than its
// dominator, because the dominator's open segment can fail to stretch over
// the next edge while its own can. That gap closes by at most one segment
// over any continuation, and never between labels whose open segments share
// a source. So a candidate is pruned only when
//   (a) it needs at least two more segments than the incumbent, or
//   (b) both open segments start at the same node and plain dominance holds,
//   (c) or its open segment can never be pushed (adjacency) and the
//       incumbent is plainly better on at least one metric.
template <OpenStateful T>
bool ext_dominates(const T& incumbent, const T& candidate) {
  if (incumbent.cost > candidate.cost || incumbent.delay > candidate.delay)
    return false;
  if (incumbent.nsegs + 2 <= candidate.nsegs) return true;
  if (incumbent.nsegs > candidate.nsegs) return false;
  if (incumbent.same_open_state(candidate)) return true;
  return !candidate.open_pushable() &&
         (incumbent.cost < candidate.cost || incumbent.delay < candidate.delay ||
          incumbent.nsegs < candidate.nsegs);
}

struct PlainDominance {
  template <class T>
  static bool dominates(const T& incumbent, const T& candidate) {
    return plain_dominates(incumbent, candidate);
  }
};

struct ExtendedDominance {
  template <class T>
  static bool dominates(const T& incumbent, const T& candidate) {
    return ext_dominates(incumbent, candidate);
  }
};

// Keeps every label. Only usable where the search space is finite anyway.
struct NoDominance {
  template <class T>
  static bool dominates(const T&, const T&) {
    return false;
  }
};

// Per-node label set closed under a dominance policy.
template <class Entry, class Dominance>
class ParetoFront {
 public:
  // Rejects `candidate` if a member dominates it. Otherwise evicts the
  // members it dominates, calling on_evict(member) for each, and keeps it.
  template <class OnEvict>
  bool insert(const Entry& candidate, OnEvict&& on_evict) {
    for (const Entry& m : members_)
      if (Dominance::dominates(m, candidate)) return false;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (Dominance::dominates(candidate, members_[i])) {
        on_evict(members_[i]);
      } else {
        if (kept != i) members_[kept] = std::move(members_[i]);
        ++kept;
      }
    }
    members_.resize(kept);
    members_.push_back(candidate);
    return true;
  }

  bool insert(const Entry& candidate) {
    return insert(candidate, [](const Entry&) {});
  }

  const std::vector<Entry>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  void clear() { members_.clear(); }

 private:
  std::vector<Entry> members_;
};

// Number of entries not dominated by an entry with a different triple.
template <Weighted T>
std::size_t plain_front_size(const std::vector<T>& entries) {
  std::size_t count = 0;
  for (const T& c : entries) {
    bool dominated = false;
    for (const T& m : entries) {
      if (plain_dominates(m, c) &&
          (m.cost != c.cost || m.delay != c.delay || m.nsegs != c.nsegs)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      // Count each distinct triple once.
      bool seen = false;
      for (const T& m : entries) {
        if (&m == &c) break;
        if (m.cost == c.cost && m.delay == c.delay && m.nsegs == c.nsegs) {
          seen = true;
          break;
        }
      }
      if (!seen) ++count;
    }
  }
  return count;
}

}  // namespace srpf

#endif  // SRPF_PARETO_HPP_
