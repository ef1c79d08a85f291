// Copyright 2026 The Authors.
//
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

#pragma once

// Downstream heuristics run on a (pruned) ground set, plus the exhaustive
// optimum used to check guarantees on small instances.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "quickprune/common.hpp"
#include "quickprune/objectives.hpp"

namespace qprune {

struct Solution {
  ElementSet set;  // selection order for greedy solvers, sorted otherwise
  double value = 0.0;
  double cost = 0.0;
  std::uint64_t oracle_calls = 0;
};

namespace detail {

// Max-heap entry of a lazy greedy. `round` is the solution size at which
// `score` was last computed; ties go to the smaller id.
struct LazyEntry {
  double score;
  ElementId id;
  std::size_t round;
};

struct LazyOrder {
  bool operator()(const LazyEntry& a, const LazyEntry& b) const {
    if (a.score != b.score) return a.score < b.score;
    return a.id > b.id;
  }
};

using LazyHeap =
    std::priority_queue<LazyEntry, std::vector<LazyEntry>, LazyOrder>;

inline ElementSet unique_ids(std::span<const ElementId> ground) {
  ElementSet ids(ground.begin(), ground.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace detail

// Greedy for |S| <= k with lazy (stale upper bound) marginal evaluation. Stops
// early once no element has positive gain. Each prefix of the returned
// selection is the greedy solution for the smaller k.
template <objective O>
Solution greedy_cardinality(const Oracle<O>& oracle,
                            std::span<const ElementId> ground, std::size_t k) {
  Solution sol;
  if (k == 0) return sol;
  auto acc = oracle.accumulator();
  detail::LazyHeap heap;
  for (ElementId e : detail::unique_ids(ground)) heap.push({acc.gain(e), e, 0});

  while (sol.set.size() < k && !heap.empty()) {
    detail::LazyEntry top = heap.top();
    heap.pop();
    if (top.round == sol.set.size()) {
      if (!(top.score > 0.0)) break;
      acc.insert(top.id);
      sol.set.push_back(top.id);
      continue;
    }
    top.score = acc.gain(top.id);
    top.round = sol.set.size();
    heap.push(top);
  }
  sol.value = acc.value();
  sol.cost = static_cast<double>(sol.set.size());
  sol.oracle_calls = acc.queries();
  return sol;
}

// Budgeted greedy: the better of (a) cost-benefit greedy adding the feasible
// element of largest gain / cost, and (b) the best feasible singleton.
template <objective O>
Solution greedy_knapsack(const Oracle<O>& oracle, CostView costs,
                         std::span<const ElementId> ground, double kappa) {
  if (!(kappa > 0.0)) throw InputError("budget must be positive");
  auto acc = oracle.accumulator();
  detail::LazyHeap heap;
  ElementId best_single = 0;
  double best_single_value = 0.0;
  bool have_single = false;
  for (ElementId e : detail::unique_ids(ground)) {
    oracle.check_id(e);
    if (costs[e] > kappa) continue;
    const double gain = acc.gain(e);
    if (!have_single || gain > best_single_value) {
      best_single = e;
      best_single_value = gain;
      have_single = true;
    }
    heap.push({gain / costs[e], e, 0});
  }

  Solution greedy;
  while (!heap.empty()) {
    detail::LazyEntry top = heap.top();
    heap.pop();
    if (greedy.cost + costs[top.id] > kappa) continue;
    if (top.round == greedy.set.size()) {
      if (!(top.score > 0.0)) break;
      acc.insert(top.id);
      greedy.set.push_back(top.id);
      greedy.cost += costs[top.id];
      continue;
    }
    top.score = acc.gain(top.id) / costs[top.id];
    top.round = greedy.set.size();
    heap.push(top);
  }
  greedy.value = acc.value();
  greedy.oracle_calls = acc.queries();

  if (have_single && best_single_value > greedy.value) {
    Solution single;
    single.set = {best_single};
    single.value = best_single_value;
    single.cost = costs[best_single];
    single.oracle_calls = greedy.oracle_calls;
    return single;
  }
  return greedy;
}

namespace detail {

template <objective O>
struct BruteForce {
  const Oracle<O>& oracle;
  CostView costs;
  std::span<const ElementId> ids;
  double kappa;
  Solution best;
  ElementSet current;
  std::uint64_t calls = 0;

  void search(std::size_t from, const typename Oracle<O>::Accumulator& acc,
              double cost) {
    if (acc.value() > best.value) {
      best.value = acc.value();
      best.set = current;
      best.cost = cost;
    }
    for (std::size_t i = from; i < ids.size(); ++i) {
      const ElementId e = ids[i];
      if (cost + costs[e] > kappa) continue;
      auto next = acc;
      next.gain(e);
      ++calls;
      next.insert(e);
      current.push_back(e);
      search(i + 1, next, cost + costs[e]);
      current.pop_back();
    }
  }
};

}  // namespace detail

// Exact max f(S) over S subset of ground with c(S) <= kappa, by enumerating
// every feasible subset. The first maximiser in enumeration order wins.
template <objective O>
Solution brute_force_opt(const Oracle<O>& oracle, CostView costs,
                         std::span<const ElementId> ground, double kappa) {
  constexpr std::size_t kMaxSize = 22;
  const ElementSet ids = detail::unique_ids(ground);
  if (ids.size() > kMaxSize)
    throw InputError("brute_force_opt supports at most 22 elements, got " +
                     std::to_string(ids.size()));
  for (ElementId e : ids) oracle.check_id(e);
  detail::BruteForce<O> bf{oracle, costs, ids, kappa, {}, {}, 0};
  bf.search(0, oracle.accumulator(), 0.0);
  std::sort(bf.best.set.begin(), bf.best.set.end());
  bf.best.oracle_calls = bf.calls;
  return bf.best;
}

enum class SolverKind { greedy, knapsack_greedy };

inline const char* to_string(SolverKind kind) {
  return kind == SolverKind::greedy ? "greedy" : "knapsack-greedy";
}

// Runs the chosen heuristic; for SolverKind::greedy the budget is a
// cardinality and is rounded down.
template <objective O>
Solution solve(SolverKind kind, const Oracle<O>& oracle, CostView costs,
               std::span<const ElementId> ground, double budget) {
  if (kind == SolverKind::greedy) {
    if (!(budget >= 0.0)) throw InputError("budget must be non-negative");
    return greedy_cardinality(
        oracle, ground, static_cast<std::size_t>(std::floor(budget + 1e-9)));
  }
  return greedy_knapsack(oracle, costs, ground, budget);
}

}  // namespace qprune
