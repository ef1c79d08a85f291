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

// Test-only reference implementations. These work from raw edge lists and
// plain std::set arithmetic and never touch the library's incremental states,
// so they serve as independent oracles for the code under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "quickprune/quickprune.hpp"

namespace qprune::testing {

using IdSet = std::set<ElementId>;

struct EdgeListGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;  // undirected, u < v, no duplicates
};

inline EdgeListGraph random_edge_list(std::size_t n, double p,
                                      std::mt19937_64& rng) {
  EdgeListGraph g;
  g.n = n;
  std::bernoulli_distribution coin(p);
  for (ElementId u = 0; u < n; ++u)
    for (ElementId v = u + 1; v < n; ++v)
      if (coin(rng)) g.edges.emplace_back(u, v);
  return g;
}

inline std::shared_ptr<const Graph> to_graph(const EdgeListGraph& g) {
  return std::make_shared<const Graph>(Graph::from_edges(g.n, g.edges));
}

inline double ref_coverage(const EdgeListGraph& g, const IdSet& s) {
  IdSet covered = s;
  for (auto [u, v] : g.edges) {
    if (s.count(u)) covered.insert(v);
    if (s.count(v)) covered.insert(u);
  }
  return static_cast<double>(covered.size());
}

inline double ref_cut(const EdgeListGraph& g, const IdSet& s) {
  double cut = 0;
  for (auto [u, v] : g.edges)
    if ((s.count(u) != 0) != (s.count(v) != 0)) cut += 1;
  return cut;
}

inline IdSet to_set(std::span<const ElementId> ids) {
  return IdSet(ids.begin(), ids.end());
}

using SetFn = std::function<double(const IdSet&)>;

// Exhaustive max over subsets of `ground` with cost <= kappa.
inline double ref_opt(const SetFn& f, std::span<const double> costs,
                      std::span<const ElementId> ground, double kappa) {
  const std::size_t m = ground.size();
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    double cost = 0.0;
    IdSet s;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) {
        cost += costs[ground[i]];
        s.insert(ground[i]);
      }
    if (cost <= kappa) best = std::max(best, f(s));
  }
  return best;
}

// Literal transcription of the single-budget pruning loop over plain sets,
// recomputing every value from scratch.
struct RefPruneResult {
  IdSet pruned;
  IdSet ever_added;
  IdSet final_working;
  std::size_t deletions = 0;
};

inline RefPruneResult ref_prune_single(const SetFn& f,
                                       std::span<const double> costs,
                                       std::span<const ElementId> stream,
                                       double kappa, double delta,
                                       double epsilon) {
  const double n = static_cast<double>(stream.size());
  IdSet a;
  IdSet a_s;
  bool have_best = false;
  ElementId best = 0;
  RefPruneResult out;
  for (ElementId e : stream) {
    if (costs[e] > kappa) continue;
    IdSet with = a;
    with.insert(e);
    if (f(with) - f(a) >= delta * costs[e] * f(a) / kappa) {
      a = with;
      out.ever_added.insert(e);
    }
    const double fe = f({e});
    if (fe > (have_best ? f({best}) : 0.0)) {
      best = e;
      have_best = true;
    }
    if (f(a) > n / epsilon * f(a_s)) {
      if (!a_s.empty()) ++out.deletions;
      for (ElementId x : a_s) a.erase(x);
      a_s = a;
    }
  }
  out.final_working = a;
  out.pruned = a;
  if (have_best) out.pruned.insert(best);
  return out;
}

inline std::vector<ElementId> iota_ids(std::size_t n) {
  std::vector<ElementId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<ElementId>(i);
  return ids;
}

// Weighted coverage over random item sets with heavy-tailed item weights; a
// submodular objective with a wide value range so the deletion rule fires.
struct WeightedCoverage {
  std::vector<std::vector<std::size_t>> covers;  // element -> items
  std::vector<double> weight;                     // item -> weight

  static WeightedCoverage random(std::size_t n, std::size_t items,
                                 std::mt19937_64& rng) {
    WeightedCoverage wc;
    std::uniform_int_distribution<std::size_t> pick(0, items - 1);
    std::uniform_int_distribution<int> per(1, 3);
    std::uniform_int_distribution<int> expo(0, 40);
    wc.weight.resize(items);
    for (auto& w : wc.weight) w = std::ldexp(1.0, expo(rng));
    wc.covers.resize(n);
    for (auto& c : wc.covers) {
      const int k = per(rng);
      for (int i = 0; i < k; ++i) c.push_back(pick(rng));
    }
    return wc;
  }

  double operator()(std::span<const ElementId> s) const {
    std::set<std::size_t> items;
    for (ElementId e : s) items.insert(covers[e].begin(), covers[e].end());
    double total = 0.0;
    for (std::size_t i : items) total += weight[i];
    return total;
  }
};

}  // namespace qprune::testing
