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

// Comparison pruners: degree-to-cost top-k, uniform random, and an SS-style
// randomized sparsification over the submodularity graph.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "quickprune/common.hpp"
#include "quickprune/graph.hpp"
#include "quickprune/objectives.hpp"

namespace qprune {

enum class BaselineKind { ss, topk, random };

struct BaselineConfig {
  BaselineKind kind = BaselineKind::ss;
  std::size_t target_size = 0;  // topk / random
  double r = 8.0;               // ss: probes per round = r log n
  double c = 8.0;               // ss: pool shrinks to 1/c per round
  std::uint64_t seed = 0;
};

// The k nodes of largest degree / cost; ties go to the smaller id. Sorted.
inline ElementSet top_k_prune(const Graph& graph, CostView costs,
                              std::size_t k) {
  const std::size_t n = graph.num_nodes();
  if (k > n) throw InputError("k exceeds the ground-set size");
  ElementSet order(n);
  std::iota(order.begin(), order.end(), ElementId{0});
  auto ratio = [&](ElementId v) {
    return static_cast<double>(graph.degree(v)) / costs[v];
  };
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return ratio(a) > ratio(b);
  });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

// Uniform k-subset of [0, n), reproducible under `seed`. Sorted.
inline ElementSet random_prune(std::size_t n, std::size_t k,
                               std::uint64_t seed) {
  if (k > n) throw InputError("k exceeds the ground-set size");
  std::mt19937_64 rng(seed);
  ElementSet all(n);
  std::iota(all.begin(), all.end(), ElementId{0});
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(all[i], all[pick(rng)]);
  }
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

struct SsResult {
  ElementSet kept;  // sorted
  std::uint64_t oracle_calls = 0;
  std::uint64_t weight_evaluations = 0;
  std::size_t rounds = 0;
  std::size_t probes = 0;
};

// SS-style sparsification. Submodularity-graph weights are
//   w(u, v) = f(v | u) - f(u | V \ u),
// small w(u, v) meaning v is nearly redundant given u. Each round moves
// ceil(r log n) random probes from the pool into the kept set, scores every
// remaining v by min over probes u of w(u, v), and discards all but the
// ceil(|pool| / c) highest-scoring elements. Once the pool holds at most
// r log n elements it is merged into the kept set.
//
// Query accounting: f(V) once, f(V \ u) once per probe, and two queries
// (f({u, v}) and f({u})) per weight, so
//   oracle_calls = 1 + probes + 2 * weight_evaluations.
template <objective O>
SsResult ss_prune(const Oracle<O>& oracle, std::span<const ElementId> ground,
                  const BaselineConfig& config) {
  if (!(config.r >= 1.0) || !(config.c >= 1.0))
    throw InputError("ss parameters r and c must be >= 1");
  ElementSet pool(ground.begin(), ground.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  for (ElementId e : pool) oracle.check_id(e);
  const ElementSet all = pool;

  SsResult result;
  const std::size_t n = pool.size();
  const double threshold =
      n > 0 ? config.r * std::log(static_cast<double>(n)) : 0.0;
  if (static_cast<double>(n) <= threshold) {
    result.kept = std::move(pool);
    return result;
  }
  const auto per_round =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(threshold)));

  std::mt19937_64 rng(config.seed);
  const double f_all = oracle.eval(pool);
  ++result.oracle_calls;

  ElementSet without;
  std::vector<std::pair<double, ElementId>> scored;
  while (static_cast<double>(pool.size()) > threshold) {
    ++result.rounds;
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t take = std::min(per_round, pool.size());
    const ElementSet probes(pool.begin(),
                            pool.begin() + static_cast<std::ptrdiff_t>(take));
    pool.erase(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take));
    result.kept.insert(result.kept.end(), probes.begin(), probes.end());
    result.probes += probes.size();

    // f(u | V \ u) for each probe.
    std::vector<double> tail_gain(probes.size());
    for (std::size_t i = 0; i < probes.size(); ++i) {
      without.clear();
      for (ElementId e : all)
        if (e != probes[i]) without.push_back(e);
      tail_gain[i] = f_all - oracle.eval(without);
      ++result.oracle_calls;
    }

    scored.clear();
    for (ElementId v : pool) {
      double score = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < probes.size(); ++i) {
        const ElementId u = probes[i];
        const ElementId pair[] = {u, v};
        const ElementId single[] = {u};
        const double w =
            oracle.eval(pair) - oracle.eval(single) - tail_gain[i];
        result.oracle_calls += 2;
        ++result.weight_evaluations;
        score = std::min(score, w);
      }
      scored.emplace_back(score, v);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    const auto keep = static_cast<std::size_t>(
        std::ceil(static_cast<double>(scored.size()) / config.c));
    pool.clear();
    for (std::size_t i = 0; i < keep; ++i) pool.push_back(scored[i].second);
  }
  result.kept.insert(result.kept.end(), pool.begin(), pool.end());
  std::sort(result.kept.begin(), result.kept.end());
  return result;
}

}  // namespace qprune
