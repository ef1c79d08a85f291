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

// Pruning quality metrics: retention ratio P_r = f(H(U')) / f(H(U)), pruned
// fraction P_g = 1 - |U'| / |U|, and the combined score C = P_r * P_g.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "quickprune/common.hpp"
#include "quickprune/objectives.hpp"
#include "quickprune/solvers.hpp"

namespace qprune {

struct EvalRecord {
  std::string pruner;
  double budget = 0.0;
  std::size_t n = 0;
  std::size_t n_pruned = 0;
  double value_full = 0.0;
  double value_pruned = 0.0;
  double p_r = 0.0;  // may exceed 1; NaN when undefined
  double p_g = 0.0;
  double combined = 0.0;
  bool p_r_defined = true;
  bool budget_in_range = true;
  std::uint64_t oracle_calls_prune = 0;
  std::uint64_t oracle_calls_solve = 0;
};

// Output of one pruner, as consumed by sweep_budgets.
struct PrunerOutput {
  std::string name;
  ElementSet pruned;
  std::uint64_t oracle_calls = 0;
  double kappa_min = 0.0;
  double kappa_max = std::numeric_limits<double>::infinity();
};

namespace detail {

inline void require_subset(std::span<const ElementId> ground,
                           std::span<const ElementId> pruned) {
  ElementSet sorted(ground.begin(), ground.end());
  std::sort(sorted.begin(), sorted.end());
  for (ElementId e : pruned)
    if (!std::binary_search(sorted.begin(), sorted.end(), e))
      throw InputError("pruned set contains element " + std::to_string(e) +
                       " outside the ground set");
}

inline std::size_t distinct(std::span<const ElementId> ids) {
  ElementSet sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

inline EvalRecord make_record(std::size_t n, std::size_t n_pruned,
                              const Solution& full, const Solution& pruned,
                              double budget) {
  EvalRecord r;
  r.budget = budget;
  r.n = n;
  r.n_pruned = n_pruned;
  r.value_full = full.value;
  r.value_pruned = pruned.value;
  r.oracle_calls_solve = full.oracle_calls + pruned.oracle_calls;
  r.p_g = n == 0 ? 0.0
                 : 1.0 - static_cast<double>(n_pruned) / static_cast<double>(n);
  if (full.value == 0.0) {
    r.p_r_defined = pruned.value == 0.0;
    r.p_r = r.p_r_defined ? 1.0 : std::numeric_limits<double>::quiet_NaN();
  } else {
    r.p_r = pruned.value / full.value;
  }
  r.combined = r.p_r * r.p_g;
  return r;
}

}  // namespace detail

template <objective O>
EvalRecord evaluate_pruning(const Oracle<O>& oracle, CostView costs,
                            std::span<const ElementId> ground,
                            std::span<const ElementId> pruned,
                            SolverKind solver, double budget) {
  detail::require_subset(ground, pruned);
  const Solution full = solve(solver, oracle, costs, ground, budget);
  const Solution reduced = solve(solver, oracle, costs, pruned, budget);
  return detail::make_record(detail::distinct(ground), detail::distinct(pruned),
                             full, reduced, budget);
}

// One record per (pruner, budget), pruner-major in the given order. The
// heuristic is run on the full ground set once per budget and shared across
// pruners; records outside a pruner's [kappa_min, kappa_max] are flagged.
template <objective O>
std::vector<EvalRecord> sweep_budgets(const Oracle<O>& oracle, CostView costs,
                                      std::span<const ElementId> ground,
                                      std::span<const PrunerOutput> outputs,
                                      std::span<const double> budgets,
                                      SolverKind solver) {
  for (const auto& out : outputs) detail::require_subset(ground, out.pruned);
  const std::size_t n = detail::distinct(ground);
  std::vector<Solution> full;
  full.reserve(budgets.size());
  for (double b : budgets) full.push_back(solve(solver, oracle, costs, ground, b));

  std::vector<EvalRecord> records;
  for (const auto& out : outputs) {
    const std::size_t n_pruned = detail::distinct(out.pruned);
    for (std::size_t i = 0; i < budgets.size(); ++i) {
      const Solution reduced =
          solve(solver, oracle, costs, out.pruned, budgets[i]);
      EvalRecord r =
          detail::make_record(n, n_pruned, full[i], reduced, budgets[i]);
      r.pruner = out.name;
      r.oracle_calls_prune = out.oracle_calls;
      r.budget_in_range =
          budgets[i] >= out.kappa_min && budgets[i] <= out.kappa_max;
      records.push_back(std::move(r));
    }
  }
  return records;
}

// Budgets lo, lo + step, ..., up to hi inclusive (within 1e-9 of hi).
inline std::vector<double> budget_range(double lo, double hi, double step) {
  if (!(step > 0.0) || !(lo <= hi)) throw InputError("invalid budget range");
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    const double b = lo + static_cast<double>(i) * step;
    if (b > hi + 1e-9) break;
    out.push_back(b);
  }
  return out;
}

}  // namespace qprune
