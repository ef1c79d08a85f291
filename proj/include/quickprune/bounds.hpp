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

// Closed-form quantities for the pruning guarantees: the budget ladder,
// retention ratios, the pruned-set size bound and the no-huge-items check.
// "log" is the natural logarithm throughout.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "quickprune/common.hpp"

namespace qprune {

// Geometric budgets tau_i = kappa_max * (1 - eta)^i, i >= 0, restricted to
// (1 - eta) * kappa_min <= tau_i <= kappa_max, in descending order.
// The lower end is compared with a relative slack of 1e-12 so that budgets
// landing exactly on the boundary (e.g. 25 for [50, 100], eta = 1/2) are kept
// despite rounding in pow().
inline std::vector<double> budget_ladder(double kappa_min, double kappa_max,
                                         double eta) {
  if (!(kappa_min > 0.0))
    throw InputError("kappa_min must be positive");
  if (!(kappa_min <= kappa_max))
    throw InputError("kappa_min must not exceed kappa_max");
  if (!(eta > 0.0 && eta <= 0.5))
    throw InputError("eta must lie in (0, 1/2]");
  const double lowest = (1.0 - eta) * kappa_min * (1.0 - 1e-12);
  std::vector<double> ladder;
  for (int i = 0;; ++i) {
    const double tau = kappa_max * std::pow(1.0 - eta, i);
    if (tau < lowest) break;
    ladder.push_back(tau);
  }
  return ladder;
}

// Retained fraction of the optimum guaranteed by the single-budget pruner:
//   delta g^4 (1 - eps/g) / (2 (delta g^2 + 1)(1 + delta/g)).
inline double alpha_single(double delta, double epsilon, double gamma) {
  if (!(delta > 0.0)) throw InputError("delta must be positive");
  if (!(epsilon >= 0.0)) throw InputError("epsilon must be non-negative");
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw InputError("gamma must lie in (0, 1]");
  if (epsilon > gamma)
    throw InputError("epsilon / gamma must not exceed 1");
  const double g2 = gamma * gamma;
  return delta * g2 * g2 * (1.0 - epsilon / gamma) /
         (2.0 * (delta * g2 + 1.0) * (1.0 + delta / gamma));
}

// Guarantee of the multi-budget pruner for every budget in [kappa_min,
// kappa_max]: alpha_single * gamma / 3.
inline double alpha_multi(double delta, double epsilon, double gamma) {
  return alpha_single(delta, epsilon, gamma) * gamma / 3.0;
}

// Strict upper bound on the single-budget pruned set size:
//   2 (1 + kappa / (delta c_min)) log(n / eps) + 3.
inline double size_bound(double n, double kappa, double delta, double c_min,
                         double epsilon) {
  if (!(n > 0.0 && kappa > 0.0 && delta > 0.0 && c_min > 0.0 &&
        epsilon > 0.0))
    throw InputError("size_bound arguments must be positive");
  return 2.0 * (1.0 + kappa / (delta * c_min)) * std::log(n / epsilon) + 3.0;
}

// True iff every element of `solution` costs at most kappa (1 - eta).
inline bool check_nhi(std::span<const ElementId> solution, CostView costs,
                      double kappa, double eta) {
  const double limit = kappa * (1.0 - eta);
  for (ElementId e : solution)
    if (costs[e] > limit) return false;
  return true;
}

}  // namespace qprune
