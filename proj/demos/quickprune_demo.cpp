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


// Prunes a synthetic social graph for max-coverage under knapsack budgets in
// [10, 60], then compares greedy on the pruned and the full ground set.
//
//   quickprune_demo [n] [seed]

#include <cstdio>
#include <cstdlib>
#include <memory>

#include "quickprune/quickprune.hpp"

int main(int argc, char** argv) {
  using namespace qprune;
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 5000;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;

  auto graph = std::make_shared<const Graph>(assign_knapsack_costs(
      generate(GraphKind::barabasi_albert, n, {.attach = 4}, seed)));
  auto oracle = make_coverage_oracle(graph);

  ElementSet ground(n);
  for (std::size_t i = 0; i < n; ++i) ground[i] = static_cast<ElementId>(i);

  const PruneReport report =
      quickprune(ground, oracle, graph->costs(), {10, 60, 0.5, 0.1, 0.1});
  std::printf("kept %zu of %zu nodes, %llu oracle calls, %zu budgets\n",
              report.pruned.size(), n,
              static_cast<unsigned long long>(report.oracle_calls),
              report.budgets.size());

  std::printf("%8s %10s %10s %8s %8s\n", "budget", "f(full)", "f(pruned)", "P_r",
              "C");
  for (double budget : budget_range(10, 60, 10)) {
    const EvalRecord r = evaluate_pruning(oracle, graph->costs(), ground,
                                          report.pruned,
                                          SolverKind::knapsack_greedy, budget);
    std::printf("%8g %10g %10g %8.4f %8.4f\n", budget, r.value_full,
                r.value_pruned, r.p_r, r.combined);
  }
}
