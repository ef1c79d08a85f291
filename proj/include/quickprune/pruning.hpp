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

// Single-pass ground-set pruning for knapsack-constrained monotone
// (weakly) submodular maximisation.
//
// SinglePruner keeps a working set A, a checkpoint A_s (always a prefix of A in
// insertion order) and the best singleton a*. For each streamed element e with
// c(e) <= kappa:
//   add      if gain(e | A) >= delta * c(e) * f(A) / kappa;
//   a* <- e  if f({e}) > f({a*});
//   delete   if f(A) > (n / eps) * f(A_s): A <- A \ A_s, then A_s <- A.
// The pruned set is A + a*. quickprune() runs one SinglePruner per budget of the
// geometric ladder over [kappa_min, kappa_max] and returns the union.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "quickprune/bounds.hpp"
#include "quickprune/common.hpp"
#include "quickprune/objectives.hpp"

namespace qprune {

struct PruneParams {
  double kappa = 1.0;
  double delta = 0.1;
  double epsilon = 0.1;

  void validate(std::size_t n) const {
    if (!(kappa > 0.0)) throw InputError("kappa must be positive");
    if (!(delta > 0.0)) throw InputError("delta must be positive");
    if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
    if (n > 0 && !(epsilon < static_cast<double>(n)))
      throw InputError("epsilon must be smaller than the ground-set size");
  }
};

struct LadderParams {
  double kappa_min = 1.0;
  double kappa_max = 1.0;
  double eta = 0.5;
  double delta = 0.1;
  double epsilon = 0.1;
};

// One firing of the deletion rule. The first firing after start-up has an
// empty checkpoint and only records A_s <- A (removed == 0).
struct DeletionEvent {
  double tau = 0.0;
  std::size_t position = 0;  // stream index of the triggering element
  std::size_t removed = 0;
  std::size_t kept = 0;
  double value_before = 0.0;
  double value_after = 0.0;
};

struct BudgetSummary {
  double tau = 0.0;
  ElementSet pruned;  // A + a* for this budget, sorted
  std::size_t working_size = 0;
  std::size_t deletions = 0;
  std::size_t checkpoints = 0;
  std::uint64_t queries = 0;
  double c_min = 0.0;  // over processed elements with cost <= tau; 0 if none
  std::optional<ElementId> best_singleton;
};

struct PruneReport {
  std::string algorithm;
  std::size_t n = 0;
  double kappa_min = 0.0;
  double kappa_max = 0.0;
  double eta = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
  ElementSet pruned;  // union over budgets, sorted
  std::uint64_t oracle_calls = 0;
  std::size_t deletions = 0;
  std::vector<BudgetSummary> budgets;
  std::vector<DeletionEvent> events;
  double elapsed_seconds = 0.0;
};

template <objective O>
class SinglePruner {
 public:
  struct Member {
    ElementId id;
    double gain;  // marginal gain when it was added
  };

  SinglePruner(const Oracle<O>& oracle, CostView costs, PruneParams params,
               std::size_t n)
      : oracle_(&oracle),
        costs_(costs),
        params_(params),
        n_(n),
        acc_(oracle.accumulator()) {
    if (n == 0) throw InputError("ground set must be non-empty");
    params_.validate(n);
    if (costs.size() < oracle.ground_size())
      throw InputError("cost vector shorter than the ground set");
  }

  void process(ElementId e) {
    oracle_->check_id(e);
    const std::size_t position = processed_++;
    const double cost = costs_[e];
    if (cost > params_.kappa) return;
    min_cost_ = std::min(min_cost_, cost);

    const double f_a = acc_.value();
    const double gain = acc_.gain(e);
    ++queries_;
    if (gain >= params_.delta * cost * f_a / params_.kappa) {
      acc_.insert(e);
      working_.push_back({e, gain});
      ever_added_.push_back(e);
    }

    const ElementId single[] = {e};
    const double f_e = oracle_->eval(single);
    ++queries_;
    if (f_e > best_value_) {
      best_ = e;
      best_value_ = f_e;
    }

    const double f_now = acc_.value();
    if (f_now > static_cast<double>(n_) / params_.epsilon * checkpoint_value_) {
      DeletionEvent event{params_.kappa, position, checkpoint_size_, 0, f_now,
                          f_now};
      if (checkpoint_size_ > 0) {
        working_.erase(working_.begin(),
                       working_.begin() +
                           static_cast<std::ptrdiff_t>(checkpoint_size_));
        const ElementSet ids = working_ids();
        acc_ = oracle_->accumulator(ids);
        ++queries_;
        ++deletions_;
      } else {
        ++checkpoints_;
      }
      checkpoint_size_ = working_.size();
      checkpoint_value_ = acc_.value();
      event.kept = working_.size();
      event.value_after = checkpoint_value_;
      events_.push_back(event);
    }
  }

  template <class Range>
  void process_all(const Range& stream) {
    for (ElementId e : stream) process(e);
  }

  // A + a*, sorted.
  ElementSet result() const {
    ElementSet out = working_ids();
    if (best_ && std::find(out.begin(), out.end(), *best_) == out.end())
      out.push_back(*best_);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::span<const Member> working_set() const noexcept { return working_; }
  ElementSet working_ids() const {
    ElementSet ids;
    ids.reserve(working_.size());
    for (const Member& m : working_) ids.push_back(m.id);
    return ids;
  }
  // A_s is the first checkpoint_size() members of working_set().
  std::size_t checkpoint_size() const noexcept { return checkpoint_size_; }
  double value() const { return acc_.value(); }
  double checkpoint_value() const noexcept { return checkpoint_value_; }
  std::optional<ElementId> best_singleton() const noexcept { return best_; }
  double best_singleton_value() const noexcept { return best_value_; }
  // Every element ever inserted into A (instrumentation).
  std::span<const ElementId> ever_added() const noexcept { return ever_added_; }
  std::span<const DeletionEvent> events() const noexcept { return events_; }
  std::size_t deletions() const noexcept { return deletions_; }
  std::size_t checkpoints() const noexcept { return checkpoints_; }
  std::uint64_t queries() const noexcept { return queries_; }
  std::size_t processed() const noexcept { return processed_; }
  const PruneParams& params() const noexcept { return params_; }
  double c_min() const noexcept {
    return min_cost_ == std::numeric_limits<double>::infinity() ? 0.0
                                                                : min_cost_;
  }

  BudgetSummary summary() const {
    BudgetSummary s;
    s.tau = params_.kappa;
    s.pruned = result();
    s.working_size = working_.size();
    s.deletions = deletions_;
    s.checkpoints = checkpoints_;
    s.queries = queries_;
    s.c_min = c_min();
    s.best_singleton = best_;
    return s;
  }

 private:
  const Oracle<O>* oracle_;
  CostView costs_;
  PruneParams params_;
  std::size_t n_;
  typename Oracle<O>::Accumulator acc_;
  std::vector<Member> working_;
  std::vector<ElementId> ever_added_;
  std::size_t checkpoint_size_ = 0;
  double checkpoint_value_ = 0.0;
  std::optional<ElementId> best_;
  double best_value_ = 0.0;
  std::vector<DeletionEvent> events_;
  std::size_t deletions_ = 0;
  std::size_t checkpoints_ = 0;
  std::uint64_t queries_ = 0;
  std::size_t processed_ = 0;
  double min_cost_ = std::numeric_limits<double>::infinity();
};

namespace detail {

template <objective O>
PruneReport collect(std::vector<SinglePruner<O>>& pruners) {
  PruneReport report;
  for (const auto& pruner : pruners) {
    BudgetSummary s = pruner.summary();
    report.pruned.insert(report.pruned.end(), s.pruned.begin(), s.pruned.end());
    report.oracle_calls += s.queries;
    report.deletions += s.deletions;
    const auto ev = pruner.events();
    report.events.insert(report.events.end(), ev.begin(), ev.end());
    report.budgets.push_back(std::move(s));
  }
  std::sort(report.pruned.begin(), report.pruned.end());
  report.pruned.erase(std::unique(report.pruned.begin(), report.pruned.end()),
                      report.pruned.end());
  return report;
}

}  // namespace detail

// Single-budget pruning in one pass over `stream`.
template <objective O>
PruneReport quickprune_single(std::span<const ElementId> stream,
                              const Oracle<O>& oracle, CostView costs,
                              const PruneParams& params) {
  const auto start = std::chrono::steady_clock::now();
  PruneReport report;
  if (!stream.empty()) {
    std::vector<SinglePruner<O>> pruners;
    pruners.emplace_back(oracle, costs, params, stream.size());
    pruners.front().process_all(stream);
    report = detail::collect(pruners);
  } else {
    params.validate(0);
  }
  report.algorithm = "quickprune-single";
  report.n = stream.size();
  report.kappa_min = report.kappa_max = params.kappa;
  report.delta = params.delta;
  report.epsilon = params.epsilon;
  report.elapsed_seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
  return report;
}

// Multi-budget pruning: one SinglePruner per ladder budget, all fed the same
// stream. With threads > 1 the budgets are split across workers; each worker
// owns its pruners and the oracle is shared read-only, so the result does not
// depend on scheduling.
template <objective O>
PruneReport quickprune(std::span<const ElementId> stream,
                       const Oracle<O>& oracle, CostView costs,
                       const LadderParams& params, unsigned threads = 1) {
  const auto start = std::chrono::steady_clock::now();
  const auto ladder =
      budget_ladder(params.kappa_min, params.kappa_max, params.eta);
  PruneReport report;
  if (!stream.empty()) {
    std::vector<SinglePruner<O>> pruners;
    pruners.reserve(ladder.size());
    for (double tau : ladder)
      pruners.emplace_back(oracle, costs,
                           PruneParams{tau, params.delta, params.epsilon},
                           stream.size());

    const std::size_t workers =
        std::clamp<std::size_t>(threads, 1, pruners.size());
    if (workers == 1) {
      for (ElementId e : stream)
        for (auto& pruner : pruners) pruner.process(e);
    } else {
      std::vector<std::exception_ptr> errors(workers);
      {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
          pool.emplace_back([&, w] {
            try {
              for (std::size_t i = w; i < pruners.size(); i += workers)
                pruners[i].process_all(stream);
            } catch (...) {
              errors[w] = std::current_exception();
            }
          });
      }
      for (auto& error : errors)
        if (error) std::rethrow_exception(error);
    }
    report = detail::collect(pruners);
  } else {
    PruneParams{params.kappa_max, params.delta, params.epsilon}.validate(0);
  }
  report.algorithm = "quickprune";
  report.n = stream.size();
  report.kappa_min = params.kappa_min;
  report.kappa_max = params.kappa_max;
  report.eta = params.eta;
  report.delta = params.delta;
  report.epsilon = params.epsilon;
  report.elapsed_seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
  return report;
}

}  // namespace qprune
