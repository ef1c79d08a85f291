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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "quickprune/bounds.hpp"

namespace qprune {
namespace {

std::size_t closed_form_ladder_size(double kmin, double kmax, double eta) {
  return static_cast<std::size_t>(
             std::floor(std::log(kmax / ((1 - eta) * kmin)) /
                            std::log(1 / (1 - eta)) +
                        1e-9)) +
         1;
}

TEST(BudgetLadder, DegenerateRangeGivesTwoBudgets) {
  EXPECT_EQ(budget_ladder(8, 8, 0.5), (std::vector<double>{8, 4}));
}

TEST(BudgetLadder, BoundaryBudgetKept) {
  EXPECT_EQ(budget_ladder(50, 100, 0.5), (std::vector<double>{100, 50, 25}));
}

TEST(BudgetLadder, SmallEtaCount) {
  const auto ladder = budget_ladder(50, 100, 0.01);
  EXPECT_EQ(ladder.size(), closed_form_ladder_size(50, 100, 0.01));
  EXPECT_EQ(ladder.size(), 70u);
}

TEST(BudgetLadder, DescendingAndInRange) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lo(0.5, 50);
  std::uniform_real_distribution<double> ratio(1, 40);
  std::uniform_real_distribution<double> eta(0.01, 0.5);
  for (int i = 0; i < 200; ++i) {
    const double kmin = lo(rng);
    const double kmax = kmin * ratio(rng);
    const double e = eta(rng);
    const auto ladder = budget_ladder(kmin, kmax, e);
    ASSERT_FALSE(ladder.empty());
    EXPECT_EQ(ladder.front(), kmax);
    for (std::size_t j = 0; j < ladder.size(); ++j) {
      EXPECT_GE(ladder[j], (1 - e) * kmin * (1 - 1e-12));
      if (j > 0) {
        EXPECT_LT(ladder[j], ladder[j - 1]);
      }
    }
    // Every budget in [kmin, kmax] has a ladder entry in [(1-eta)k, k].
    for (double k : {kmin, std::sqrt(kmin * kmax), kmax}) {
      bool covered = false;
      for (double tau : ladder)
        covered |= tau <= k * (1 + 1e-12) && tau >= (1 - e) * k * (1 - 1e-12);
      EXPECT_TRUE(covered) << k;
    }
  }
}

TEST(BudgetLadder, InvalidParameters) {
  EXPECT_THROW(budget_ladder(0, 1, 0.5), InputError);
  EXPECT_THROW(budget_ladder(2, 1, 0.5), InputError);
  EXPECT_THROW(budget_ladder(1, 2, 0.0), InputError);
  EXPECT_THROW(budget_ladder(1, 2, 0.6), InputError);
}

TEST(Alpha, ReferenceValues) {
  EXPECT_DOUBLE_EQ(alpha_single(1, 0, 1), 1.0 / 8);
  EXPECT_DOUBLE_EQ(alpha_multi(1, 0, 1), 1.0 / 24);
  EXPECT_EQ(alpha_single(0.3, 0.7, 0.7), 0.0);
  EXPECT_EQ(alpha_multi(0.3, 0.7, 0.7), 0.0);
  // delta = 0.1, eps = 0.1, gamma = 1: 0.1 * 0.9 / (2 * 1.1 * 1.1)
  EXPECT_DOUBLE_EQ(alpha_single(0.1, 0.1, 1), 0.09 / 2.42);
}

TEST(Alpha, InvalidParameters) {
  EXPECT_THROW(alpha_single(0, 0, 1), InputError);
  EXPECT_THROW(alpha_single(1, -0.1, 1), InputError);
  EXPECT_THROW(alpha_single(1, 0, 1.5), InputError);
  EXPECT_THROW(alpha_single(1, 0, 0), InputError);
  EXPECT_THROW(alpha_single(1, 0.6, 0.5), InputError);
  EXPECT_THROW(alpha_multi(1, 0.6, 0.5), InputError);
}

TEST(Alpha, MonotoneInGamma) {
  double last = 0;
  for (double g = 0.05; g <= 1.0; g += 0.05) {
    const double a = alpha_single(0.5, 0.01, g);
    EXPECT_GT(a, last);
    last = a;
  }
}

TEST(SizeBound, ReferenceValues) {
  EXPECT_DOUBLE_EQ(size_bound(std::numbers::e * 0.1, 1, 1, 1, 0.1), 7.0);
  // 2 * 1001 * ln(10^4) + 3
  EXPECT_NEAR(size_bound(1000, 100, 0.1, 1, 0.1), 18442.1, 0.05);
  EXPECT_NEAR(size_bound(1000, 1e-12, 0.1, 1, 0.1),
              2 * std::log(10000.0) + 3, 1e-9);
  EXPECT_THROW(size_bound(0, 1, 1, 1, 1), InputError);
  EXPECT_THROW(size_bound(10, 1, 1, 0, 1), InputError);
}

TEST(Nhi, Examples) {
  const std::vector<double> unit(4, 1.0);
  const std::vector<ElementId> s{0, 1, 2};
  EXPECT_TRUE(check_nhi(s, unit, 2, 0.5));
  EXPECT_TRUE(check_nhi({}, unit, 2, 0.5));
  const std::vector<double> costs{1, 3, 1, 1};
  EXPECT_FALSE(check_nhi(s, costs, 3, 0.01));
  EXPECT_TRUE(check_nhi(std::vector<ElementId>{0, 2}, costs, 3, 0.01));
}

// Growth lemma: if y_i >= (1 + b) y_{i-1} for i = 1..m and
// m >= ((b + 1) / b) ln(1 / g), then y_m >= y_0 / g.
TEST(GrowthLemma, RandomSequences) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> beta_dist(1e-3, 5);
  std::uniform_real_distribution<double> g_dist(1e-6, 1);
  std::uniform_real_distribution<double> slack(0, 0.5);
  std::uniform_real_distribution<double> start(1e-3, 1e3);
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double b = beta_dist(rng);
    const double g = g_dist(rng);
    const auto m = static_cast<int>(std::ceil((b + 1) / b * std::log(1 / g)));
    const double y0 = start(rng);
    double y = y0;
    for (int i = 1; i <= m; ++i) y *= 1 + b + slack(rng) * (trial % 2);
    if (!(y >= y0 / g * (1 - 1e-12))) ++violations;
  }
  EXPECT_EQ(violations, 0);
}

}  // namespace
}  // namespace qprune
