// Copyright 2026 The assort Authors
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

#include "assort/multi_period.h"

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "assort/assortment.h"
#include "assort/generate.h"
#include "assort/models.h"
#include "test_support.h"

namespace assort {
namespace {

AssortmentInstance MnlInstance() {
  return AssortmentInstance(
      std::make_shared<MnlModel>(std::vector<double>{0.5, -0.2, 1.0, 0.1}),
      {4.0, 7.0, 2.0, 7.0});
}

void ExpectMatchesOracle(const MultiPeriodInstance& instance) {
  const DpTable table = SolveDp(instance);
  const AssortmentInstance& base = instance.base();
  for (int t = 0; t <= instance.horizon(); ++t) {
    for (int q = 0; q <= instance.capacity(); ++q) {
      EXPECT_NEAR(table.value[t][q],
                  testing::OracleJ(base.model(), base.revenue(), t, q), 1e-9)
          << "t=" << t << " q=" << q;
    }
  }
}

TEST(Instance, Validation) {
  EXPECT_ASSORT_ERROR(MultiPeriodInstance(MnlInstance(), 0, 1),
                      ErrorCode::kInvalidParams);
  EXPECT_ASSORT_ERROR(MultiPeriodInstance(MnlInstance(), 1, 0),
                      ErrorCode::kInvalidParams);
  const MultiPeriodInstance instance(MnlInstance(), 2, 2);
  EXPECT_EQ(instance.sorted_products(), (std::vector<int>{2, 4, 1, 3}));
}

TEST(Dp, Boundary) {
  const DpTable table = SolveDp(MultiPeriodInstance(MnlInstance(), 3, 2));
  EXPECT_EQ(table.levels, 3);
  for (int q = 0; q <= 2; ++q) EXPECT_EQ(table.value[0][q], 0.0);
  for (int t = 0; t <= 3; ++t) {
    EXPECT_EQ(table.value[t][0], 0.0);
    EXPECT_EQ(table.lstar[t][0], 0);
  }
  EXPECT_TRUE(table.regular);
  EXPECT_TRUE(table.warning.empty());
}

TEST(Dp, SinglePeriodIsStaticRevenueOrdered) {
  const AssortmentInstance base = MnlInstance();
  const DpTable table = SolveDp(MultiPeriodInstance(base, 1, 3));
  const RevenueOrderedResult revord = RevenueOrdered(base);
  const double best = testing::OracleRevord(base.model(), base.revenue());
  for (int q = 1; q <= 3; ++q) {
    EXPECT_NEAR(table.value[1][q], best, 1e-12);
    EXPECT_EQ(table.lstar[1][q], table.lstar[1][1]);
  }
  EXPECT_NEAR(revord.best.revenue, best, 1e-12);
}

TEST(Dp, AmpleCapacityIsLinearInTime) {
  const AssortmentInstance base = MnlInstance();
  const DpTable table = SolveDp(MultiPeriodInstance(base, 4, 4));
  for (int t = 1; t <= 4; ++t) {
    for (int q = t; q <= 4; ++q) {
      EXPECT_NEAR(table.value[t][q], t * table.value[1][1], 1e-9);
    }
  }
}

TEST(Dp, MnlMatchesOracle) {
  ExpectMatchesOracle(MultiPeriodInstance(MnlInstance(), 3, 2));
}

TEST(Dp, RandomMatchesOracle) {
  std::mt19937_64 rng(401);
  for (int trial = 0; trial < 25; ++trial) {
    const char* family =
        testing::RegularFamilies()[trial % testing::RegularFamilies().size()];
    ExpectMatchesOracle(
        MultiPeriodInstance(RandomAssortment(family, 2 + trial % 3, rng),
                            1 + trial % 4, 1 + trial % 3));
  }
}

TEST(Dp, SingleLevelAlwaysOffersEverything) {
  const AssortmentInstance base(
      std::make_shared<MnlModel>(std::vector<double>{0.0, 1.0, -1.0}),
      {3.0, 3.0, 3.0});
  const DpTable table = SolveDp(MultiPeriodInstance(base, 4, 3));
  for (int t = 1; t <= 4; ++t) {
    for (int q = 1; q <= 3; ++q) EXPECT_EQ(table.lstar[t][q], 1);
  }
}

TEST(Properties, RandomRegularInstances) {
  std::mt19937_64 rng(409);
  std::uniform_int_distribution<int> n_dist(1, 5);
  std::uniform_int_distribution<int> tq_dist(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const char* family =
        testing::RegularFamilies()[trial % testing::RegularFamilies().size()];
    const MultiPeriodInstance instance(
        RandomAssortment(family, n_dist(rng), rng), tq_dist(rng), tq_dist(rng));
    const DpTable table = SolveDp(instance);
    ASSERT_TRUE(table.regular) << family;
    const MonotonicityReport nesting = CheckNestingMonotonicity(table);
    const MonotonicityReport marginal = CheckMarginalValue(table);
    const MonotonicityReport agreement = CheckLStarAgreement(instance, table);
    EXPECT_TRUE(nesting.passed) << family << " trial " << trial;
    EXPECT_TRUE(marginal.passed) << family << " trial " << trial;
    EXPECT_TRUE(agreement.passed) << family << " trial " << trial;
  }
}

TEST(Properties, ViolationsAreReported) {
  DpTable table;
  table.horizon = 2;
  table.capacity = 2;
  table.levels = 2;
  table.value = {{0, 0, 0}, {0, 5, 5}, {0, 6, 10}};
  table.lstar = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  EXPECT_FALSE(CheckNestingMonotonicity(table).passed);
  table.value = {{0, 0, 0}, {0, 5, 5}, {0, 4, 4}};
  EXPECT_FALSE(CheckMarginalValue(table).passed);
}

TEST(LStarDelta, Examples) {
  // Level 1 = {1,2}, level 2 = {2}.
  const AssortmentInstance base(
      std::make_shared<MnlModel>(std::vector<double>{0.0, 0.0}), {1.0, 4.0});
  EXPECT_EQ(LStarDelta(base, 0.0), 2);
  EXPECT_EQ(LStarDelta(base, 100.0), 1);
  EXPECT_ASSORT_ERROR(LStarDelta(base, -4.5), ErrorCode::kDeltaOutOfRange);
  EXPECT_NO_THROW(LStarDelta(base, -4.0));
}

TEST(LStarDelta, NonincreasingInDelta) {
  std::mt19937_64 rng(419);
  for (int trial = 0; trial < 100; ++trial) {
    const char* family =
        testing::RegularFamilies()[trial % testing::RegularFamilies().size()];
    const AssortmentInstance base = RandomAssortment(family, 4, rng);
    const LevelSummary levels = SummarizeLevels(base);
    int previous = LStarDelta(base, levels, -base.levels().back());
    for (double delta = -base.levels().back(); delta <= 20.0; delta += 0.25) {
      const int current = LStarDelta(base, levels, delta);
      EXPECT_LE(current, previous) << family << " delta " << delta;
      previous = current;
    }
  }
}

TEST(Regularity, NonRegularModelWarns) {
  const AssortmentInstance base(testing::RegularityViolator(), {1.0, 2.0});
  const DpTable table = SolveDp(MultiPeriodInstance(base, 2, 1));
  EXPECT_FALSE(table.regular);
  EXPECT_NE(table.warning.find("RegularityWarning"), std::string::npos);
  EXPECT_TRUE(SolveDp(MultiPeriodInstance(base, 2, 1), false).warning.empty());
}

}  // namespace
}  // namespace assort
