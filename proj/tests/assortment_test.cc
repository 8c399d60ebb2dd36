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

#include "assort/assortment.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "assort/axioms.h"
#include "assort/generate.h"
#include "assort/models.h"
#include "test_support.h"

namespace assort {
namespace {

AssortmentInstance TwoProductTie() {
  // S_2 = {2}: 2 * 0.5 = 1; S_1 = {1,2}: 1 * 0.2 + 2 * 0.4 = 1.
  auto model = std::make_shared<TabularModel>(2, [](Subset s) {
    switch (s) {
      case 0b01:
        return std::vector<double>{0.5};
      case 0b10:
        return std::vector<double>{0.5};
      case 0b11:
        return std::vector<double>{0.2, 0.4};
      default:
        return std::vector<double>{};
    }
  });
  return AssortmentInstance(model, {1.0, 2.0});
}

double OracleSumB(std::vector<double> r) {
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  double sum = 0.0;
  double prev = 0.0;
  for (const double level : r) {
    sum += (level - prev) / level;
    prev = level;
  }
  return sum;
}

TEST(Instance, LevelsAndThresholdSets) {
  const AssortmentInstance instance(
      std::make_shared<MnlModel>(std::vector<double>{0, 0, 0, 0}),
      {3.0, 1.0, 3.0, 2.0});
  EXPECT_EQ(instance.levels(), (std::vector<double>{1.0, 2.0, 3.0}));
  EXPECT_EQ(instance.ThresholdSet(1), Subset{0b1111});
  EXPECT_EQ(instance.ThresholdSet(2), Subset{0b1101});
  EXPECT_EQ(instance.ThresholdSet(3), Subset{0b0101});
}

TEST(Instance, RejectsNonPositiveRevenue) {
  auto model = std::make_shared<MnlModel>(std::vector<double>{0, 0});
  EXPECT_ASSORT_ERROR(AssortmentInstance(model, {1.0, -2.0}),
                      ErrorCode::kNonPositiveRevenue);
  EXPECT_ASSORT_ERROR(AssortmentInstance(model, {1.0}),
                      ErrorCode::kInvalidInstance);
}

TEST(RevenueOrdered, OptimalUnderMnl) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const AssortmentInstance instance =
        RandomAssortment("mnl", 1 + trial % 8, rng);
    const AssortmentSolution opt = BruteForceOptimum(instance);
    const RevenueOrderedResult revord = RevenueOrdered(instance);
    EXPECT_TRUE(NearlyEqualRelative(revord.best.revenue, opt.revenue))
        << revord.best.revenue << " vs " << opt.revenue;
  }
}

TEST(RevenueOrdered, TightExampleBestIsEverything) {
  const double eps = 0.01;
  const AssortmentInstance instance = GenerateTightInstance(4, eps);
  const RevenueOrderedResult result = RevenueOrdered(instance);
  EXPECT_EQ(result.best.assortment, FullSet(10));
  EXPECT_EQ(result.best_level, 1);
  EXPECT_NEAR(result.best.revenue, 1 + eps + eps * eps + eps * eps * eps,
              1e-12);
  EXPECT_NEAR(result.best.revenue, 1.010101, 1e-6);
  ASSERT_EQ(result.revenues.size(), 4u);
}

TEST(RevenueOrdered, SingleProduct) {
  auto model = std::make_shared<TabularModel>(1, [](Subset s) {
    return s == 0 ? std::vector<double>{} : std::vector<double>{0.4};
  });
  const AssortmentInstance instance(model, {5.0});
  const RevenueOrderedResult result = RevenueOrdered(instance);
  EXPECT_EQ(result.best.assortment, Subset{1});
  EXPECT_DOUBLE_EQ(result.best.revenue, 2.0);
  EXPECT_EQ(result.best.method, SolutionMethod::kRevenueOrdered);
}

TEST(RevenueOrdered, TiesGoToLargestThreshold) {
  const RevenueOrderedResult result = RevenueOrdered(TwoProductTie());
  EXPECT_DOUBLE_EQ(result.revenues[0], result.revenues[1]);
  EXPECT_EQ(result.best_level, 2);
  EXPECT_EQ(result.best.assortment, Subset{0b10});
}

TEST(RevenueOrdered, MatchesOracleOnAllFamilies) {
  std::mt19937_64 rng(103);
  for (const char* family : testing::RegularFamilies()) {
    for (int trial = 0; trial < 10; ++trial) {
      const AssortmentInstance instance =
          RandomAssortment(family, 1 + trial % 6, rng);
      EXPECT_DOUBLE_EQ(
          RevenueOrdered(instance).best.revenue,
          testing::OracleRevord(instance.model(), instance.revenue()));
    }
  }
}

TEST(BruteForce, TightOptimumIsDiagonal) {
  const AssortmentInstance instance = GenerateTightInstance(3, 0.1);
  const AssortmentSolution opt = BruteForceOptimum(instance);
  EXPECT_NEAR(opt.revenue, 3.0, 1e-12);
  EXPECT_EQ(opt.assortment, TightOptimalAssortment(3));
  EXPECT_EQ(TightOptimalAssortment(3),
            Singleton(1) | Singleton(3) | Singleton(6));
  EXPECT_EQ(opt.method, SolutionMethod::kBruteForce);
}

TEST(BruteForce, EmptyDemandGivesZeroAtEmptySet) {
  auto model = std::make_shared<TabularModel>(
      3, [](Subset s) { return std::vector<double>(Cardinality(s), 0.0); });
  const AssortmentSolution opt =
      BruteForceOptimum(AssortmentInstance(model, {1.0, 2.0, 3.0}));
  EXPECT_EQ(opt.revenue, 0.0);
  EXPECT_EQ(opt.assortment, Subset{0});
}

TEST(BruteForce, MatchesOracle) {
  std::mt19937_64 rng(107);
  for (const char* family : testing::RegularFamilies()) {
    for (int trial = 0; trial < 10; ++trial) {
      const AssortmentInstance instance =
          RandomAssortment(family, 1 + trial % 7, rng);
      EXPECT_DOUBLE_EQ(BruteForceOptimum(instance).revenue,
                       testing::OracleOpt(instance.model(), instance.revenue()))
          << family;
    }
  }
}

TEST(BruteForce, LexicographicTieBreak) {
  // Identical products: {1} and {2} tie; {1} is lexicographically smaller.
  auto model = std::make_shared<TabularModel>(2, [](Subset s) {
    return s == 0b11 ? std::vector<double>{0.1, 0.1}
                     : std::vector<double>(Cardinality(s), 0.5);
  });
  const AssortmentSolution opt =
      BruteForceOptimum(AssortmentInstance(model, {1.0, 1.0}));
  EXPECT_EQ(opt.assortment, Subset{0b01});
}

TEST(BruteForce, Guard) {
  const AssortmentInstance instance(
      std::make_shared<MnlModel>(std::vector<double>(21, 0.0)),
      std::vector<double>(21, 1.0));
  EXPECT_ASSORT_ERROR(BruteForceOptimum(instance),
                      ErrorCode::kGroundSetTooLarge);
}

TEST(Bounds, SingleLevel) {
  std::mt19937_64 rng(109);
  auto model = RandomModel("stochastic_preference", 4, rng);
  const AssortmentInstance instance(model, {2.0, 2.0, 2.0, 2.0});
  const BoundReport bounds = ComputeBounds(instance);
  EXPECT_EQ(bounds.k, 1);
  EXPECT_DOUBLE_EQ(bounds.bound_a, 1.0);
  EXPECT_DOUBLE_EQ(bounds.bound_b_exact, 1.0);
  EXPECT_DOUBLE_EQ(RevenueOrdered(instance).best.revenue,
                   BruteForceOptimum(instance).revenue);
}

TEST(Bounds, TwoLevelsAtE) {
  const AssortmentInstance instance(
      std::make_shared<MnlModel>(std::vector<double>{0.0, 0.0}),
      {1.0, std::exp(1.0)});
  EXPECT_NEAR(ComputeBounds(instance).bound_b_log, 0.5, 1e-15);
}

TEST(Bounds, TightDemandSumApproachesK) {
  const AssortmentInstance instance = GenerateTightInstance(3, 0.01);
  const BoundReport bounds = ComputeBounds(instance, TightOptimalAssortment(3));
  ASSERT_TRUE(bounds.c.has_value());
  EXPECT_NEAR(bounds.c->sum, 3.0, 0.05);
  // N_i = eps^i + ... + eps^k.
  const double e = 0.01;
  EXPECT_NEAR(bounds.c->n_values[0], e + e * e + e * e * e, 1e-15);
  EXPECT_NEAR(bounds.c->n_values[2], e * e * e, 1e-18);
  EXPECT_EQ(bounds.c->ell, 3);
}

TEST(Bounds, AbsentWithoutOptimumOrDemand) {
  const AssortmentInstance instance = GenerateTightInstance(2, 0.1);
  EXPECT_FALSE(ComputeBounds(instance).c.has_value());
  EXPECT_FALSE(ComputeBounds(instance, Subset{0}).c.has_value());
  EXPECT_ASSORT_ERROR(ComputeBoundC(instance, 0),
                      ErrorCode::kBoundCUnavailable);
}

TEST(Bounds, OrderingAndRangeProperties) {
  std::mt19937_64 rng(113);
  for (const char* family : testing::RegularFamilies()) {
    for (int trial = 0; trial < 20; ++trial) {
      const AssortmentInstance instance =
          RandomAssortment(family, 1 + trial % 6, rng);
      const AssortmentSolution opt = BruteForceOptimum(instance);
      const BoundReport b = ComputeBounds(instance, opt.assortment);
      EXPECT_NEAR(b.sum_b, OracleSumB(instance.revenue()), 1e-12);
      EXPECT_NEAR(b.bound_a, 1.0 / instance.num_levels(), 1e-15);
      EXPECT_GE(b.bound_b_exact, b.bound_b_log - 1e-12);
      for (const double v : {b.bound_a, b.bound_b_exact, b.bound_b_log}) {
        EXPECT_GT(v, 0.0);
        EXPECT_LE(v, 1.0 + 1e-12);
      }
      if (b.c) {
        EXPECT_GE(b.c->exact, b.c->log - 1e-12);
        EXPECT_GT(b.c->log, 0.0);
        EXPECT_LE(b.c->exact, 1.0 + 1e-12);
      }
      EXPECT_NEAR(b.lambda_tilde,
                  instance.model().PurchaseProbability(
                      instance.ThresholdSet(instance.num_levels())),
                  1e-15);
    }
  }
}

TEST(Guarantee, RandomStochasticPreferencePasses) {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 200; ++trial) {
    const AssortmentInstance instance =
        RandomAssortment("stochastic_preference", 1 + trial % 6, rng);
    const GuaranteeReport report = VerifyGuarantee(instance);
    EXPECT_TRUE(report.passed()) << "trial " << trial;
    EXPECT_TRUE(GreaterOrNearlyEqual(
        report.revord.revenue, report.bounds.bound_a * report.opt.revenue));
  }
}

TEST(Guarantee, TightRatioNearBoundA) {
  const double eps = 0.01;
  const GuaranteeReport report = VerifyGuarantee(GenerateTightInstance(4, eps));
  EXPECT_TRUE(report.passed());
  EXPECT_NEAR(report.ratio, 1.010101 / 4.0, 1e-6);
  EXPECT_NEAR(report.ratio, report.bounds.bound_a, 2 * eps * 4);
}

TEST(Guarantee, MnlRatioIsOne) {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 20; ++trial) {
    const GuaranteeReport report =
        VerifyGuarantee(RandomAssortment("mnl", 2 + trial % 5, rng));
    EXPECT_NEAR(report.ratio, 1.0, 1e-9);
  }
}

TEST(Guarantee, NonRegularModelIsRejected) {
  const AssortmentInstance instance(testing::RegularityViolator(), {1.0, 2.0});
  EXPECT_ASSORT_ERROR(VerifyGuarantee(instance),
                      ErrorCode::kRegularityViolation);
}

TEST(Guarantee, TechnicalBoundStandalone) {
  std::mt19937_64 rng(137);
  for (const char* family : testing::RegularFamilies()) {
    for (int trial = 0; trial < 10; ++trial) {
      const AssortmentInstance instance =
          RandomAssortment(family, 2 + trial % 5, rng);
      const Subset star = BruteForceOptimum(instance).assortment;
      for (int i = 1; i <= instance.num_levels(); ++i) {
        const Subset si = instance.ThresholdSet(i);
        double mass = 0.0;
        for (int x = 1; x <= instance.num_products(); ++x) {
          if (Contains(star & si, x))
            mass += instance.model().Evaluate(x, star);
        }
        EXPECT_TRUE(GreaterOrNearlyEqual(
            testing::OracleRevenue(instance.model(), instance.revenue(), si),
            instance.levels()[i - 1] * mass));
      }
    }
  }
}

TEST(Tight, RatioGrowsAsEpsilonShrinks) {
  for (int k = 2; k <= 4; ++k) {
    double previous = 0.0;
    for (const double eps : {0.5, 0.1, 0.01, 0.001}) {
      const AssortmentInstance instance = GenerateTightInstance(k, eps);
      const double ratio = BruteForceOptimum(instance).revenue /
                           RevenueOrdered(instance).best.revenue;
      EXPECT_GE(ratio, previous - 1e-12);
      previous = ratio;
    }
    EXPECT_GT(previous, k - 0.1);
  }
}

TEST(Tight, GeneratorExamples) {
  const AssortmentInstance one = GenerateTightInstance(1, 0.3);
  EXPECT_EQ(one.num_products(), 1);
  EXPECT_DOUBLE_EQ(RevenueOrdered(one).best.revenue,
                   BruteForceOptimum(one).revenue);

  const AssortmentInstance three = GenerateTightInstance(3, 0.5);
  EXPECT_EQ(three.num_products(), 6);
  EXPECT_TRUE(CheckAxioms(three.model()).AllPassed());

  const AssortmentInstance four = GenerateTightInstance(4, 0.01);
  EXPECT_GE(BruteForceOptimum(four).revenue / RevenueOrdered(four).best.revenue,
            3.9);
  EXPECT_ASSORT_ERROR(GenerateTightInstance(3, 0.0),
                      ErrorCode::kInvalidEpsilon);
  EXPECT_ASSORT_ERROR(GenerateTightInstance(3, 0.75),
                      ErrorCode::kInvalidEpsilon);
}

TEST(Tight, RevenueIsInversePowerOfColumn) {
  const double eps = 0.2;
  const AssortmentInstance instance = GenerateTightInstance(3, eps);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= i; ++j) {
      EXPECT_NEAR(instance.revenue_of(TightExampleModel::ProductId(i, j)),
                  std::pow(eps, -j), 1e-12);
    }
  }
}

}  // namespace
}  // namespace assort
