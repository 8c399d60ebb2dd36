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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "assort/axioms.h"

namespace assort {
namespace {

constexpr double kTieTolerance = 1e-9;

// Least index whose value ties the maximum within relative tolerance.
int MinArgMax(const std::vector<double>& values) {
  const double best = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (NearlyEqualRelative(values[i], best, kTieTolerance)) {
      return static_cast<int>(i) + 1;
    }
  }
  return static_cast<int>(values.size());
}

}  // namespace

MultiPeriodInstance::MultiPeriodInstance(AssortmentInstance base, int horizon,
                                         int capacity)
    : base_(std::move(base)), horizon_(horizon), capacity_(capacity) {
  if (horizon < 1 || capacity < 1) {
    throw Error(ErrorCode::kInvalidParams, "T and Q must be positive");
  }
  sorted_.resize(base_.num_products());
  std::iota(sorted_.begin(), sorted_.end(), 1);
  std::stable_sort(sorted_.begin(), sorted_.end(), [&](int a, int b) {
    return base_.revenue_of(a) > base_.revenue_of(b);
  });
}

LevelSummary SummarizeLevels(const AssortmentInstance& instance) {
  LevelSummary out;
  for (int l = 1; l <= instance.num_levels(); ++l) {
    const Subset s = instance.ThresholdSet(l);
    out.revenue.push_back(instance.Revenue(s));
    out.purchase.push_back(instance.model().PurchaseProbability(s));
    out.no_purchase.push_back(instance.model().Evaluate(0, s));
  }
  return out;
}

DpTable SolveDp(const MultiPeriodInstance& instance, bool check_regularity,
                int guard) {
  const AssortmentInstance& base = instance.base();
  DpTable table;
  table.horizon = instance.horizon();
  table.capacity = instance.capacity();
  table.levels = base.num_levels();
  if (check_regularity) {
    const AxiomReport axioms = CheckAxioms(base.model(), guard);
    if (!axioms.AllPassed()) {
      table.regular = false;
      table.warning =
          "RegularityWarning: model is not regular; monotonicity of l* is "
          "not guaranteed";
    }
  }
  const LevelSummary levels = SummarizeLevels(base);
  const int T = table.horizon;
  const int Q = table.capacity;
  const int k = table.levels;
  table.value.assign(T + 1, std::vector<double>(Q + 1, 0.0));
  table.level_value.assign(
      T + 1, std::vector<std::vector<double>>(Q + 1, std::vector<double>(k)));
  table.lstar.assign(T + 1, std::vector<int>(Q + 1, 0));
  for (int t = 1; t <= T; ++t) {
    for (int q = 1; q <= Q; ++q) {
      std::vector<double>& row = table.level_value[t][q];
      const double sold = table.value[t - 1][q - 1];
      const double kept = table.value[t - 1][q];
      for (int l = 0; l < k; ++l) {
        row[l] = levels.revenue[l] + levels.purchase[l] * sold +
                 levels.no_purchase[l] * kept;
      }
      table.value[t][q] = *std::max_element(row.begin(), row.end());
      table.lstar[t][q] = MinArgMax(row);
    }
  }
  return table;
}

MonotonicityReport CheckNestingMonotonicity(const DpTable& table) {
  MonotonicityReport report;
  for (int t = 1; t <= table.horizon; ++t) {
    for (int q = 1; q <= table.capacity; ++q) {
      if (q >= 2 && table.lstar[t][q] > table.lstar[t][q - 1]) {
        report.violations.push_back({t, q, "lstar nonincreasing in q"});
      }
      if (t >= 2 && table.lstar[t][q] < table.lstar[t - 1][q]) {
        report.violations.push_back({t, q, "lstar nondecreasing in t"});
      }
    }
  }
  report.passed = report.violations.empty();
  return report;
}

MonotonicityReport CheckMarginalValue(const DpTable& table) {
  const double scale =
      std::max(1.0, std::abs(table.value[table.horizon][table.capacity]));
  const double slack = kTieTolerance * scale;
  MonotonicityReport report;
  for (int t = 0; t <= table.horizon; ++t) {
    for (int q = 1; q <= table.capacity; ++q) {
      const double delta = table.Marginal(t, q);
      if (delta < -slack) {
        report.violations.push_back({t, q, "J nondecreasing in q"});
      }
      if (q >= 2 && table.Marginal(t, q - 1) < delta - slack) {
        report.violations.push_back({t, q, "marginal value concave in q"});
      }
      if (t >= 1) {
        if (delta < table.Marginal(t - 1, q) - slack) {
          report.violations.push_back(
              {t, q, "marginal value nondecreasing in t"});
        }
        if (table.value[t][q] < table.value[t - 1][q] - slack) {
          report.violations.push_back({t, q, "J nondecreasing in t"});
        }
      }
    }
  }
  report.passed = report.violations.empty();
  return report;
}

int LStarDelta(const AssortmentInstance& instance, const LevelSummary& levels,
               double delta) {
  if (instance.levels().back() + delta < 0.0) {
    throw Error(ErrorCode::kDeltaOutOfRange,
                "r_k + delta must be nonnegative, got delta = " +
                    std::to_string(delta));
  }
  std::vector<double> values(levels.revenue.size());
  for (std::size_t l = 0; l < values.size(); ++l) {
    values[l] = levels.revenue[l] + delta * levels.purchase[l];
  }
  return MinArgMax(values);
}

int LStarDelta(const AssortmentInstance& instance, double delta) {
  return LStarDelta(instance, SummarizeLevels(instance), delta);
}

MonotonicityReport CheckLStarAgreement(const MultiPeriodInstance& instance,
                                       const DpTable& table) {
  const LevelSummary levels = SummarizeLevels(instance.base());
  MonotonicityReport report;
  for (int t = 1; t <= table.horizon; ++t) {
    for (int q = 1; q <= table.capacity; ++q) {
      const int expected =
          LStarDelta(instance.base(), levels, -table.Marginal(t - 1, q));
      if (expected != table.lstar[t][q]) {
        report.violations.push_back({t, q, "lstar agrees with L*(delta)"});
      }
    }
  }
  report.passed = report.violations.empty();
  return report;
}

}  // namespace assort
