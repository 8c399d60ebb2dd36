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

#include "assort/axioms.h"

#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace assort {
namespace {

void Fail(AxiomVerdict& verdict, const AxiomWitness& witness) {
  if (!verdict.passed) return;
  verdict.passed = false;
  verdict.witness = witness;
}

// f(S) for every S, indexed by bitmask.
std::vector<double> DemandTable(const TabularModel& table) {
  const Subset count = Subset{1} << table.num_products();
  std::vector<double> demand(count, 0.0);
  for (Subset s = 1; s < count; ++s) {
    double total = 0.0;
    for (const double p : table.Row(s)) total += p;
    demand[s] = total;
  }
  return demand;
}

}  // namespace

std::string AxiomWitness::ToString() const {
  std::ostringstream out;
  out << "(x=" << product << ", S=" << FormatSubset(smaller)
      << ", S'=" << FormatSubset(larger) << ", " << smaller_value << " vs "
      << larger_value << ")";
  return out.str();
}

AxiomReport CheckAxioms(const ChoiceModel& model, int guard) {
  const int n = model.num_products();
  CheckEnumerationGuard(n, guard, "axiom check");
  const auto table = ToTabular(model, guard);
  AxiomReport report;
  for (const Subset s : SubsetsInCanonicalOrder(n)) {
    const auto row = table->Row(s);
    double purchase = 0.0;
    for (const double p : row) purchase += p;
    const double none = 1.0 - purchase;

    if (none < -kProbabilityTolerance) {
      Fail(report.nonnegative, {0, s, s, none, none});
    }
    int position = 0;
    for (int x = 1; x <= n; ++x) {
      if (Contains(s, x)) {
        const double p = row[position++];
        if (p < -kProbabilityTolerance) {
          Fail(report.nonnegative, {x, s, s, p, p});
        }
      } else {
        const double p = model.Evaluate(x, s);
        if (p > kProbabilityTolerance || p < -kProbabilityTolerance) {
          Fail(report.offered_only, {x, s, s, p, p});
        }
      }
    }
    if (purchase > 1.0 + kProbabilityTolerance) {
      Fail(report.at_most_one, {0, s, s, purchase, purchase});
    }

    for (int y = 1; y <= n; ++y) {
      if (Contains(s, y)) continue;
      const Subset larger = s | Singleton(y);
      const auto larger_row = table->Row(larger);
      double larger_purchase = 0.0;
      for (const double p : larger_row) larger_purchase += p;
      const double larger_none = 1.0 - larger_purchase;
      if (none < larger_none - kProbabilityTolerance) {
        Fail(report.regularity, {0, s, larger, none, larger_none});
      }
      for (int x = 1; x <= n; ++x) {
        if (!Contains(s, x)) continue;
        const double before = row[RankInSubset(s, x)];
        const double after = larger_row[RankInSubset(larger, x)];
        if (before < after - kProbabilityTolerance) {
          Fail(report.regularity, {x, s, larger, before, after});
        }
      }
    }
  }
  return report;
}

AxiomVerdict CheckPurchaseMonotonicity(const ChoiceModel& model, int guard) {
  const int n = model.num_products();
  CheckEnumerationGuard(n, guard, "purchase monotonicity check");
  const auto table = ToTabular(model, guard);
  const std::vector<double> demand = DemandTable(*table);
  AxiomVerdict verdict;
  for (const Subset s : SubsetsInCanonicalOrder(n)) {
    for (int y = 1; y <= n; ++y) {
      if (Contains(s, y)) continue;
      const Subset larger = s | Singleton(y);
      if (demand[s] > demand[larger] + kProbabilityTolerance) {
        Fail(verdict, {0, s, larger, demand[s], demand[larger]});
        return verdict;
      }
    }
  }
  return verdict;
}

SubmodularityReport CheckDemandSubmodularity(const ChoiceModel& model,
                                             int guard) {
  const int n = model.num_products();
  CheckEnumerationGuard(n, guard, "demand submodularity check");
  const auto table = ToTabular(model, guard);
  const std::vector<double> demand = DemandTable(*table);
  const Subset all = FullSet(n);
  SubmodularityReport report;
  for (const Subset s : SubsetsInCanonicalOrder(n)) {
    for (const Subset extra : SubsetsInCanonicalOrder(all & ~s)) {
      const Subset larger = s | extra;
      for (int x = 1; x <= n; ++x) {
        const Subset bit = Singleton(x);
        const double smaller_gain = demand[s | bit] - demand[s];
        const double larger_gain = demand[larger | bit] - demand[larger];
        const double gap = larger_gain - smaller_gain;
        if (gap <= kProbabilityTolerance) continue;
        report.passed = false;
        // Ties within tolerance keep the earlier witness.
        if (!report.witness || gap > report.max_gap + kProbabilityTolerance) {
          report.max_gap = gap;
          report.witness =
              SubmodularityWitness{s, larger, x, larger_gain, smaller_gain};
        }
      }
    }
  }
  return report;
}

}  // namespace assort
