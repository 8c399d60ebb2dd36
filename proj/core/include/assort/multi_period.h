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

// Single-leg capacity control over T periods with one arrival per period,
// restricted to revenue-ordered assortments.
//
// Level l (1-based) offers S_l = {x : r(x) >= r_l}; l = 1 is the largest
// set. J_t(q) is the value-to-go with t periods and q units left.

#ifndef ASSORT_MULTI_PERIOD_H_
#define ASSORT_MULTI_PERIOD_H_

#include <optional>
#include <string>
#include <vector>

#include "assort/assortment.h"

namespace assort {

class MultiPeriodInstance {
 public:
  MultiPeriodInstance(AssortmentInstance base, int horizon, int capacity);

  const AssortmentInstance& base() const { return base_; }
  int horizon() const { return horizon_; }
  int capacity() const { return capacity_; }
  // Products by non-increasing revenue (ties by id): position i holds the
  // original id of re-indexed product i+1.
  const std::vector<int>& sorted_products() const { return sorted_; }

 private:
  AssortmentInstance base_;
  int horizon_;
  int capacity_;
  std::vector<int> sorted_;
};

struct DpTable {
  int horizon = 0;
  int capacity = 0;
  int levels = 0;
  // value[t][q], 0 <= t <= T, 0 <= q <= Q.
  std::vector<std::vector<double>> value;
  // level_value[t][q][l-1]; zero on the boundary t = 0 or q = 0.
  std::vector<std::vector<std::vector<double>>> level_value;
  // lstar[t][q]; 0 on the boundary.
  std::vector<std::vector<int>> lstar;
  bool regular = true;
  std::string warning;

  // J_t(q) - J_t(q-1), q >= 1.
  double Marginal(int t, int q) const { return value[t][q] - value[t][q - 1]; }
};

// Per-level data of the static problem: revenue and purchase probability
// of S_l.
struct LevelSummary {
  std::vector<double> revenue;
  std::vector<double> purchase;
  std::vector<double> no_purchase;
};

LevelSummary SummarizeLevels(const AssortmentInstance& instance);

// Tabulates the recursion. When `check_regularity` is set the model is run
// through the axiom checker and a warning is carried for non-regular models.
DpTable SolveDp(const MultiPeriodInstance& instance,
                bool check_regularity = true,
                int guard = kDefaultEnumerationGuard);

struct CellViolation {
  int t = 0;
  int q = 0;
  std::string property;
};

struct MonotonicityReport {
  bool passed = true;
  std::vector<CellViolation> violations;
};

// l*_t(q) <= l*_t(q-1) for q >= 2 and l*_t(q) >= l*_{t-1}(q) for t >= 2.
MonotonicityReport CheckNestingMonotonicity(const DpTable& table);

// Delta J_t(q-1) >= Delta J_t(q), Delta J_t(q) >= Delta J_{t-1}(q), and
// J nondecreasing in t and q; all up to 1e-9 times max(1, |J_T(Q)|).
MonotonicityReport CheckMarginalValue(const DpTable& table);

// Least l maximizing sum_{x in S_l} P(x, S_l) (r(x) + delta), with ties
// within relative 1e-9. Throws kDeltaOutOfRange when r_k + delta < 0.
int LStarDelta(const AssortmentInstance& instance, double delta);
int LStarDelta(const AssortmentInstance& instance, const LevelSummary& levels,
               double delta);

// l*_t(q) = LStarDelta(-Delta J_{t-1}(q)) on every cell with t, q >= 1.
MonotonicityReport CheckLStarAgreement(const MultiPeriodInstance& instance,
                                       const DpTable& table);

}  // namespace assort

#endif  // ASSORT_MULTI_PERIOD_H_
