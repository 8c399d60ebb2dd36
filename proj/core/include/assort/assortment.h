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

// The static assortment problem: revenue-ordered assortments, an exhaustive
// oracle, and the three approximation bounds.

#ifndef ASSORT_ASSORTMENT_H_
#define ASSORT_ASSORTMENT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "assort/choice_model.h"
#include "assort/common.h"

namespace assort {

// sum_{x in s} P(x, s) r(x), accumulated in increasing product order.
// revenue[x-1] is r(x). Throws kNonPositiveRevenue if any r(x) <= 0.
double EvaluateRevenue(const ChoiceModel& model,
                       std::span<const double> revenue, Subset s);

class AssortmentInstance {
 public:
  AssortmentInstance(ChoiceModelPtr model, std::vector<double> revenue);

  const ChoiceModel& model() const { return *model_; }
  const ChoiceModelPtr& model_ptr() const { return model_; }
  int num_products() const { return model_->num_products(); }

  // revenue()[x-1] = r(x).
  const std::vector<double>& revenue() const { return revenue_; }
  double revenue_of(int x) const { return revenue_[x - 1]; }

  // Distinct revenues r_1 < ... < r_k (exact comparison).
  const std::vector<double>& levels() const { return levels_; }
  int num_levels() const { return static_cast<int>(levels_.size()); }

  // S_i = {x : r(x) >= r_i}, 1 <= i <= k.
  Subset ThresholdSet(int i) const;

  double Revenue(Subset s) const;

 private:
  ChoiceModelPtr model_;
  std::vector<double> revenue_;
  std::vector<double> levels_;
};

enum class SolutionMethod { kRevenueOrdered, kBruteForce };

std::string_view SolutionMethodName(SolutionMethod method);

struct AssortmentSolution {
  Subset assortment = 0;
  double revenue = 0.0;
  SolutionMethod method = SolutionMethod::kBruteForce;
};

struct RevenueOrderedResult {
  std::vector<double> levels;      // r_1..r_k
  std::vector<Subset> candidates;  // S_1..S_k
  std::vector<double> revenues;    // revenue of S_i
  int best_level = 1;              // 1-based
  AssortmentSolution best;
};

// Evaluates S_1..S_k. Exact ties go to the largest threshold.
RevenueOrderedResult RevenueOrdered(const AssortmentInstance& instance);

// Exhaustive search over all 2^n assortments, the empty one included.
// Exact ties go to the lexicographically smallest sorted element list.
AssortmentSolution BruteForceOptimum(const AssortmentInstance& instance,
                                     int guard = kDefaultEnumerationGuard);

struct BoundC {
  std::vector<double> n_values;  // N_1..N_k
  int ell = 0;                   // max i with N_i > 0
  double sum = 0.0;              // sum_{i<=ell} (N_i - N_{i+1}) / N_i
  double exact = 0.0;            // 1 / sum
  double nu = 0.0;               // N_1 / N_ell
  double log = 0.0;              // 1 / (1 + ln nu)
};

// Throws kBoundCUnavailable when N_1 = 0.
BoundC ComputeBoundC(const AssortmentInstance& instance, Subset optimal);

struct BoundReport {
  int k = 0;
  double bound_a = 0.0;
  double sum_b = 0.0;  // sum_i (r_i - r_{i-1}) / r_i with r_0 = 0
  double bound_b_exact = 0.0;
  double rho = 0.0;
  double bound_b_log = 0.0;
  std::optional<BoundC> c;  // absent without an optimum or when N_1 = 0
  // Purchase probability of S_k, the top-revenue products alone.
  double lambda_tilde = 0.0;
  std::optional<bool> nu_at_most_lambda_tilde;
  // "A", "B" or "C": which exact bound is largest (first on ties).
  std::string largest;
};

BoundReport ComputeBounds(const AssortmentInstance& instance,
                          std::optional<Subset> optimal = std::nullopt);

struct GuaranteeReport {
  AssortmentSolution opt;
  AssortmentSolution revord;
  double ratio = 1.0;  // revord / OPT, 1 when OPT = 0
  BoundReport bounds;
  bool holds_a = true;
  bool holds_b_exact = true;
  bool holds_b_log = true;
  std::optional<bool> holds_c_exact;
  std::optional<bool> holds_c_log;
  // revenue(S_i) >= r_i sum_{x in S* and S_i} P(x, S*) for every i; on
  // failure the first violating level.
  bool holds_technical = true;
  int technical_violation_level = 0;

  bool passed() const {
    return holds_a && holds_b_exact && holds_b_log &&
           holds_c_exact.value_or(true) && holds_c_log.value_or(true) &&
           holds_technical;
  }
};

// Brute force plus every applicable bound, compared with relative slack
// kRelativeSlack. Throws kRegularityViolation for non-regular models.
GuaranteeReport VerifyGuarantee(const AssortmentInstance& instance,
                                int guard = kDefaultEnumerationGuard);

// Tight example with r((i, j)) = eps^-j. Throws kInvalidEpsilon unless
// 0 < eps <= 1/2 and kInvalidParams for k outside [1, 10].
AssortmentInstance GenerateTightInstance(int k, double epsilon);

// {(1,1), (2,2), ..., (k,k)}, the optimal assortment of the tight example.
Subset TightOptimalAssortment(int k);

}  // namespace assort

#endif  // ASSORT_ASSORTMENT_H_
