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

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "assort/axioms.h"
#include "assort/models.h"

namespace assort {
namespace {

void CheckRevenue(std::span<const double> revenue, int num_products) {
  if (static_cast<int>(revenue.size()) != num_products) {
    throw Error(ErrorCode::kInvalidInstance,
                "expected " + std::to_string(num_products) + " revenues, got " +
                    std::to_string(revenue.size()));
  }
  for (std::size_t i = 0; i < revenue.size(); ++i) {
    if (!(revenue[i] > 0.0) || !std::isfinite(revenue[i])) {
      throw Error(ErrorCode::kNonPositiveRevenue,
                  "r(" + std::to_string(i + 1) + ") must be positive");
    }
  }
}

double RevenueUnchecked(const ChoiceModel& model,
                        std::span<const double> revenue, Subset s) {
  if (s == 0) return 0.0;
  const std::vector<double> probabilities = model.ChoiceVector(s);
  double total = 0.0;
  std::size_t i = 0;
  for (Subset rest = s; rest != 0; rest &= rest - 1, ++i) {
    total += probabilities[i] * revenue[std::countr_zero(rest)];
  }
  return total;
}

bool AtLeast(double lhs, double bound) {
  return GreaterOrNearlyEqual(lhs, bound, kRelativeSlack);
}

}  // namespace

double EvaluateRevenue(const ChoiceModel& model,
                       std::span<const double> revenue, Subset s) {
  CheckRevenue(revenue, model.num_products());
  if (!IsSubsetOf(s, model.all_products())) {
    throw Error(ErrorCode::kInvalidInstance,
                "assortment " + FormatSubset(s) + " has unknown products");
  }
  return RevenueUnchecked(model, revenue, s);
}

AssortmentInstance::AssortmentInstance(ChoiceModelPtr model,
                                       std::vector<double> revenue)
    : model_(std::move(model)), revenue_(std::move(revenue)) {
  if (!model_) throw Error(ErrorCode::kInvalidInstance, "null model");
  CheckRevenue(revenue_, model_->num_products());
  levels_ = revenue_;
  std::sort(levels_.begin(), levels_.end());
  levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
}

Subset AssortmentInstance::ThresholdSet(int i) const {
  if (i < 1 || i > num_levels()) {
    throw Error(ErrorCode::kInvalidParams,
                "threshold index out of range: " + std::to_string(i));
  }
  const double threshold = levels_[i - 1];
  Subset s = 0;
  for (int x = 1; x <= num_products(); ++x) {
    if (revenue_[x - 1] >= threshold) s |= Singleton(x);
  }
  return s;
}

double AssortmentInstance::Revenue(Subset s) const {
  return RevenueUnchecked(*model_, revenue_, s & model_->all_products());
}

std::string_view SolutionMethodName(SolutionMethod method) {
  switch (method) {
    case SolutionMethod::kRevenueOrdered:
      return "revenue-ordered";
    case SolutionMethod::kBruteForce:
      return "brute-force";
  }
  return "unknown";
}

RevenueOrderedResult RevenueOrdered(const AssortmentInstance& instance) {
  RevenueOrderedResult result;
  result.levels = instance.levels();
  const int k = instance.num_levels();
  for (int i = 1; i <= k; ++i) {
    const Subset s = instance.ThresholdSet(i);
    const double value = instance.Revenue(s);
    result.candidates.push_back(s);
    result.revenues.push_back(value);
    if (i == 1 || value >= result.best.revenue) {
      result.best_level = i;
      result.best = {s, value, SolutionMethod::kRevenueOrdered};
    }
  }
  return result;
}

AssortmentSolution BruteForceOptimum(const AssortmentInstance& instance,
                                     int guard) {
  const int n = instance.num_products();
  CheckEnumerationGuard(n, guard, "brute-force optimum");
  AssortmentSolution best{0, 0.0, SolutionMethod::kBruteForce};
  const Subset count = Subset{1} << n;
  for (Subset s = 1; s < count; ++s) {
    const double value = instance.Revenue(s);
    if (value > best.revenue ||
        (value == best.revenue && LexLess(s, best.assortment))) {
      best.assortment = s;
      best.revenue = value;
    }
  }
  return best;
}

BoundC ComputeBoundC(const AssortmentInstance& instance, Subset optimal) {
  const int k = instance.num_levels();
  const std::vector<double> probabilities =
      optimal == 0 ? std::vector<double>{}
                   : instance.model().ChoiceVector(optimal);
  BoundC c;
  c.n_values.assign(k, 0.0);
  std::size_t position = 0;
  for (Subset rest = optimal; rest != 0; rest &= rest - 1, ++position) {
    const double r = instance.revenue_of(std::countr_zero(rest) + 1);
    for (int i = 1; i <= k; ++i) {
      if (r >= instance.levels()[i - 1]) {
        c.n_values[i - 1] += probabilities[position];
      }
    }
  }
  if (k == 0 || !(c.n_values[0] > 0.0)) {
    throw Error(ErrorCode::kBoundCUnavailable,
                "N_1 = 0 for assortment " + FormatSubset(optimal));
  }
  for (int i = 1; i <= k; ++i) {
    if (c.n_values[i - 1] > 0.0) c.ell = i;
  }
  for (int i = 1; i <= c.ell; ++i) {
    const double next = i < k ? c.n_values[i] : 0.0;
    c.sum += (c.n_values[i - 1] - next) / c.n_values[i - 1];
  }
  c.exact = 1.0 / c.sum;
  c.nu = c.n_values[0] / c.n_values[c.ell - 1];
  c.log = 1.0 / (1.0 + std::log(c.nu));
  return c;
}

BoundReport ComputeBounds(const AssortmentInstance& instance,
                          std::optional<Subset> optimal) {
  BoundReport report;
  const auto& levels = instance.levels();
  report.k = instance.num_levels();
  report.bound_a = 1.0 / report.k;
  double previous = 0.0;
  for (const double r : levels) {
    report.sum_b += (r - previous) / r;
    previous = r;
  }
  report.bound_b_exact = 1.0 / report.sum_b;
  report.rho = levels.back() / levels.front();
  report.bound_b_log = 1.0 / (1.0 + std::log(report.rho));
  report.lambda_tilde =
      instance.model().PurchaseProbability(instance.ThresholdSet(report.k));
  if (optimal) {
    try {
      report.c = ComputeBoundC(instance, *optimal);
      report.nu_at_most_lambda_tilde = report.c->nu <= report.lambda_tilde;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBoundCUnavailable) throw;
    }
  }
  report.largest = "A";
  double largest = report.bound_a;
  if (report.bound_b_exact > largest) {
    largest = report.bound_b_exact;
    report.largest = "B";
  }
  if (report.c && report.c->exact > largest) report.largest = "C";
  return report;
}

GuaranteeReport VerifyGuarantee(const AssortmentInstance& instance, int guard) {
  const AxiomReport axioms = CheckAxioms(instance.model(), guard);
  if (!axioms.AllPassed()) {
    std::string detail = "model is not a regular discrete choice model";
    if (!axioms.regularity.passed && axioms.regularity.witness) {
      detail += " " + axioms.regularity.witness->ToString();
    }
    throw Error(ErrorCode::kRegularityViolation, detail);
  }
  const AssortmentInstance table(ToTabular(instance.model_ptr(), guard),
                                 instance.revenue());

  GuaranteeReport report;
  report.opt = BruteForceOptimum(table, guard);
  const RevenueOrderedResult revord = RevenueOrdered(table);
  report.revord = revord.best;
  const double opt = report.opt.revenue;
  const double got = report.revord.revenue;
  report.ratio = opt > 0.0 ? got / opt : 1.0;
  report.bounds = ComputeBounds(table, report.opt.assortment);

  report.holds_a = AtLeast(got, report.bounds.bound_a * opt);
  report.holds_b_exact = AtLeast(got, report.bounds.bound_b_exact * opt);
  report.holds_b_log = AtLeast(got, report.bounds.bound_b_log * opt);
  if (report.bounds.c) {
    report.holds_c_exact = AtLeast(got, report.bounds.c->exact * opt);
    report.holds_c_log = AtLeast(got, report.bounds.c->log * opt);
  }

  const Subset star = report.opt.assortment;
  const std::vector<double> star_probabilities =
      star == 0 ? std::vector<double>{} : table.model().ChoiceVector(star);
  for (int i = 1; i <= table.num_levels(); ++i) {
    const Subset si = revord.candidates[i - 1];
    double mass = 0.0;
    std::size_t position = 0;
    for (Subset rest = star; rest != 0; rest &= rest - 1, ++position) {
      if (Contains(si, std::countr_zero(rest) + 1)) {
        mass += star_probabilities[position];
      }
    }
    if (!AtLeast(revord.revenues[i - 1], table.levels()[i - 1] * mass)) {
      report.holds_technical = false;
      report.technical_violation_level = i;
      break;
    }
  }
  return report;
}

AssortmentInstance GenerateTightInstance(int k, double epsilon) {
  auto model = std::make_shared<const TightExampleModel>(k, epsilon);
  std::vector<double> revenue(model->num_products());
  for (int x = 1; x <= model->num_products(); ++x) {
    revenue[x - 1] = std::pow(epsilon, -model->Pair(x).second);
  }
  return AssortmentInstance(std::move(model), std::move(revenue));
}

Subset TightOptimalAssortment(int k) {
  Subset s = 0;
  for (int i = 1; i <= k; ++i)
    s |= Singleton(TightExampleModel::ProductId(i, i));
  return s;
}

}  // namespace assort
