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

#ifndef ASSORT_CHOICE_MODEL_H_
#define ASSORT_CHOICE_MODEL_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string_view>
#include <vector>

#include "assort/common.h"

namespace assort {

// A system of choice probabilities over products 1..n plus the no-purchase
// option 0. Implementations are immutable after construction and every
// evaluation is a pure function of its arguments, so a model can be shared
// freely between threads.
class ChoiceModel {
 public:
  explicit ChoiceModel(int num_products);
  virtual ~ChoiceModel() = default;

  ChoiceModel(const ChoiceModel&) = default;
  ChoiceModel& operator=(const ChoiceModel&) = delete;

  int num_products() const { return num_products_; }
  Subset all_products() const { return FullSet(num_products_); }

  // P(x, s). Returns 0 for a product that is not offered, and
  // 1 - sum_{y in s} P(y, s) for x = 0.
  double Evaluate(int x, Subset s) const;

  // P(y, s) for every y in s, in increasing product order. The default
  // implementation calls Probability() once per member; families that can
  // share work across members override it.
  virtual std::vector<double> ChoiceVector(Subset s) const;

  // sum_{x in s} P(x, s), the demand function f(s).
  double PurchaseProbability(Subset s) const;

  virtual std::string_view family() const = 0;

 protected:
  // P(x, s) for x in s, x >= 1.
  virtual double Probability(int x, Subset s) const = 0;

 private:
  int num_products_;
};

using ChoiceModelPtr = std::shared_ptr<const ChoiceModel>;

// Explicit probabilities for every (x, S) with S a subset of the products
// and x in S. P(0, S) is derived. This is the interchange representation:
// every other family converts to it, and the axiom checkers run on it.
class TabularModel final : public ChoiceModel {
 public:
  // Probabilities are filled by `fill(s)`, which must return one value per
  // member of s in increasing product order. Throws kGroundSetTooLarge when
  // num_products exceeds `guard`. With `check_range` off only finiteness is
  // enforced, so that a checker can see out-of-range values.
  TabularModel(int num_products,
               const std::function<std::vector<double>(Subset)>& fill,
               int guard = kDefaultEnumerationGuard, bool check_range = true);

  std::vector<double> ChoiceVector(Subset s) const override;
  std::string_view family() const override { return "tabular"; }

  // Stored values for s (one per member).
  std::span<const double> Row(Subset s) const;

 protected:
  double Probability(int x, Subset s) const override;

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<double> values_;
};

// Materializes `model` as a table over all 2^n assortments.
std::shared_ptr<const TabularModel> ToTabular(
    const ChoiceModel& model, int guard = kDefaultEnumerationGuard);

// Same, but returns `model` itself when it already is tabular.
std::shared_ptr<const TabularModel> ToTabular(
    const ChoiceModelPtr& model, int guard = kDefaultEnumerationGuard);

}  // namespace assort

#endif  // ASSORT_CHOICE_MODEL_H_
