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

#include "assort/choice_model.h"

#include <cmath>
#include <memory>
#include <string>
#include <vector>

namespace assort {

ChoiceModel::ChoiceModel(int num_products) : num_products_(num_products) {
  if (num_products < 1 || num_products > kMaxProducts) {
    throw Error(ErrorCode::kInvalidInstance,
                "number of products must be in [1, 64], got " +
                    std::to_string(num_products));
  }
}

double ChoiceModel::Evaluate(int x, Subset s) const {
  if (x < 0 || x > num_products_) {
    throw Error(ErrorCode::kInvalidInstance,
                "product id out of range: " + std::to_string(x));
  }
  if (x == 0) return 1.0 - PurchaseProbability(s);
  if (!Contains(s, x)) return 0.0;
  return Probability(x, s);
}

std::vector<double> ChoiceModel::ChoiceVector(Subset s) const {
  std::vector<double> out;
  out.reserve(Cardinality(s));
  for (Subset rest = s; rest != 0; rest &= rest - 1) {
    out.push_back(Probability(std::countr_zero(rest) + 1, s));
  }
  return out;
}

double ChoiceModel::PurchaseProbability(Subset s) const {
  double total = 0.0;
  for (const double p : ChoiceVector(s)) total += p;
  return total;
}

TabularModel::TabularModel(
    int num_products, const std::function<std::vector<double>(Subset)>& fill,
    int guard, bool check_range)
    : ChoiceModel(num_products) {
  CheckEnumerationGuard(num_products, guard, "tabular model");
  const Subset count = Subset{1} << num_products;
  offsets_.resize(count + 1);
  std::uint64_t total = 0;
  for (Subset s = 0; s < count; ++s) {
    offsets_[s] = static_cast<std::uint32_t>(total);
    total += Cardinality(s);
  }
  offsets_[count] = static_cast<std::uint32_t>(total);
  values_.resize(total);
  for (Subset s = 1; s < count; ++s) {
    const std::vector<double> row = fill(s);
    if (static_cast<int>(row.size()) != Cardinality(s)) {
      throw Error(ErrorCode::kInvalidInstance,
                  "tabular row for " + FormatSubset(s) + " has " +
                      std::to_string(row.size()) + " entries");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!std::isfinite(row[i])) {
        throw Error(ErrorCode::kInvalidInstance,
                    "non-finite probability in row " + FormatSubset(s));
      }
      if (check_range && (row[i] < 0.0 || row[i] > 1.0)) {
        throw Error(
            ErrorCode::kInvalidInstance,
            "tabular probability outside [0,1] in row " + FormatSubset(s));
      }
      values_[offsets_[s] + i] = row[i];
    }
  }
}

std::span<const double> TabularModel::Row(Subset s) const {
  return {values_.data() + offsets_[s],
          static_cast<std::size_t>(offsets_[s + 1] - offsets_[s])};
}

std::vector<double> TabularModel::ChoiceVector(Subset s) const {
  const auto row = Row(s);
  return {row.begin(), row.end()};
}

double TabularModel::Probability(int x, Subset s) const {
  return values_[offsets_[s] + RankInSubset(s, x)];
}

std::shared_ptr<const TabularModel> ToTabular(const ChoiceModel& model,
                                              int guard) {
  return std::make_shared<const TabularModel>(
      model.num_products(),
      [&model](Subset s) { return model.ChoiceVector(s); }, guard,
      /*check_range=*/false);
}

std::shared_ptr<const TabularModel> ToTabular(const ChoiceModelPtr& model,
                                              int guard) {
  if (auto tabular = std::dynamic_pointer_cast<const TabularModel>(model)) {
    return tabular;
  }
  return ToTabular(*model, guard);
}

}  // namespace assort
