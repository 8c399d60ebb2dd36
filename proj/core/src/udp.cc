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

#include "assort/udp.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assort/choice_model.h"

namespace assort {
namespace {

void CheckItemCount(int num_items) {
  if (num_items < 1 || num_items > kMaxProducts) {
    throw Error(
        ErrorCode::kInvalidInstance,
        "number of items must be in [1, 64], got " + std::to_string(num_items));
  }
}

void CheckValuation(double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::kInvalidInstance, "valuations must be positive");
  }
}

std::vector<double> SortedDistinct(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

void CheckPrices(const PriceAssignment& prices, int num_items) {
  if (static_cast<int>(prices.size()) != num_items) {
    throw Error(ErrorCode::kInvalidInstance,
                "expected " + std::to_string(num_items) + " prices, got " +
                    std::to_string(prices.size()));
  }
  for (const double p : prices) {
    if (!(p > 0.0) || std::isnan(p)) {
      throw Error(ErrorCode::kInvalidInstance,
                  "prices must be positive or unpriced");
    }
  }
}

template <typename Instance>
UniformPricingResult UniformPricingImpl(const Instance& instance) {
  UniformPricingResult result;
  result.candidates = instance.CandidatePrices();
  for (const double q : result.candidates) {
    const PriceAssignment prices(instance.num_items(), q);
    const double revenue = SimulatePurchases(instance, prices).revenue;
    result.revenues.push_back(revenue);
    if (result.revenues.size() == 1 || revenue >= result.revenue) {
      result.price = q;
      result.revenue = revenue;
    }
  }
  return result;
}

template <typename Instance>
PricingSolution BruteForcePricingImpl(const Instance& instance,
                                      const std::optional<PriceLadder>& ladder,
                                      std::uint64_t guard) {
  std::vector<double> grid = instance.CandidatePrices();
  grid.push_back(kUnpriced);
  const int n = instance.num_items();
  const std::uint64_t base = grid.size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > guard / base) {
      throw Error(ErrorCode::kSearchSpaceTooLarge,
                  std::to_string(base) + "^" + std::to_string(n) +
                      " price assignments exceed the guard of " +
                      std::to_string(guard));
    }
    total *= base;
  }
  std::vector<std::size_t> digits(n, 0);
  PriceAssignment prices(n, grid[0]);
  PricingSolution best;
  bool found = false;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (!ladder || ladder->IsFeasible(prices)) {
      const double revenue = SimulatePurchases(instance, prices).revenue;
      if (!found || revenue > best.revenue) {
        best.prices = prices;
        best.revenue = revenue;
        found = true;
      }
    }
    // Odometer with the last item varying fastest.
    for (int i = n - 1; i >= 0; --i) {
      if (++digits[i] < base) {
        prices[i] = grid[digits[i]];
        break;
      }
      digits[i] = 0;
      prices[i] = grid[0];
    }
  }
  return best;
}

// Shared plumbing of both reductions: products are (item, level) pairs,
// item-major.
class ReducedPricingModel : public ChoiceModel {
 public:
  ReducedPricingModel(int num_items, int num_levels, int num_consumers)
      : ChoiceModel(num_items * num_levels),
        num_items_(num_items),
        num_levels_(num_levels),
        num_consumers_(num_consumers) {}

  std::vector<double> ChoiceVector(Subset s) const override {
    const std::vector<int> members = Elements(s);
    std::vector<double> out(members.size(), 0.0);
    const std::vector<int> cheapest = CheapestLevels(s);
    std::vector<int> chosen;
    for (int i = 0; i < num_consumers_; ++i) {
      chosen.clear();
      Choose(i, s, cheapest, chosen);
      if (chosen.empty()) continue;
      const double share = 1.0 / static_cast<double>(chosen.size());
      for (const int y : chosen) {
        const auto it = std::lower_bound(members.begin(), members.end(), y);
        out[it - members.begin()] += share;
      }
    }
    for (double& p : out) p /= num_consumers_;
    return out;
  }

 protected:
  double Probability(int x, Subset s) const override {
    const std::vector<int> members = Elements(s);
    const auto it = std::lower_bound(members.begin(), members.end(), x);
    return ChoiceVector(s)[it - members.begin()];
  }

  int item_of(int y) const { return (y - 1) / num_levels_ + 1; }
  int level_of(int y) const { return (y - 1) % num_levels_; }
  int product_of(int item, int level) const {
    return (item - 1) * num_levels_ + level + 1;
  }

  // Lowest level offered per item (index x-1), or -1.
  std::vector<int> CheapestLevels(Subset s) const {
    std::vector<int> cheapest(num_items_, -1);
    for (Subset rest = s; rest != 0; rest &= rest - 1) {
      const int y = std::countr_zero(rest) + 1;
      int& slot = cheapest[item_of(y) - 1];
      if (slot < 0 || level_of(y) < slot) slot = level_of(y);
    }
    return cheapest;
  }

  // Appends Q_i(S) to `chosen`.
  virtual void Choose(int consumer, Subset s, const std::vector<int>& cheapest,
                      std::vector<int>& chosen) const = 0;

  int num_items_;
  int num_levels_;
  int num_consumers_;
};

class ReducedMinModel final : public ReducedPricingModel {
 public:
  ReducedMinModel(const UdpMinInstance& instance, std::vector<double> levels)
      : ReducedPricingModel(instance.num_items(),
                            static_cast<int>(levels.size()),
                            instance.num_consumers()),
        levels_(std::move(levels)) {
    for (const auto& c : instance.consumers()) {
      bundles_.push_back(c.bundle);
      valuations_.push_back(c.valuation);
    }
  }

  std::string_view family() const override { return "udp_min_reduction"; }

 private:
  // Pairs (x, v) in S with x in B_i, v <= v_i and v minimal over the pairs
  // of S whose item lies in B_i.
  void Choose(int consumer, Subset /*s*/, const std::vector<int>& cheapest,
              std::vector<int>& chosen) const override {
    int lowest = -1;
    for (const int x : bundles_[consumer]) {
      const int level = cheapest[x - 1];
      if (level >= 0 && (lowest < 0 || level < lowest)) lowest = level;
    }
    if (lowest < 0 || levels_[lowest] > valuations_[consumer]) return;
    std::vector<int> items = bundles_[consumer];
    std::sort(items.begin(), items.end());
    for (const int x : items) {
      if (cheapest[x - 1] == lowest) chosen.push_back(product_of(x, lowest));
    }
  }

  std::vector<double> levels_;
  std::vector<std::vector<int>> bundles_;
  std::vector<double> valuations_;
};

class ReducedRankModel final : public ReducedPricingModel {
 public:
  ReducedRankModel(const UdpRankInstance& instance, std::vector<double> levels)
      : ReducedPricingModel(instance.num_items(),
                            static_cast<int>(levels.size()),
                            instance.num_consumers()),
        levels_(std::move(levels)),
        consumers_(instance.consumers()) {}

  std::string_view family() const override { return "udp_rank_reduction"; }

 private:
  // The pair (x, p_S(x)) of the first item x along phi_i with
  // p_S(x) <= v(i, x).
  void Choose(int consumer, Subset /*s*/, const std::vector<int>& cheapest,
              std::vector<int>& chosen) const override {
    const UdpRankConsumer& c = consumers_[consumer];
    for (const int x : c.ranking) {
      const int level = cheapest[x - 1];
      if (level >= 0 && levels_[level] <= c.valuations[x - 1]) {
        chosen.push_back(product_of(x, level));
        return;
      }
    }
  }

  std::vector<double> levels_;
  std::vector<UdpRankConsumer> consumers_;
};

UdpReduction BuildReduction(ChoiceModelPtr model, int num_items,
                            int num_consumers, std::vector<double> levels) {
  const int num_levels = static_cast<int>(levels.size());
  std::vector<PricedItem> products;
  std::vector<double> revenue;
  for (int x = 1; x <= num_items; ++x) {
    for (int l = 0; l < num_levels; ++l) {
      products.push_back({x, levels[l]});
      revenue.push_back(num_consumers * levels[l]);
    }
  }
  return UdpReduction{AssortmentInstance(std::move(model), std::move(revenue)),
                      std::move(products), std::move(levels)};
}

void CheckReductionSize(int num_items, std::size_t num_levels, int guard) {
  const int size = num_items * static_cast<int>(num_levels);
  CheckEnumerationGuard(size, std::min(guard, kMaxProducts),
                        "pricing reduction");
}

}  // namespace

UdpMinInstance::UdpMinInstance(int num_items,
                               std::vector<UdpMinConsumer> consumers)
    : num_items_(num_items), consumers_(std::move(consumers)) {
  CheckItemCount(num_items);
  if (consumers_.empty()) {
    throw Error(ErrorCode::kInvalidInstance, "no consumers");
  }
  for (const auto& c : consumers_) {
    if (c.bundle.empty()) {
      throw Error(ErrorCode::kInvalidInstance, "empty consumer bundle");
    }
    for (const int x : c.bundle) {
      if (x < 1 || x > num_items) {
        throw Error(ErrorCode::kInvalidInstance,
                    "bundle item out of range: " + std::to_string(x));
      }
    }
    std::vector<int> sorted = c.bundle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::kInvalidInstance, "repeated item in bundle");
    }
    CheckValuation(c.valuation);
  }
}

std::vector<double> UdpMinInstance::CandidatePrices() const {
  std::vector<double> values;
  for (const auto& c : consumers_) values.push_back(c.valuation);
  return SortedDistinct(std::move(values));
}

UdpRankInstance::UdpRankInstance(int num_items,
                                 std::vector<UdpRankConsumer> consumers)
    : num_items_(num_items), consumers_(std::move(consumers)) {
  CheckItemCount(num_items);
  if (consumers_.empty()) {
    throw Error(ErrorCode::kInvalidInstance, "no consumers");
  }
  for (const auto& c : consumers_) {
    if (static_cast<int>(c.ranking.size()) != num_items ||
        static_cast<int>(c.valuations.size()) != num_items) {
      throw Error(ErrorCode::kInvalidInstance,
                  "ranking and valuations must list every item");
    }
    std::vector<int> sorted = c.ranking;
    std::sort(sorted.begin(), sorted.end());
    for (int x = 1; x <= num_items; ++x) {
      if (sorted[x - 1] != x) {
        throw Error(ErrorCode::kInvalidInstance,
                    "ranking is not a permutation of the items");
      }
    }
    for (const double v : c.valuations) CheckValuation(v);
  }
}

std::vector<double> UdpRankInstance::CandidatePrices() const {
  std::vector<double> values;
  for (const auto& c : consumers_) {
    values.insert(values.end(), c.valuations.begin(), c.valuations.end());
  }
  return SortedDistinct(std::move(values));
}

PurchaseOutcome SimulatePurchases(const UdpMinInstance& instance,
                                  const PriceAssignment& prices) {
  CheckPrices(prices, instance.num_items());
  PurchaseOutcome out;
  for (const auto& c : instance.consumers()) {
    int choice = 0;
    for (const int x : c.bundle) {
      const double p = prices[x - 1];
      if (p > c.valuation) continue;
      if (choice == 0 || p < prices[choice - 1] ||
          (p == prices[choice - 1] && x < choice)) {
        choice = x;
      }
    }
    out.bought.push_back(choice);
    if (choice != 0) out.revenue += prices[choice - 1];
  }
  return out;
}

PurchaseOutcome SimulatePurchases(const UdpRankInstance& instance,
                                  const PriceAssignment& prices) {
  CheckPrices(prices, instance.num_items());
  PurchaseOutcome out;
  for (const auto& c : instance.consumers()) {
    int choice = 0;
    for (const int x : c.ranking) {
      if (prices[x - 1] <= c.valuations[x - 1]) {
        choice = x;
        break;
      }
    }
    out.bought.push_back(choice);
    if (choice != 0) out.revenue += prices[choice - 1];
  }
  return out;
}

UniformPricingResult UniformPricing(const UdpMinInstance& instance) {
  return UniformPricingImpl(instance);
}

UniformPricingResult UniformPricing(const UdpRankInstance& instance) {
  return UniformPricingImpl(instance);
}

PriceLadder::PriceLadder(int num_items, std::vector<int> psi)
    : psi_(std::move(psi)) {
  std::vector<int> sorted = psi_;
  std::sort(sorted.begin(), sorted.end());
  bool ok = static_cast<int>(sorted.size()) == num_items;
  for (int x = 1; ok && x <= num_items; ++x) ok = sorted[x - 1] == x;
  if (!ok) {
    throw Error(ErrorCode::kInvalidInstance,
                "price ladder must be a permutation of the items");
  }
}

bool PriceLadder::IsFeasible(const PriceAssignment& prices) const {
  for (std::size_t i = 1; i < psi_.size(); ++i) {
    if (prices[psi_[i - 1] - 1] > prices[psi_[i] - 1]) return false;
  }
  return true;
}

PricingSolution BruteForcePricing(const UdpMinInstance& instance,
                                  const std::optional<PriceLadder>& ladder,
                                  std::uint64_t guard) {
  return BruteForcePricingImpl(instance, ladder, guard);
}

PricingSolution BruteForcePricing(const UdpRankInstance& instance,
                                  const std::optional<PriceLadder>& ladder,
                                  std::uint64_t guard) {
  return BruteForcePricingImpl(instance, ladder, guard);
}

PriceAssignment UdpReduction::PricesOf(Subset s) const {
  const int num_items = static_cast<int>(products.size() / price_levels.size());
  PriceAssignment prices(num_items, kUnpriced);
  for (Subset rest = s; rest != 0; rest &= rest - 1) {
    const PricedItem& y = products[std::countr_zero(rest)];
    prices[y.item - 1] = std::min(prices[y.item - 1], y.price);
  }
  return prices;
}

Subset UdpReduction::AssortmentOf(const PriceAssignment& prices) const {
  Subset s = 0;
  for (std::size_t y = 0; y < products.size(); ++y) {
    if (products[y].price >= prices[products[y].item - 1]) {
      s |= Singleton(static_cast<int>(y) + 1);
    }
  }
  return s;
}

UdpReduction ReduceToAssortment(const UdpMinInstance& instance, int guard) {
  std::vector<double> levels = instance.CandidatePrices();
  CheckReductionSize(instance.num_items(), levels.size(), guard);
  auto model = std::make_shared<const ReducedMinModel>(instance, levels);
  return BuildReduction(std::move(model), instance.num_items(),
                        instance.num_consumers(), std::move(levels));
}

UdpReduction ReduceToAssortment(const UdpRankInstance& instance, int guard) {
  std::vector<double> levels = instance.CandidatePrices();
  CheckReductionSize(instance.num_items(), levels.size(), guard);
  auto model = std::make_shared<const ReducedRankModel>(instance, levels);
  return BuildReduction(std::move(model), instance.num_items(),
                        instance.num_consumers(), std::move(levels));
}

double ValuationRatio(const UdpMinInstance& instance) {
  const std::vector<double> v = instance.CandidatePrices();
  return v.back() / v.front();
}

double ValuationRatio(const UdpRankInstance& instance) {
  const std::vector<double> v = instance.CandidatePrices();
  return v.back() / v.front();
}

}  // namespace assort
