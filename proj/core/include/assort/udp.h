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

// Unit-demand envy-free pricing (UDP_min and UDP_rank): purchase simulation,
// uniform pricing, an exhaustive oracle over valuation-valued prices, and
// the reductions to assortment instances.
//
// Items are numbered 1..n. A price vector stores p(x) at index x-1; the
// sentinel kUnpriced (+inf) means the item is never affordable.

#ifndef ASSORT_UDP_H_
#define ASSORT_UDP_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "assort/assortment.h"
#include "assort/common.h"

namespace assort {

inline constexpr double kUnpriced = std::numeric_limits<double>::infinity();

inline constexpr std::uint64_t kDefaultPricingGuard = 10'000'000;

using PriceAssignment = std::vector<double>;

struct UdpMinConsumer {
  std::vector<int> bundle;  // B_i
  double valuation = 0.0;   // v_i
};

class UdpMinInstance {
 public:
  UdpMinInstance(int num_items, std::vector<UdpMinConsumer> consumers);

  int num_items() const { return num_items_; }
  int num_consumers() const { return static_cast<int>(consumers_.size()); }
  const std::vector<UdpMinConsumer>& consumers() const { return consumers_; }

  // Distinct valuations, increasing.
  std::vector<double> CandidatePrices() const;

 private:
  int num_items_;
  std::vector<UdpMinConsumer> consumers_;
};

struct UdpRankConsumer {
  std::vector<int> ranking;        // phi_i, most preferred first
  std::vector<double> valuations;  // v(i, x) at index x-1
};

class UdpRankInstance {
 public:
  UdpRankInstance(int num_items, std::vector<UdpRankConsumer> consumers);

  int num_items() const { return num_items_; }
  int num_consumers() const { return static_cast<int>(consumers_.size()); }
  const std::vector<UdpRankConsumer>& consumers() const { return consumers_; }

  std::vector<double> CandidatePrices() const;

 private:
  int num_items_;
  std::vector<UdpRankConsumer> consumers_;
};

struct PurchaseOutcome {
  std::vector<int> bought;  // item per consumer, 0 for none
  double revenue = 0.0;
};

// Each consumer buys a cheapest affordable item of her bundle, lowest index
// among equally cheap ones.
PurchaseOutcome SimulatePurchases(const UdpMinInstance& instance,
                                  const PriceAssignment& prices);

// Each consumer buys the first item along her ranking that she can afford.
PurchaseOutcome SimulatePurchases(const UdpRankInstance& instance,
                                  const PriceAssignment& prices);

struct UniformPricingResult {
  std::vector<double> candidates;  // increasing
  std::vector<double> revenues;
  double price = 0.0;
  double revenue = 0.0;
};

// Best common price among the valuations; ties go to the highest price.
UniformPricingResult UniformPricing(const UdpMinInstance& instance);
UniformPricingResult UniformPricing(const UdpRankInstance& instance);

// Items listed in order of nondecreasing price: p(psi[0]) <= p(psi[1]) <= ...
class PriceLadder {
 public:
  PriceLadder(int num_items, std::vector<int> psi);

  const std::vector<int>& psi() const { return psi_; }
  bool IsFeasible(const PriceAssignment& prices) const;

 private:
  std::vector<int> psi_;
};

struct PricingSolution {
  PriceAssignment prices;
  double revenue = 0.0;
};

// Exhaustive search over prices drawn from the valuations plus kUnpriced.
// The first assignment in lexicographic order (candidates increasing,
// kUnpriced last) wins exact ties. Throws kSearchSpaceTooLarge when the
// number of assignments exceeds `guard`.
PricingSolution BruteForcePricing(
    const UdpMinInstance& instance,
    const std::optional<PriceLadder>& ladder = std::nullopt,
    std::uint64_t guard = kDefaultPricingGuard);
PricingSolution BruteForcePricing(
    const UdpRankInstance& instance,
    const std::optional<PriceLadder>& ladder = std::nullopt,
    std::uint64_t guard = kDefaultPricingGuard);

// An assortment product of a reduction: an item paired with a price level.
struct PricedItem {
  int item = 0;
  double price = 0.0;
};

struct UdpReduction {
  AssortmentInstance instance;
  std::vector<PricedItem> products;  // products[y-1] labels product y
  std::vector<double> price_levels;  // the distinct valuations, increasing

  // Product id of (item, price_levels[level]), level 0-based.
  int ProductId(int item, int level) const {
    return (item - 1) * static_cast<int>(price_levels.size()) + level + 1;
  }

  // p_S(x) = min {v : (x, v) in S}, kUnpriced when x has no pair in S.
  PriceAssignment PricesOf(Subset s) const;
  // S_p = {(x, v) : v >= p(x)}.
  Subset AssortmentOf(const PriceAssignment& prices) const;
};

// Products (item, v) for every item and distinct valuation v, revenue m v.
// Choice probabilities are evaluated on demand. Throws kGroundSetTooLarge
// when n times the number of valuations exceeds `guard`.
UdpReduction ReduceToAssortment(const UdpMinInstance& instance,
                                int guard = kDefaultEnumerationGuard);
UdpReduction ReduceToAssortment(const UdpRankInstance& instance,
                                int guard = kDefaultEnumerationGuard);

// max valuation / min valuation.
double ValuationRatio(const UdpMinInstance& instance);
double ValuationRatio(const UdpRankInstance& instance);

}  // namespace assort

#endif  // ASSORT_UDP_H_
