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

// Stackelberg matroid pricing. The leader prices the blue elements, the
// follower buys a minimum-weight base by greedy, preferring blue over red on
// ties. Blue prices are stored per blue element, in increasing element id
// order (see StackelbergInstance::blue()).

#ifndef ASSORT_STACKELBERG_H_
#define ASSORT_STACKELBERG_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "assort/assortment.h"
#include "assort/common.h"
#include "assort/matroid.h"
#include "assort/udp.h"

namespace assort {

enum class Color { kRed, kBlue };

class StackelbergInstance {
 public:
  // costs[e] is used for red elements only. Throws kInvalidInstance when a
  // red cost is not positive or when the red elements do not span M.
  StackelbergInstance(std::shared_ptr<const Matroid> matroid,
                      std::vector<Color> colors, std::vector<double> costs);

  const Matroid& matroid() const { return *matroid_; }
  const std::shared_ptr<const Matroid>& matroid_ptr() const { return matroid_; }
  const std::vector<Color>& colors() const { return colors_; }
  const std::vector<double>& costs() const { return costs_; }

  const std::vector<int>& red() const { return red_; }
  const std::vector<int>& blue() const { return blue_; }
  // Distinct red costs c_1 < ... < c_k.
  const std::vector<double>& cost_levels() const { return levels_; }

 private:
  std::shared_ptr<const Matroid> matroid_;
  std::vector<Color> colors_;
  std::vector<double> costs_;
  std::vector<int> red_;
  std::vector<int> blue_;
  std::vector<double> levels_;
};

// Element weights under blue prices: red cost, or the price of a blue
// element (kUnpriced allowed).
std::vector<double> ElementWeights(const StackelbergInstance& instance,
                                   std::span<const double> prices);

// Nondecreasing weight, blue before red on ties, element id inside blocks.
std::vector<int> CompatibleOrdering(const StackelbergInstance& instance,
                                    std::span<const double> prices);

// A uniformly random ordering among those compatible with the weights.
std::vector<int> RandomCompatibleOrdering(const StackelbergInstance& instance,
                                          std::span<const double> prices,
                                          std::mt19937_64& rng);

bool IsCompatible(const StackelbergInstance& instance,
                  std::span<const double> prices, std::span<const int> order);

struct FollowerOutcome {
  double revenue = 0.0;
  std::vector<int> bought_blue;       // element ids, increasing
  std::vector<double> bought_prices;  // increasing
};

// Greedy on R and B under `order` (the canonical compatible ordering when
// empty). Revenue is summed over bought prices in increasing order, so it
// depends only on their multiset.
FollowerOutcome RevenueOfPrices(const StackelbergInstance& instance,
                                std::span<const double> prices,
                                std::span<const int> order = {});

struct TieBreakReport {
  bool passed = true;
  int trials = 0;
  std::vector<int> failing_order;
};

// Samples compatible orderings and compares the bought price multisets.
TieBreakReport CheckTieBreakIndependence(const StackelbergInstance& instance,
                                         std::span<const double> prices,
                                         int trials, std::mt19937_64& rng);

struct StackelbergUniformResult {
  std::vector<double> candidates;  // c_1..c_k
  std::vector<double> revenues;
  double price = 0.0;
  double revenue = 0.0;
};

// Every blue element priced c_i, for each i; ties go to the largest c_i.
StackelbergUniformResult UniformPricing(const StackelbergInstance& instance);

struct StackelbergSolution {
  std::vector<double> prices;
  double revenue = 0.0;
};

// Exhaustive over {c_1..c_k, kUnpriced}^|B|; the first assignment in
// lexicographic order wins exact ties. Throws kSearchSpaceTooLarge.
StackelbergSolution BruteForceStackelberg(
    const StackelbergInstance& instance,
    std::uint64_t guard = kDefaultPricingGuard);

// M' on R + (B x levels): at most one copy per blue element, and the
// underlying elements independent in M. Element ids: reds first (in the
// order of instance.red()), then copy (b, l) at |R| + b * k + l.
class AuxiliaryMatroid final : public Matroid {
 public:
  explicit AuxiliaryMatroid(const StackelbergInstance& instance);

  int ground_set_size() const override { return size_; }
  bool IsIndependent(std::span<const int> elements) const override;

  int num_red() const { return static_cast<int>(red_.size()); }
  int num_levels() const { return num_levels_; }
  int CopyId(int blue_index, int level) const {
    return num_red() + blue_index * num_levels_ + level;
  }
  // Underlying element of M.
  int Original(int element) const;

 private:
  std::shared_ptr<const Matroid> base_;
  std::vector<int> red_;
  std::vector<int> blue_;
  int num_levels_;
  int size_;
};

struct StackelbergReduction {
  // Absent when B is empty (no products; OPT is 0 on both sides).
  std::optional<AssortmentInstance> instance;
  // products[y-1] = (blue element id, price level) of product y, with
  // product id b * k + l + 1.
  std::vector<PricedItem> products;
  std::vector<double> price_levels;
  std::shared_ptr<const AuxiliaryMatroid> auxiliary;
  // L on M': nondecreasing cost, copies before reds on ties, then id.
  std::vector<int> ordering;

  // Blue prices p_S (kUnpriced for elements without a copy in S).
  std::vector<double> PricesOf(const StackelbergInstance& instance,
                               Subset s) const;
};

// Throws kGroundSetTooLarge when |B| k exceeds `guard`.
StackelbergReduction ReduceToAssortment(const StackelbergInstance& instance,
                                        int guard = kDefaultEnumerationGuard);

// Graph with each blue edge replaced by k parallel copies, numbered like
// AuxiliaryMatroid.
GraphicMatroid ParallelCopiesGraph(const GraphicMatroid& graph,
                                   const StackelbergInstance& instance);

}  // namespace assort

#endif  // ASSORT_STACKELBERG_H_
