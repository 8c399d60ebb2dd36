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

#include "assort/stackelberg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assort/choice_model.h"

namespace assort {
namespace {

void CheckPriceCount(const StackelbergInstance& instance,
                     std::span<const double> prices) {
  if (prices.size() != instance.blue().size()) {
    throw Error(ErrorCode::kInvalidInstance,
                "expected " + std::to_string(instance.blue().size()) +
                    " blue prices, got " + std::to_string(prices.size()));
  }
}

// (weight, color) block key; blue sorts first on equal weight.
struct BlockKey {
  double weight;
  int color;  // 0 blue, 1 red

  bool operator<(const BlockKey& o) const {
    if (weight != o.weight) return weight < o.weight;
    return color < o.color;
  }
  bool operator==(const BlockKey& o) const {
    return weight == o.weight && color == o.color;
  }
};

std::vector<BlockKey> Keys(const StackelbergInstance& instance,
                           std::span<const double> prices) {
  const std::vector<double> weights = ElementWeights(instance, prices);
  std::vector<BlockKey> keys(weights.size());
  for (std::size_t e = 0; e < weights.size(); ++e) {
    keys[e] = {weights[e], instance.colors()[e] == Color::kBlue ? 0 : 1};
  }
  return keys;
}

class ReducedStackelbergModel final : public ChoiceModel {
 public:
  ReducedStackelbergModel(std::shared_ptr<const AuxiliaryMatroid> auxiliary,
                          std::vector<int> ordering, int num_blue)
      : ChoiceModel(auxiliary->ground_set_size() - auxiliary->num_red()),
        auxiliary_(std::move(auxiliary)),
        ordering_(std::move(ordering)),
        share_(1.0 / num_blue) {}

  std::vector<double> ChoiceVector(Subset s) const override {
    const int num_red = auxiliary_->num_red();
    std::vector<int> ground(num_red);
    std::iota(ground.begin(), ground.end(), 0);
    for (Subset rest = s; rest != 0; rest &= rest - 1) {
      ground.push_back(num_red + std::countr_zero(rest));
    }
    std::vector<double> out(Cardinality(s), 0.0);
    for (const int e : Greedy(*auxiliary_, ground, ordering_)) {
      if (e < num_red) continue;
      out[RankInSubset(s, e - num_red + 1)] = share_;
    }
    return out;
  }

  std::string_view family() const override { return "stackelberg_reduction"; }

 protected:
  double Probability(int x, Subset s) const override {
    return ChoiceVector(s)[RankInSubset(s, x)];
  }

 private:
  std::shared_ptr<const AuxiliaryMatroid> auxiliary_;
  std::vector<int> ordering_;
  double share_;
};

}  // namespace

StackelbergInstance::StackelbergInstance(std::shared_ptr<const Matroid> matroid,
                                         std::vector<Color> colors,
                                         std::vector<double> costs)
    : matroid_(std::move(matroid)),
      colors_(std::move(colors)),
      costs_(std::move(costs)) {
  if (!matroid_) throw Error(ErrorCode::kInvalidInstance, "null matroid");
  const int n = matroid_->ground_set_size();
  if (static_cast<int>(colors_.size()) != n) {
    throw Error(ErrorCode::kInvalidInstance, "one color per element needed");
  }
  costs_.resize(n, 0.0);
  for (int e = 0; e < n; ++e) {
    if (colors_[e] == Color::kRed) {
      if (!(costs_[e] > 0.0) || !std::isfinite(costs_[e])) {
        throw Error(
            ErrorCode::kInvalidInstance,
            "red element " + std::to_string(e) + " needs a positive cost");
      }
      red_.push_back(e);
      levels_.push_back(costs_[e]);
    } else {
      blue_.push_back(e);
    }
  }
  std::sort(levels_.begin(), levels_.end());
  levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (Rank(*matroid_, red_) != Rank(*matroid_, all)) {
    throw Error(ErrorCode::kInvalidInstance,
                "red elements do not contain a base");
  }
}

std::vector<double> ElementWeights(const StackelbergInstance& instance,
                                   std::span<const double> prices) {
  CheckPriceCount(instance, prices);
  std::vector<double> weights = instance.costs();
  for (std::size_t b = 0; b < instance.blue().size(); ++b) {
    weights[instance.blue()[b]] = prices[b];
  }
  return weights;
}

std::vector<int> CompatibleOrdering(const StackelbergInstance& instance,
                                    std::span<const double> prices) {
  const std::vector<BlockKey> keys = Keys(instance, prices);
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return keys[a] < keys[b]; });
  return order;
}

std::vector<int> RandomCompatibleOrdering(const StackelbergInstance& instance,
                                          std::span<const double> prices,
                                          std::mt19937_64& rng) {
  const std::vector<BlockKey> keys = Keys(instance, prices);
  std::vector<int> order = CompatibleOrdering(instance, prices);
  auto begin = order.begin();
  while (begin != order.end()) {
    auto end = begin;
    while (end != order.end() && keys[*end] == keys[*begin]) ++end;
    std::shuffle(begin, end, rng);
    begin = end;
  }
  return order;
}

bool IsCompatible(const StackelbergInstance& instance,
                  std::span<const double> prices, std::span<const int> order) {
  const std::vector<BlockKey> keys = Keys(instance, prices);
  if (order.size() != keys.size()) return false;
  std::vector<char> seen(keys.size(), 0);
  for (const int e : order) {
    if (e < 0 || e >= static_cast<int>(keys.size()) || seen[e]) return false;
    seen[e] = 1;
  }
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (keys[order[i]] < keys[order[i - 1]]) return false;
  }
  return true;
}

FollowerOutcome RevenueOfPrices(const StackelbergInstance& instance,
                                std::span<const double> prices,
                                std::span<const int> order) {
  CheckPriceCount(instance, prices);
  std::vector<int> canonical;
  if (order.empty()) {
    canonical = CompatibleOrdering(instance, prices);
    order = canonical;
  }
  std::vector<int> all(instance.matroid().ground_set_size());
  std::iota(all.begin(), all.end(), 0);
  const std::vector<double> weights = ElementWeights(instance, prices);
  FollowerOutcome out;
  for (const int e : Greedy(instance.matroid(), all, order)) {
    if (instance.colors()[e] != Color::kBlue) continue;
    out.bought_blue.push_back(e);
    out.bought_prices.push_back(weights[e]);
  }
  std::sort(out.bought_blue.begin(), out.bought_blue.end());
  std::sort(out.bought_prices.begin(), out.bought_prices.end());
  for (const double p : out.bought_prices) out.revenue += p;
  return out;
}

TieBreakReport CheckTieBreakIndependence(const StackelbergInstance& instance,
                                         std::span<const double> prices,
                                         int trials, std::mt19937_64& rng) {
  const FollowerOutcome reference = RevenueOfPrices(instance, prices);
  TieBreakReport report;
  for (int t = 0; t < trials; ++t) {
    const std::vector<int> order =
        RandomCompatibleOrdering(instance, prices, rng);
    const FollowerOutcome outcome = RevenueOfPrices(instance, prices, order);
    ++report.trials;
    if (outcome.bought_prices != reference.bought_prices ||
        outcome.revenue != reference.revenue) {
      report.passed = false;
      report.failing_order = order;
      return report;
    }
  }
  return report;
}

StackelbergUniformResult UniformPricing(const StackelbergInstance& instance) {
  StackelbergUniformResult result;
  result.candidates = instance.cost_levels();
  for (const double c : result.candidates) {
    const std::vector<double> prices(instance.blue().size(), c);
    const double revenue = RevenueOfPrices(instance, prices).revenue;
    result.revenues.push_back(revenue);
    if (result.revenues.size() == 1 || revenue >= result.revenue) {
      result.price = c;
      result.revenue = revenue;
    }
  }
  return result;
}

StackelbergSolution BruteForceStackelberg(const StackelbergInstance& instance,
                                          std::uint64_t guard) {
  std::vector<double> grid = instance.cost_levels();
  grid.push_back(kUnpriced);
  const std::size_t num_blue = instance.blue().size();
  const std::uint64_t base = grid.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < num_blue; ++i) {
    if (total > guard / base) {
      throw Error(ErrorCode::kSearchSpaceTooLarge,
                  std::to_string(base) + "^" + std::to_string(num_blue) +
                      " price grids exceed the guard of " +
                      std::to_string(guard));
    }
    total *= base;
  }
  std::vector<std::size_t> digits(num_blue, 0);
  std::vector<double> prices(num_blue, grid[0]);
  StackelbergSolution best;
  for (std::uint64_t step = 0; step < total; ++step) {
    const double revenue = RevenueOfPrices(instance, prices).revenue;
    if (step == 0 || revenue > best.revenue) {
      best.prices = prices;
      best.revenue = revenue;
    }
    for (int i = static_cast<int>(num_blue) - 1; i >= 0; --i) {
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

AuxiliaryMatroid::AuxiliaryMatroid(const StackelbergInstance& instance)
    : base_(instance.matroid_ptr()),
      red_(instance.red()),
      blue_(instance.blue()),
      num_levels_(static_cast<int>(instance.cost_levels().size())),
      size_(static_cast<int>(red_.size() + blue_.size() * num_levels_)) {}

int AuxiliaryMatroid::Original(int element) const {
  if (element < num_red()) return red_[element];
  return blue_[(element - num_red()) / num_levels_];
}

bool AuxiliaryMatroid::IsIndependent(std::span<const int> elements) const {
  std::vector<char> used(blue_.size(), 0);
  std::vector<int> mapped;
  mapped.reserve(elements.size());
  for (const int e : elements) {
    if (e >= num_red()) {
      const int b = (e - num_red()) / num_levels_;
      if (used[b]) return false;
      used[b] = 1;
    }
    mapped.push_back(Original(e));
  }
  return base_->IsIndependent(mapped);
}

std::vector<double> StackelbergReduction::PricesOf(
    const StackelbergInstance& instance, Subset s) const {
  std::vector<double> prices(instance.blue().size(), kUnpriced);
  const int k = static_cast<int>(price_levels.size());
  for (Subset rest = s; rest != 0; rest &= rest - 1) {
    const int y = std::countr_zero(rest);
    prices[y / k] = std::min(prices[y / k], price_levels[y % k]);
  }
  return prices;
}

StackelbergReduction ReduceToAssortment(const StackelbergInstance& instance,
                                        int guard) {
  const int num_blue = static_cast<int>(instance.blue().size());
  const int k = static_cast<int>(instance.cost_levels().size());
  CheckEnumerationGuard(num_blue * k, std::min(guard, kMaxProducts),
                        "stackelberg reduction");
  StackelbergReduction reduction;
  reduction.price_levels = instance.cost_levels();
  reduction.auxiliary = std::make_shared<const AuxiliaryMatroid>(instance);
  const AuxiliaryMatroid& aux = *reduction.auxiliary;

  // Costs on M', then L: cost, copies before reds, id.
  std::vector<std::pair<double, int>> keys(aux.ground_set_size());
  for (int e = 0; e < aux.num_red(); ++e) {
    keys[e] = {instance.costs()[instance.red()[e]], 1};
  }
  for (int b = 0; b < num_blue; ++b) {
    for (int l = 0; l < k; ++l) {
      keys[aux.CopyId(b, l)] = {reduction.price_levels[l], 0};
      reduction.products.push_back(
          {instance.blue()[b], reduction.price_levels[l]});
    }
  }
  reduction.ordering.resize(aux.ground_set_size());
  std::iota(reduction.ordering.begin(), reduction.ordering.end(), 0);
  std::stable_sort(reduction.ordering.begin(), reduction.ordering.end(),
                   [&](int a, int b) { return keys[a] < keys[b]; });

  if (num_blue == 0 || k == 0) return reduction;
  std::vector<double> revenue;
  for (const PricedItem& y : reduction.products) {
    revenue.push_back(num_blue * y.price);
  }
  auto model = std::make_shared<const ReducedStackelbergModel>(
      reduction.auxiliary, reduction.ordering, num_blue);
  reduction.instance.emplace(std::move(model), std::move(revenue));
  return reduction;
}

GraphicMatroid ParallelCopiesGraph(const GraphicMatroid& graph,
                                   const StackelbergInstance& instance) {
  std::vector<std::pair<int, int>> edges;
  for (const int e : instance.red()) edges.push_back(graph.edges()[e]);
  const std::size_t k = instance.cost_levels().size();
  for (const int e : instance.blue()) {
    for (std::size_t l = 0; l < k; ++l) edges.push_back(graph.edges()[e]);
  }
  return GraphicMatroid(graph.num_vertices(), std::move(edges));
}

}  // namespace assort
