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

#include "assort/models.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace assort {
namespace {

constexpr double kWeightSumTolerance = 1e-9;

void CheckWeights(std::span<const double> weights, std::string_view what) {
  double total = 0.0;
  for (const double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kInvalidInstance,
                  std::string(what) + " weights must be nonnegative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw Error(ErrorCode::kInvalidInstance,
                std::string(what) + " weights sum to " + std::to_string(total) +
                    ", expected 1");
  }
}

// True iff `order` is a permutation of {0, ..., n}.
bool IsPermutationWithZero(std::span<const int> order, int n) {
  if (static_cast<int>(order.size()) != n + 1) return false;
  std::vector<bool> seen(n + 1, false);
  for (const int e : order) {
    if (e < 0 || e > n || seen[e]) return false;
    seen[e] = true;
  }
  return true;
}

int RankingProducts(std::span<const WeightedMallows> mixture) {
  if (mixture.empty()) {
    throw Error(ErrorCode::kInvalidInstance, "empty Mallows mixture");
  }
  return static_cast<int>(mixture.front().central.size()) - 1;
}

}  // namespace

// ---------------------------------------------------------------- MnlModel

MnlModel::MnlModel(std::vector<double> utilities)
    : ChoiceModel(static_cast<int>(utilities.size())),
      utilities_(std::move(utilities)) {
  weights_.reserve(utilities_.size());
  for (const double v : utilities_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidInstance, "MNL utility is not finite");
    }
    weights_.push_back(std::exp(v));
  }
}

double MnlModel::Denominator(Subset s) const {
  double denominator = 1.0;
  for (Subset rest = s; rest != 0; rest &= rest - 1) {
    denominator += weights_[std::countr_zero(rest)];
  }
  return denominator;
}

double MnlModel::Probability(int x, Subset s) const {
  return weights_[x - 1] / Denominator(s);
}

std::vector<double> MnlModel::ChoiceVector(Subset s) const {
  const double denominator = Denominator(s);
  std::vector<double> out;
  out.reserve(Cardinality(s));
  for (Subset rest = s; rest != 0; rest &= rest - 1) {
    out.push_back(weights_[std::countr_zero(rest)] / denominator);
  }
  return out;
}

// ----------------------------------------------------------- MixedMnlModel

MixedMnlModel::MixedMnlModel(std::vector<Component> components)
    : ChoiceModel(components.empty()
                      ? 0
                      : static_cast<int>(components.front().utilities.size())),
      components_(std::move(components)) {
  std::vector<double> weights;
  for (const Component& c : components_) {
    if (static_cast<int>(c.utilities.size()) != num_products()) {
      throw Error(ErrorCode::kInvalidInstance,
                  "mixed MNL components disagree on the number of products");
    }
    weights.push_back(c.weight);
    mnl_.emplace_back(c.utilities);
  }
  CheckWeights(weights, "mixed MNL");
}

double MixedMnlModel::Probability(int x, Subset s) const {
  double total = 0.0;
  for (std::size_t c = 0; c < mnl_.size(); ++c) {
    total += components_[c].weight * mnl_[c].Evaluate(x, s);
  }
  return total;
}

std::vector<double> MixedMnlModel::ChoiceVector(Subset s) const {
  std::vector<double> out(Cardinality(s), 0.0);
  for (std::size_t c = 0; c < mnl_.size(); ++c) {
    const std::vector<double> part = mnl_[c].ChoiceVector(s);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += components_[c].weight * part[i];
    }
  }
  return out;
}

// ----------------------------------------------- StochasticPreferenceModel

StochasticPreferenceModel::StochasticPreferenceModel(
    int num_products, std::vector<WeightedRanking> rankings)
    : ChoiceModel(num_products), rankings_(std::move(rankings)) {
  std::vector<double> weights;
  weights.reserve(rankings_.size());
  flat_.reserve(rankings_.size() * (num_products + 1));
  for (const WeightedRanking& r : rankings_) {
    if (!IsPermutationWithZero(r.order, num_products)) {
      throw Error(ErrorCode::kInvalidInstance,
                  "ranking is not a permutation of {0,...,n}");
    }
    weights.push_back(r.weight);
    for (const int e : r.order) flat_.push_back(static_cast<std::uint8_t>(e));
  }
  CheckWeights(weights, "stochastic preference");
}

int StochasticPreferenceModel::FirstChoice(std::size_t r, Subset s) const {
  const std::size_t width = num_products() + 1;
  const std::uint8_t* row = flat_.data() + r * width;
  for (std::size_t i = 0; i < width; ++i) {
    const int e = row[i];
    if (e == 0 || Contains(s, e)) return e;
  }
  return 0;
}

double StochasticPreferenceModel::Probability(int x, Subset s) const {
  double total = 0.0;
  for (std::size_t r = 0; r < rankings_.size(); ++r) {
    if (FirstChoice(r, s) == x) total += rankings_[r].weight;
  }
  return total;
}

std::vector<double> StochasticPreferenceModel::ChoiceVector(Subset s) const {
  std::vector<double> out(Cardinality(s), 0.0);
  for (std::size_t r = 0; r < rankings_.size(); ++r) {
    const int first = FirstChoice(r, s);
    if (first != 0) out[RankInSubset(s, first)] += rankings_[r].weight;
  }
  return out;
}

// ------------------------------------------------------------------ Mallows

int KendallDistance(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidInstance,
                "Kendall distance of rankings of different length");
  }
  const int size = static_cast<int>(a.size());
  std::vector<int> position(size);
  for (int i = 0; i < size; ++i) position[b[i]] = i;
  int discordant = 0;
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (position[a[i]] > position[a[j]]) ++discordant;
    }
  }
  return discordant;
}

StochasticPreferenceModel ExpandRankingModel(
    std::span<const WeightedMallows> mixture) {
  const int n = RankingProducts(mixture);
  CheckEnumerationGuard(n, MallowsModel::kMaxRankedProducts,
                        "Mallows expansion");
  std::vector<double> mixture_weights;
  for (const WeightedMallows& m : mixture) {
    if (!IsPermutationWithZero(m.central, n)) {
      throw Error(ErrorCode::kInvalidInstance,
                  "Mallows central ranking is not a permutation of {0,...,n}");
    }
    if (!(m.theta >= 0.0) || !std::isfinite(m.theta)) {
      throw Error(ErrorCode::kInvalidInstance,
                  "Mallows theta must be finite and nonnegative");
    }
    mixture_weights.push_back(m.weight);
  }
  CheckWeights(mixture_weights, "Mallows mixture");

  std::vector<Ranking> all;
  Ranking r(n + 1);
  std::iota(r.begin(), r.end(), 0);
  do {
    all.push_back(r);
  } while (std::next_permutation(r.begin(), r.end()));

  std::vector<double> weights(all.size(), 0.0);
  for (const WeightedMallows& m : mixture) {
    std::vector<double> kernel(all.size());
    double total = 0.0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      kernel[i] = std::exp(-m.theta * KendallDistance(all[i], m.central));
      total += kernel[i];
    }
    const double normalization = 1.0 / total;
    for (std::size_t i = 0; i < all.size(); ++i) {
      weights[i] += m.weight * normalization * kernel[i];
    }
  }

  std::vector<WeightedRanking> rankings;
  rankings.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    rankings.push_back({weights[i], std::move(all[i])});
  }
  return StochasticPreferenceModel(n, std::move(rankings));
}

StochasticPreferenceModel ExpandRankingModel(const MallowsModel& model) {
  const WeightedMallows single{1.0, model.central(), model.theta()};
  return ExpandRankingModel(std::span<const WeightedMallows>(&single, 1));
}

MallowsModel::MallowsModel(Ranking central, double theta)
    : ChoiceModel(static_cast<int>(central.size()) - 1),
      central_(std::move(central)),
      theta_(theta) {
  const WeightedMallows single{1.0, central_, theta_};
  expanded_ = std::make_shared<const StochasticPreferenceModel>(
      ExpandRankingModel(std::span<const WeightedMallows>(&single, 1)));
  double total = 0.0;
  for (const WeightedRanking& r : expanded_->rankings()) {
    total += std::exp(-theta_ * KendallDistance(r.order, central_));
  }
  normalization_ = 1.0 / total;
}

double MallowsModel::Probability(int x, Subset s) const {
  return expanded_->Evaluate(x, s);
}

std::vector<double> MallowsModel::ChoiceVector(Subset s) const {
  return expanded_->ChoiceVector(s);
}

MallowsMixtureModel::MallowsMixtureModel(
    std::vector<WeightedMallows> components)
    : ChoiceModel(RankingProducts(components)),
      components_(std::move(components)),
      expanded_(std::make_shared<const StochasticPreferenceModel>(
          ExpandRankingModel(components_))) {}

double MallowsMixtureModel::Probability(int x, Subset s) const {
  return expanded_->Evaluate(x, s);
}

std::vector<double> MallowsMixtureModel::ChoiceVector(Subset s) const {
  return expanded_->ChoiceVector(s);
}

// ------------------------------------------------------------ Set functions

TableSetFunction::TableSetFunction(int num_products, std::vector<double> values)
    : num_products_(num_products), values_(std::move(values)) {
  if (num_products < 1 || num_products > kDefaultEnumerationGuard) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "explicit capacity table needs 1 <= n <= 20");
  }
  if (values_.size() != (std::size_t{1} << num_products)) {
    throw Error(ErrorCode::kInvalidInstance,
                "capacity table must have 2^n entries");
  }
}

CoverageSetFunction::CoverageSetFunction(std::vector<double> atom_weights,
                                         std::vector<std::vector<int>> covers)
    : atom_weights_(std::move(atom_weights)), covers_(std::move(covers)) {
  if (atom_weights_.size() > 64) {
    throw Error(ErrorCode::kInvalidInstance, "at most 64 coverage atoms");
  }
  for (const double w : atom_weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kInvalidInstance,
                  "coverage atom weights must be nonnegative");
    }
  }
  for (const std::vector<int>& cover : covers_) {
    Subset mask = 0;
    for (const int atom : cover) {
      if (atom < 0 || atom >= static_cast<int>(atom_weights_.size())) {
        throw Error(ErrorCode::kInvalidInstance, "coverage atom out of range");
      }
      mask |= Subset{1} << atom;
    }
    cover_masks_.push_back(mask);
  }
}

double CoverageSetFunction::Value(Subset s) const {
  Subset covered = 0;
  for (Subset rest = s; rest != 0; rest &= rest - 1) {
    covered |= cover_masks_[std::countr_zero(rest)];
  }
  double total = 0.0;
  for (Subset rest = covered; rest != 0; rest &= rest - 1) {
    total += atom_weights_[std::countr_zero(rest)];
  }
  return total;
}

CapacityReport CheckCapacity(const SetFunction& capacity, int guard) {
  const int n = capacity.num_products();
  CheckEnumerationGuard(n, guard, "capacity check");
  CapacityReport report;
  const auto record = [&report](bool& flag, Subset a, int x) {
    if (report.passed()) {
      report.witness_set = a;
      report.witness_product = x;
    }
    flag = false;
  };
  for (const Subset a : SubsetsInCanonicalOrder(n)) {
    const double base = capacity.Value(a);
    if (base < -kProbabilityTolerance || base > 1.0 + kProbabilityTolerance) {
      if (report.in_unit_interval) record(report.in_unit_interval, a, 0);
    }
    for (int x = 1; x <= n; ++x) {
      if (Contains(a, x)) continue;
      const double with_x = capacity.Value(a | Singleton(x));
      if (with_x < base - kProbabilityTolerance && report.monotone) {
        record(report.monotone, a, x);
      }
      const double gain = with_x - base;
      for (int y = 1; y <= n; ++y) {
        if (y == x || Contains(a, y)) continue;
        const Subset ay = a | Singleton(y);
        const double later_gain =
            capacity.Value(ay | Singleton(x)) - capacity.Value(ay);
        if (later_gain > gain + kProbabilityTolerance && report.submodular) {
          record(report.submodular, a, x);
        }
      }
    }
  }
  return report;
}

// -------------------------------------------------------------- HfamModel

HfamModel::HfamModel(std::vector<int> preference,
                     std::shared_ptr<const SetFunction> capacity)
    : ChoiceModel(static_cast<int>(preference.size())),
      preference_(std::move(preference)),
      capacity_(std::move(capacity)) {
  if (capacity_ == nullptr || capacity_->num_products() != num_products()) {
    throw Error(ErrorCode::kInvalidInstance,
                "H-FAM capacity must be defined on the same products");
  }
  const int n = num_products();
  preferred_over_.assign(n + 1, 0);
  Subset seen = 0;
  for (const int x : preference_) {
    if (x < 1 || x > n || Contains(seen, x)) {
      throw Error(ErrorCode::kInvalidInstance,
                  "H-FAM preference must be a permutation of 1..n");
    }
    preferred_over_[x] = seen;
    seen |= Singleton(x);
  }
}

double HfamModel::Probability(int x, Subset s) const {
  const Subset before = s & preferred_over_[x];
  return capacity_->Value(before | Singleton(x)) - capacity_->Value(before);
}

std::vector<double> HfamModel::ChoiceVector(Subset s) const {
  std::vector<double> out;
  out.reserve(Cardinality(s));
  for (Subset rest = s; rest != 0; rest &= rest - 1) {
    out.push_back(Probability(std::countr_zero(rest) + 1, s));
  }
  return out;
}

// ------------------------------------------------------ TightExampleModel

namespace {

int TightExampleSize(int k, double epsilon) {
  if (k < 1 || k > TightExampleModel::kMaxK) {
    throw Error(ErrorCode::kInvalidParams,
                "tight example needs 1 <= k <= 10, got " + std::to_string(k));
  }
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw Error(ErrorCode::kInvalidEpsilon,
                "epsilon must lie in (0, 1/2], got " + std::to_string(epsilon));
  }
  return k * (k + 1) / 2;
}

}  // namespace

TightExampleModel::TightExampleModel(int k, double epsilon)
    : ChoiceModel(TightExampleSize(k, epsilon)), k_(k), epsilon_(epsilon) {
  pairs_.reserve(num_products() + 1);
  pairs_.emplace_back(0, 0);
  for (int i = 1; i <= k_; ++i) {
    for (int j = 1; j <= i; ++j) pairs_.emplace_back(i, j);
  }
}

std::pair<int, int> TightExampleModel::Pair(int product) const {
  return pairs_.at(product);
}

double TightExampleModel::Probability(int x, Subset s) const {
  const auto [i, j] = pairs_[x];
  for (int earlier = 1; earlier < j; ++earlier) {
    if (Contains(s, ProductId(i, earlier))) return 0.0;
  }
  return std::pow(epsilon_, i);
}

}  // namespace assort
