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

// Concrete discrete choice model families.

#ifndef ASSORT_MODELS_H_
#define ASSORT_MODELS_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "assort/choice_model.h"
#include "assort/common.h"

namespace assort {

// Multinomial logit with mean utilities v_1..v_n and v_0 = 0:
//   P(x, S) = e^{v_x} / (1 + sum_{y in S} e^{v_y}).
class MnlModel final : public ChoiceModel {
 public:
  explicit MnlModel(std::vector<double> utilities);

  const std::vector<double>& utilities() const { return utilities_; }

  std::vector<double> ChoiceVector(Subset s) const override;
  std::string_view family() const override { return "mnl"; }

 protected:
  double Probability(int x, Subset s) const override;

 private:
  double Denominator(Subset s) const;

  std::vector<double> utilities_;
  std::vector<double> weights_;  // e^{v_x}
};

// Finite mixture of MNL models; weights are nonnegative and sum to one.
class MixedMnlModel final : public ChoiceModel {
 public:
  struct Component {
    double weight;
    std::vector<double> utilities;
  };

  explicit MixedMnlModel(std::vector<Component> components);

  const std::vector<Component>& components() const { return components_; }

  std::vector<double> ChoiceVector(Subset s) const override;
  std::string_view family() const override { return "mixed_mnl"; }

 protected:
  double Probability(int x, Subset s) const override;

 private:
  std::vector<Component> components_;
  std::vector<MnlModel> mnl_;
};

// A permutation of {0, 1, ..., n}; earlier means preferred.
using Ranking = std::vector<int>;

struct WeightedRanking {
  double weight;
  Ranking order;
};

// Distribution over rankings of the products and the no-purchase option.
// P(x, S) is the total weight of the rankings in which x precedes every other
// element of S and 0.
class StochasticPreferenceModel : public ChoiceModel {
 public:
  StochasticPreferenceModel(int num_products,
                            std::vector<WeightedRanking> rankings);

  const std::vector<WeightedRanking>& rankings() const { return rankings_; }

  std::vector<double> ChoiceVector(Subset s) const override;
  std::string_view family() const override { return "stochastic_preference"; }

 protected:
  double Probability(int x, Subset s) const override;

 private:
  // First element of ranking r that is 0 or a member of s.
  int FirstChoice(std::size_t r, Subset s) const;

  std::vector<WeightedRanking> rankings_;
  std::vector<std::uint8_t> flat_;  // rankings_ packed row-major
};

// Number of discordant pairs between two rankings of the same items.
int KendallDistance(std::span<const int> a, std::span<const int> b);

// Mallows model: ranking r has weight C(theta) * exp(-theta * d_K(r, R)).
class MallowsModel final : public ChoiceModel {
 public:
  // (n+1)! rankings are enumerated, so n is capped at this value.
  static constexpr int kMaxRankedProducts = 7;

  MallowsModel(Ranking central, double theta);

  const Ranking& central() const { return central_; }
  double theta() const { return theta_; }
  // 1 / sum_r exp(-theta d(r, R)), summed explicitly.
  double normalization() const { return normalization_; }
  const StochasticPreferenceModel& expanded() const { return *expanded_; }

  std::vector<double> ChoiceVector(Subset s) const override;
  std::string_view family() const override { return "mallows"; }

 protected:
  double Probability(int x, Subset s) const override;

 private:
  Ranking central_;
  double theta_;
  double normalization_ = 0.0;
  std::shared_ptr<const StochasticPreferenceModel> expanded_;
};

struct WeightedMallows {
  double weight;
  Ranking central;
  double theta;
};

// Expands a single Mallows model or a finite mixture of them into an explicit
// stochastic preference over all (n+1)! rankings. Output weights sum to one
// within 1e-9. Throws kGroundSetTooLarge when n exceeds
// MallowsModel::kMaxRankedProducts.
StochasticPreferenceModel ExpandRankingModel(const MallowsModel& model);
StochasticPreferenceModel ExpandRankingModel(
    std::span<const WeightedMallows> mixture);

// Finite mixture of Mallows models, evaluated through its expansion.
class MallowsMixtureModel final : public ChoiceModel {
 public:
  explicit MallowsMixtureModel(std::vector<WeightedMallows> components);

  const std::vector<WeightedMallows>& components() const { return components_; }
  const StochasticPreferenceModel& expanded() const { return *expanded_; }

  std::vector<double> ChoiceVector(Subset s) const override;
  std::string_view family() const override { return "mallows"; }

 protected:
  double Probability(int x, Subset s) const override;

 private:
  std::vector<WeightedMallows> components_;
  std::shared_ptr<const StochasticPreferenceModel> expanded_;
};

// A set function phi: 2^C -> [0, 1] over the products.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual int num_products() const = 0;
  virtual double Value(Subset s) const = 0;
};

// phi given explicitly, indexed by subset bitmask.
class TableSetFunction final : public SetFunction {
 public:
  TableSetFunction(int num_products, std::vector<double> values);

  int num_products() const override { return num_products_; }
  double Value(Subset s) const override { return values_[s]; }
  const std::vector<double>& values() const { return values_; }

 private:
  int num_products_;
  std::vector<double> values_;
};

// Weighted coverage: phi(A) is the total weight of the atoms covered by some
// product in A. Monotone and submodular by construction; it maps into [0, 1]
// when the atom weights sum to at most one.
class CoverageSetFunction final : public SetFunction {
 public:
  // covers[x-1] lists the atoms (0-based) covered by product x.
  CoverageSetFunction(std::vector<double> atom_weights,
                      std::vector<std::vector<int>> covers);

  int num_products() const override { return static_cast<int>(covers_.size()); }
  double Value(Subset s) const override;

  const std::vector<double>& atom_weights() const { return atom_weights_; }
  const std::vector<std::vector<int>>& covers() const { return covers_; }

 private:
  std::vector<double> atom_weights_;
  std::vector<std::vector<int>> covers_;
  std::vector<Subset> cover_masks_;
};

struct CapacityReport {
  bool in_unit_interval = true;
  bool monotone = true;
  bool submodular = true;
  // First violating (A, x) pair in canonical order, when any.
  Subset witness_set = 0;
  int witness_product = 0;

  bool passed() const { return in_unit_interval && monotone && submodular; }
};

// Exhaustive monotonicity and submodularity check of phi, using the local
// conditions phi(A) <= phi(A + x) and
// phi(A + x) - phi(A) >= phi(A + y + x) - phi(A + y).
CapacityReport CheckCapacity(const SetFunction& capacity,
                             int guard = kDefaultEnumerationGuard);

// Hitting fuzzy attention model (preference order, attention capacity phi):
//   P(x, S) = phi({x} + {y in S : y < x}) - phi({y in S : y < x}).
class HfamModel final : public ChoiceModel {
 public:
  // `preference` lists products 1..n from most to least preferred.
  HfamModel(std::vector<int> preference,
            std::shared_ptr<const SetFunction> capacity);

  const std::vector<int>& preference() const { return preference_; }
  const SetFunction& capacity() const { return *capacity_; }
  const std::shared_ptr<const SetFunction>& capacity_ptr() const {
    return capacity_;
  }

  std::vector<double> ChoiceVector(Subset s) const override;
  std::string_view family() const override { return "hfam"; }

 protected:
  double Probability(int x, Subset s) const override;

 private:
  std::vector<int> preference_;
  std::vector<Subset> preferred_over_;  // products strictly preferred to x
  std::shared_ptr<const SetFunction> capacity_;
};

// Worst-case family for revenue-ordered assortments. Products are the pairs
// (i, j) with 1 <= j <= i <= k, numbered (1,1), (2,1), (2,2), (3,1), ...
//   P((i,j), S) = eps^i if none of (i,1), ..., (i,j-1) is in S, else 0.
class TightExampleModel final : public ChoiceModel {
 public:
  // Keeps k(k+1)/2 within the 64-product limit.
  static constexpr int kMaxK = 10;

  TightExampleModel(int k, double epsilon);

  int k() const { return k_; }
  double epsilon() const { return epsilon_; }

  static int ProductId(int i, int j) { return i * (i - 1) / 2 + j; }
  // (i, j) of a product id.
  std::pair<int, int> Pair(int product) const;

  std::string_view family() const override { return "tight_example"; }

 protected:
  double Probability(int x, Subset s) const override;

 private:
  int k_;
  double epsilon_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace assort

#endif  // ASSORT_MODELS_H_
