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

#include "assort/generate.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "assort/models.h"

namespace assort {
namespace {

constexpr int kMaxStackelbergAttempts = 10000;

// Reads params[key], falling back to `fallback`, and records the effective
// value in `effective`.
template <typename T>
T Param(const Json& params, Json& effective, const char* key, T fallback) {
  T value = fallback;
  if (params.is_object() && params.contains(key)) {
    try {
      value = params.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kInvalidParams,
                  std::string("param \"") + key + "\": " + e.what());
    }
  }
  effective[key] = value;
  return value;
}

void Require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::kInvalidParams, message);
}

std::vector<double> RandomSimplex(int size, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::vector<double> w(size);
  for (double& x : w) x = unit(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return w;
}

std::vector<int> RandomPermutation(int first, int last, std::mt19937_64& rng) {
  std::vector<int> p(last - first + 1);
  std::iota(p.begin(), p.end(), first);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<double> RandomUtilities(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> utility(-2.0, 2.0);
  std::vector<double> v(n);
  for (double& x : v) x = utility(rng);
  return v;
}

ChoiceModelPtr RandomModelImpl(std::string_view family, int n,
                               std::mt19937_64& rng, const Json& params,
                               Json& effective) {
  Require(n >= 1 && n <= kMaxProducts, "n must be in [1, 64]");
  if (family == "mnl") {
    return std::make_shared<const MnlModel>(RandomUtilities(n, rng));
  }
  if (family == "mixed_mnl") {
    const int c = Param(params, effective, "components", 2);
    Require(c >= 1, "components must be positive");
    const std::vector<double> w = RandomSimplex(c, rng);
    std::vector<MixedMnlModel::Component> components;
    for (int i = 0; i < c; ++i) {
      components.push_back({w[i], RandomUtilities(n, rng)});
    }
    return std::make_shared<const MixedMnlModel>(std::move(components));
  }
  if (family == "stochastic_preference") {
    const int r = Param(params, effective, "rankings", 4);
    Require(r >= 1, "rankings must be positive");
    const std::vector<double> w = RandomSimplex(r, rng);
    std::vector<WeightedRanking> rankings;
    for (int i = 0; i < r; ++i) {
      rankings.push_back({w[i], RandomPermutation(0, n, rng)});
    }
    return std::make_shared<const StochasticPreferenceModel>(
        n, std::move(rankings));
  }
  if (family == "mallows") {
    Require(n <= MallowsModel::kMaxRankedProducts, "mallows needs n <= 7");
    const int c = Param(params, effective, "components", 1);
    const double max_theta = Param(params, effective, "max_theta", 2.0);
    Require(c >= 1 && max_theta >= 0.0, "bad mallows params");
    std::uniform_real_distribution<double> theta(0.0, max_theta);
    if (c == 1) {
      return std::make_shared<const MallowsModel>(RandomPermutation(0, n, rng),
                                                  theta(rng));
    }
    const std::vector<double> w = RandomSimplex(c, rng);
    std::vector<WeightedMallows> components;
    for (int i = 0; i < c; ++i) {
      Ranking central = RandomPermutation(0, n, rng);
      components.push_back({w[i], std::move(central), theta(rng)});
    }
    return std::make_shared<const MallowsMixtureModel>(std::move(components));
  }
  if (family == "hfam") {
    const int atoms = Param(params, effective, "atoms", n + 2);
    Require(atoms >= 1 && atoms <= 64, "atoms must be in [1, 64]");
    std::uniform_real_distribution<double> mass(0.5, 1.0);
    std::vector<double> weights = RandomSimplex(atoms, rng);
    const double total = mass(rng);
    for (double& w : weights) w *= total;
    std::bernoulli_distribution coin(0.4);
    std::uniform_int_distribution<int> pick(0, atoms - 1);
    std::vector<std::vector<int>> covers(n);
    for (auto& cover : covers) {
      for (int a = 0; a < atoms; ++a) {
        if (coin(rng)) cover.push_back(a);
      }
      if (cover.empty()) cover.push_back(pick(rng));
    }
    return std::make_shared<const HfamModel>(
        RandomPermutation(1, n, rng),
        std::make_shared<const CoverageSetFunction>(std::move(weights),
                                                    std::move(covers)));
  }
  throw Error(ErrorCode::kInvalidParams,
              "unknown model family \"" + std::string(family) + "\"");
}

AssortmentInstance AssortmentFromParams(std::string_view family,
                                        const Json& params, Json& effective,
                                        std::mt19937_64& rng) {
  if (family == "tight") {
    const int k = Param(params, effective, "k", 3);
    const double eps = Param(params, effective, "eps", 0.1);
    return GenerateTightInstance(k, eps);
  }
  const int n = Param(params, effective, "n", 5);
  const double max_revenue = Param(params, effective, "max_revenue", 10.0);
  Require(max_revenue >= 1.0, "max_revenue must be at least 1");
  ChoiceModelPtr model = RandomModelImpl(family, n, rng, params, effective);
  return AssortmentInstance(std::move(model),
                            RandomRevenue(n, max_revenue, rng));
}

}  // namespace

ChoiceModelPtr RandomModel(std::string_view family, int num_products,
                           std::mt19937_64& rng, const Json& params) {
  Json effective = Json::object();
  return RandomModelImpl(family, num_products, rng, params, effective);
}

std::vector<double> RandomRevenue(int num_products, double max_revenue,
                                  std::mt19937_64& rng) {
  std::uniform_real_distribution<double> revenue(1.0, max_revenue);
  std::vector<double> r(num_products);
  for (double& x : r)
    x = std::max(1.0, std::round(revenue(rng) * 100.0) / 100.0);
  return r;
}

AssortmentInstance RandomAssortment(std::string_view family, int num_products,
                                    std::mt19937_64& rng, const Json& params) {
  ChoiceModelPtr model = RandomModel(family, num_products, rng, params);
  return AssortmentInstance(std::move(model),
                            RandomRevenue(num_products, 10.0, rng));
}

UdpMinInstance RandomUdpMin(int num_items, int num_consumers, int max_valuation,
                            std::mt19937_64& rng) {
  Require(num_items >= 1 && num_consumers >= 1 && max_valuation >= 1,
          "udp sizes must be positive");
  std::uniform_int_distribution<int> valuation(1, max_valuation);
  std::uniform_int_distribution<Subset> mask(1, FullSet(num_items));
  std::vector<UdpMinConsumer> consumers;
  for (int i = 0; i < num_consumers; ++i) {
    UdpMinConsumer c;
    c.bundle = Elements(mask(rng));
    c.valuation = valuation(rng);
    consumers.push_back(std::move(c));
  }
  return UdpMinInstance(num_items, std::move(consumers));
}

UdpRankInstance RandomUdpRank(int num_items, int num_consumers,
                              int max_valuation, std::mt19937_64& rng) {
  Require(num_items >= 1 && num_consumers >= 1 && max_valuation >= 1,
          "udp sizes must be positive");
  std::uniform_int_distribution<int> valuation(1, max_valuation);
  std::vector<UdpRankConsumer> consumers;
  for (int i = 0; i < num_consumers; ++i) {
    UdpRankConsumer c;
    c.ranking = RandomPermutation(1, num_items, rng);
    for (int x = 0; x < num_items; ++x) c.valuations.push_back(valuation(rng));
    consumers.push_back(std::move(c));
  }
  return UdpRankInstance(num_items, std::move(consumers));
}

StackelbergInstance RandomStackelbergGraph(int vertices,
                                           const std::vector<double>& red_costs,
                                           std::mt19937_64& rng, int num_edges,
                                           double blue_probability) {
  Require(vertices >= 1, "v must be positive");
  Require(!red_costs.empty(), "redCosts must be nonempty");
  for (const double c : red_costs)
    Require(c > 0.0, "red costs must be positive");
  Require(blue_probability >= 0.0 && blue_probability <= 1.0,
          "blue_probability must be in [0, 1]");
  const int pairs = vertices * (vertices - 1) / 2;
  if (num_edges < 0)
    num_edges = std::max(vertices - 1, std::min(pairs, 2 * vertices));
  Require(num_edges >= 0 && num_edges <= 64, "edges must be in [0, 64]");
  std::uniform_int_distribution<int> vertex(0, vertices - 1);
  std::uniform_int_distribution<std::size_t> cost(0, red_costs.size() - 1);
  std::bernoulli_distribution blue(blue_probability);
  for (int attempt = 0; attempt < kMaxStackelbergAttempts; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    std::vector<Color> colors;
    std::vector<double> costs;
    for (int e = 0; e < num_edges; ++e) {
      int u = vertex(rng);
      int v = vertex(rng);
      while (vertices > 1 && v == u) v = vertex(rng);
      edges.emplace_back(u, v);
      if (blue(rng)) {
        colors.push_back(Color::kBlue);
        costs.push_back(0.0);
      } else {
        colors.push_back(Color::kRed);
        costs.push_back(red_costs[cost(rng)]);
      }
    }
    try {
      return StackelbergInstance(
          std::make_shared<const GraphicMatroid>(vertices, std::move(edges)),
          std::move(colors), std::move(costs));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvalidInstance) throw;
    }
  }
  throw Error(ErrorCode::kInvalidParams,
              "could not draw a graph whose red edges span");
}

InstanceFile Generate(InstanceKind kind, std::string_view family,
                      const Json& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  InstanceFile file;
  file.kind = kind;
  file.family = std::string(family);
  file.seed = seed;
  Json effective = Json::object();
  switch (kind) {
    case InstanceKind::kAssortment:
      file.payload =
          ToJson(AssortmentFromParams(family, params, effective, rng));
      break;
    case InstanceKind::kMultiPeriod: {
      const int T = Param(params, effective, "T", 3);
      const int Q = Param(params, effective, "Q", 2);
      file.payload = ToJson(MultiPeriodInstance(
          AssortmentFromParams(family, params, effective, rng), T, Q));
      break;
    }
    case InstanceKind::kUdpMin:
    case InstanceKind::kUdpRank: {
      Require(family == "random", "udp family must be \"random\"");
      const int n = Param(params, effective, "n", 3);
      const int m = Param(params, effective, "m", 3);
      const int vmax = Param(params, effective, "max_valuation", 3);
      file.payload = kind == InstanceKind::kUdpMin
                         ? ToJson(RandomUdpMin(n, m, vmax, rng))
                         : ToJson(RandomUdpRank(n, m, vmax, rng));
      break;
    }
    case InstanceKind::kStackelberg: {
      Require(family == "random_graph",
              "stackelberg family must be \"random_graph\"");
      const int v = Param(params, effective, "v", 4);
      const auto costs =
          Param(params, effective, "redCosts", std::vector<double>{1.0, 2.0});
      const int edges = Param(params, effective, "edges", -1);
      const double p_blue = Param(params, effective, "blue_probability", 0.4);
      file.payload =
          ToJson(RandomStackelbergGraph(v, costs, rng, edges, p_blue));
      break;
    }
  }
  file.params = effective;
  return file;
}

}  // namespace assort
