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

// Seeded random instance generators. The output is a pure function of the
// arguments and the seed.

#ifndef ASSORT_GENERATE_H_
#define ASSORT_GENERATE_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "assort/assortment.h"
#include "assort/io.h"
#include "assort/stackelberg.h"
#include "assort/udp.h"

namespace assort {

// Model families: "mnl", "mixed_mnl", "stochastic_preference", "mallows",
// "hfam". Family-specific knobs are read from `params` (see the README).
ChoiceModelPtr RandomModel(std::string_view family, int num_products,
                           std::mt19937_64& rng,
                           const Json& params = Json::object());

// Revenues uniform on [1, max_revenue], rounded to cents.
std::vector<double> RandomRevenue(int num_products, double max_revenue,
                                  std::mt19937_64& rng);

AssortmentInstance RandomAssortment(std::string_view family, int num_products,
                                    std::mt19937_64& rng,
                                    const Json& params = Json::object());

// Integer valuations in [1, max_valuation]; nonempty random bundles.
UdpMinInstance RandomUdpMin(int num_items, int num_consumers, int max_valuation,
                            std::mt19937_64& rng);
UdpRankInstance RandomUdpRank(int num_items, int num_consumers,
                              int max_valuation, std::mt19937_64& rng);

// Random multigraph on `vertices` vertices; each edge is red with a cost
// drawn from `red_costs` or blue. Redrawn until the red edges span.
StackelbergInstance RandomStackelbergGraph(int vertices,
                                           const std::vector<double>& red_costs,
                                           std::mt19937_64& rng,
                                           int num_edges = -1,
                                           double blue_probability = 0.4);

// Kinds and families:
//   assortment:  mnl | mixed_mnl | stochastic_preference | mallows | hfam
//                {n, max_revenue, ...}; tight {k, eps}
//   udp_min, udp_rank: random {n, m, max_valuation}
//   stackelberg: random_graph {v, redCosts, edges, blue_probability}
//   multiperiod: any assortment family plus {T, Q}
// Missing params take defaults; the returned file records the effective
// params. Throws kInvalidParams for unknown families or bad params.
InstanceFile Generate(InstanceKind kind, std::string_view family,
                      const Json& params, std::uint64_t seed);

}  // namespace assort

#endif  // ASSORT_GENERATE_H_
