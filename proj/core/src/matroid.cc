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

#include "assort/matroid.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "assort/common.h"

namespace assort {
namespace {

// Per-call scratch union-find.
class DisjointSets {
 public:
  explicit DisjointSets(int size) : parent_(size), rank_(size, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when a and b were already joined.
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

std::vector<int> MaskElements(std::uint32_t mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

std::string Join(std::span<const int> xs) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out << ",";
    out << xs[i];
  }
  out << "}";
  return out.str();
}

}  // namespace

GraphicMatroid::GraphicMatroid(int num_vertices,
                               std::vector<std::pair<int, int>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices < 1) {
    throw Error(ErrorCode::kInvalidInstance, "graph needs a vertex");
  }
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices) {
      throw Error(ErrorCode::kInvalidInstance, "edge endpoint out of range");
    }
  }
}

bool GraphicMatroid::IsIndependent(std::span<const int> elements) const {
  DisjointSets sets(num_vertices_);
  for (const int e : elements) {
    if (!sets.Union(edges_[e].first, edges_[e].second)) return false;
  }
  return true;
}

PredicateIndependenceSystem NonMatroidSentinel(int ground_set_size) {
  return PredicateIndependenceSystem(
      ground_set_size, [](std::span<const int> xs) {
        if (xs.size() <= 1) return true;
        return std::all_of(xs.begin(), xs.end(),
                           [](int x) { return x == 0 || x == 1; });
      });
}

std::vector<int> Greedy(const Matroid& matroid, std::span<const int> subset,
                        std::span<const int> order) {
  std::vector<char> member(matroid.ground_set_size(), 0);
  for (const int e : subset) member[e] = 1;
  std::vector<int> chosen;
  for (const int e : order) {
    if (!member[e]) continue;
    chosen.push_back(e);
    if (!matroid.IsIndependent(chosen)) chosen.pop_back();
  }
  return chosen;
}

int Rank(const Matroid& matroid, std::span<const int> subset) {
  std::vector<int> order(matroid.ground_set_size());
  std::iota(order.begin(), order.end(), 0);
  return static_cast<int>(Greedy(matroid, subset, order).size());
}

MatroidAxiomReport CheckMatroidAxioms(const Matroid& matroid, int max_ground) {
  const int n = matroid.ground_set_size();
  CheckEnumerationGuard(n, max_ground, "matroid axiom check");
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<char> independent(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    independent[mask] = matroid.IsIndependent(MaskElements(mask)) ? 1 : 0;
  }
  MatroidAxiomReport report;
  if (!independent[0]) {
    report.empty_independent = false;
    report.witness = "empty set dependent";
    return report;
  }
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    if (!independent[mask]) continue;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const std::uint32_t smaller = mask & ~(rest & -rest);
      if (!independent[smaller]) {
        report.downward_closed = false;
        report.witness = Join(MaskElements(smaller)) + " dependent inside " +
                         Join(MaskElements(mask));
        return report;
      }
    }
  }
  for (std::uint32_t x = 0; x < count; ++x) {
    if (!independent[x]) continue;
    for (std::uint32_t y = 0; y < count; ++y) {
      if (!independent[y] || std::popcount(x) >= std::popcount(y)) continue;
      bool extended = false;
      for (std::uint32_t rest = y & ~x; rest != 0 && !extended;
           rest &= rest - 1) {
        extended = independent[x | (rest & -rest)] != 0;
      }
      if (!extended) {
        report.exchange = false;
        report.witness = "cannot extend " + Join(MaskElements(x)) + " from " +
                         Join(MaskElements(y));
        return report;
      }
    }
  }
  return report;
}

std::optional<std::string> GreedyLemmaViolation(const Matroid& matroid,
                                                std::span<const int> smaller,
                                                std::span<const int> larger,
                                                std::span<const int> order) {
  const std::vector<int> small_greedy = Greedy(matroid, smaller, order);
  const std::vector<int> large_greedy = Greedy(matroid, larger, order);
  if (large_greedy.size() < small_greedy.size()) return "cardinality";
  std::vector<char> in_small(matroid.ground_set_size(), 0);
  std::vector<char> in_small_greedy(matroid.ground_set_size(), 0);
  for (const int e : smaller) in_small[e] = 1;
  for (const int e : small_greedy) in_small_greedy[e] = 1;
  for (const int e : large_greedy) {
    if (in_small[e] && !in_small_greedy[e]) return "containment";
  }
  return std::nullopt;
}

GreedyLemmaReport CheckGreedyLemma(const Matroid& matroid, int trials,
                                   std::mt19937_64& rng) {
  const int n = matroid.ground_set_size();
  GreedyLemmaReport report;
  std::vector<int> order(n);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < trials; ++t) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> larger;
    std::vector<int> smaller;
    for (int e = 0; e < n; ++e) {
      if (!coin(rng)) continue;
      larger.push_back(e);
      if (coin(rng)) smaller.push_back(e);
    }
    ++report.trials;
    if (auto failure = GreedyLemmaViolation(matroid, smaller, larger, order)) {
      report.passed = false;
      report.smaller = smaller;
      report.larger = larger;
      report.order = order;
      report.failed_property = *failure;
      return report;
    }
  }
  return report;
}

}  // namespace assort
