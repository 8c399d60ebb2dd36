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

// Independence oracles and the greedy algorithm. Elements are 0-based
// integers in [0, ground_set_size()).

#ifndef ASSORT_MATROID_H_
#define ASSORT_MATROID_H_

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace assort {

class Matroid {
 public:
  virtual ~Matroid() = default;
  virtual int ground_set_size() const = 0;
  // `elements` are distinct.
  virtual bool IsIndependent(std::span<const int> elements) const = 0;
};

// Forests of an undirected multigraph. Edge i joins edges()[i].
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(int num_vertices, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int ground_set_size() const override {
    return static_cast<int>(edges_.size());
  }
  bool IsIndependent(std::span<const int> elements) const override;

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Arbitrary independence predicate; not necessarily a matroid.
class PredicateIndependenceSystem final : public Matroid {
 public:
  using Predicate = std::function<bool(std::span<const int>)>;

  PredicateIndependenceSystem(int ground_set_size, Predicate predicate)
      : size_(ground_set_size), predicate_(std::move(predicate)) {}

  int ground_set_size() const override { return size_; }
  bool IsIndependent(std::span<const int> elements) const override {
    return predicate_(elements);
  }

 private:
  int size_;
  Predicate predicate_;
};

// Independent iff contained in {0, 1} or of size at most one. Downward
// closed but violates the exchange property ({2} versus {0, 1}); used to
// validate the greedy lemma harness.
PredicateIndependenceSystem NonMatroidSentinel(int ground_set_size);

// Runs greedy over the members of `subset` in the order given by `order`,
// a permutation of the ground set. Returns the chosen elements in the order
// they were accepted.
std::vector<int> Greedy(const Matroid& matroid, std::span<const int> subset,
                        std::span<const int> order);

// Size of a maximal independent subset of `subset`.
int Rank(const Matroid& matroid, std::span<const int> subset);

struct MatroidAxiomReport {
  bool empty_independent = true;
  bool downward_closed = true;
  bool exchange = true;
  std::string witness;

  bool passed() const {
    return empty_independent && downward_closed && exchange;
  }
};

// Exhaustive over all subsets; ground sets up to `max_ground` elements.
MatroidAxiomReport CheckMatroidAxioms(const Matroid& matroid,
                                      int max_ground = 12);

struct GreedyLemmaReport {
  bool passed = true;
  int trials = 0;
  // First failing trial: F, F', the order and which property failed.
  std::vector<int> smaller;
  std::vector<int> larger;
  std::vector<int> order;
  std::string failed_property;
};

// Random F in F' and random order per trial; checks
//   |greedy(F')| >= |greedy(F)| and F meet greedy(F') within greedy(F).
GreedyLemmaReport CheckGreedyLemma(const Matroid& matroid, int trials,
                                   std::mt19937_64& rng);

// Checks both properties for one (F, F', order) triple.
std::optional<std::string> GreedyLemmaViolation(const Matroid& matroid,
                                                std::span<const int> smaller,
                                                std::span<const int> larger,
                                                std::span<const int> order);

}  // namespace assort

#endif  // ASSORT_MATROID_H_
