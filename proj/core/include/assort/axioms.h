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

// Exhaustive checkers for the four axioms of a regular discrete choice model
// and for two derived properties of the demand function
// f(S) = sum_{x in S} P(x, S).
//
// All checkers materialize the model as a TabularModel first, so they need
// 2^n enumeration and throw kGroundSetTooLarge when n exceeds the guard.
// Subsets are visited in canonical order (cardinality, then lexicographic)
// and the first violation found is reported. Probabilities are compared with
// absolute tolerance kProbabilityTolerance.

#ifndef ASSORT_AXIOMS_H_
#define ASSORT_AXIOMS_H_

#include <optional>
#include <string>

#include "assort/choice_model.h"
#include "assort/common.h"

namespace assort {

// (x, S, S') with S a subset of S'. For single-set axioms S' == S.
struct AxiomWitness {
  int product = 0;
  Subset smaller = 0;
  Subset larger = 0;
  double smaller_value = 0.0;
  double larger_value = 0.0;

  std::string ToString() const;
};

struct AxiomVerdict {
  bool passed = true;
  std::optional<AxiomWitness> witness;
};

struct AxiomReport {
  AxiomVerdict nonnegative;   // P(x, S) >= 0
  AxiomVerdict offered_only;  // P(x, S) = 0 for x not in S
  AxiomVerdict at_most_one;   // sum_{x in S} P(x, S) <= 1
  AxiomVerdict regularity;    // P(x, S) >= P(x, S') for S in S'

  bool AllPassed() const {
    return nonnegative.passed && offered_only.passed && at_most_one.passed &&
           regularity.passed;
  }
};

// Regularity is checked on the covering pairs S' = S + {y}; every S in S'
// is reached by a chain of such additions, so the verdict is the same as
// over all pairs.
AxiomReport CheckAxioms(const ChoiceModel& model,
                        int guard = kDefaultEnumerationGuard);

// f(S) <= f(S') for S in S'. Must pass whenever regularity passes.
AxiomVerdict CheckPurchaseMonotonicity(const ChoiceModel& model,
                                       int guard = kDefaultEnumerationGuard);

struct SubmodularityWitness {
  Subset smaller = 0;         // S
  Subset larger = 0;          // S'
  int product = 0;            // x
  double larger_gain = 0.0;   // f(S' + x) - f(S')
  double smaller_gain = 0.0;  // f(S + x) - f(S)
};

struct SubmodularityReport {
  bool passed = true;
  // Largest f(S'+x) - f(S') - (f(S+x) - f(S)) over all S in S' and x; zero
  // when the demand function is submodular.
  double max_gap = 0.0;
  std::optional<SubmodularityWitness> witness;
};

// f(S' + x) - f(S') <= f(S + x) - f(S) for all S in S' and every product x,
// over every pair (not just covering pairs) so that the reported gap is the
// true maximum.
SubmodularityReport CheckDemandSubmodularity(
    const ChoiceModel& model, int guard = kDefaultEnumerationGuard);

}  // namespace assort

#endif  // ASSORT_AXIOMS_H_
