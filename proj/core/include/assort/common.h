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

#ifndef ASSORT_COMMON_H_
#define ASSORT_COMMON_H_

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace assort {

// A set of products. Product x (1-based) is offered iff bit x-1 is set; the
// no-purchase option 0 is never stored.
using Subset = std::uint64_t;

inline constexpr int kMaxProducts = 64;

// Default cap on n for anything that enumerates all 2^n assortments.
inline constexpr int kDefaultEnumerationGuard = 20;

// Absolute tolerance for comparing choice probabilities.
inline constexpr double kProbabilityTolerance = 1e-9;

// Relative slack used when checking revenue inequalities.
inline constexpr double kRelativeSlack = 1e-9;

enum class ErrorCode {
  kGroundSetTooLarge,
  kNonPositiveRevenue,
  kBoundCUnavailable,
  kRegularityViolation,
  kInvalidEpsilon,
  kSearchSpaceTooLarge,
  kDeltaOutOfRange,
  kInvalidParams,
  kInvalidInstance,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

constexpr Subset Singleton(int x) { return Subset{1} << (x - 1); }

constexpr bool Contains(Subset s, int x) { return ((s >> (x - 1)) & 1U) != 0; }

constexpr int Cardinality(Subset s) { return std::popcount(s); }

constexpr Subset FullSet(int n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

constexpr bool IsSubsetOf(Subset a, Subset b) { return (a & ~b) == 0; }

// Position of product x among the members of s, counting from 0 in
// increasing product order. Requires Contains(s, x).
constexpr int RankInSubset(Subset s, int x) {
  return std::popcount(s & (Singleton(x) - 1));
}

// Sorted product ids.
std::vector<int> Elements(Subset s);
Subset FromElements(std::span<const int> products);

// Lexicographic comparison of the sorted element lists.
bool LexLess(Subset a, Subset b);

// Every subset of {1..n}, ordered by cardinality and then lexicographically
// on the sorted element lists. This is the enumeration order used whenever a
// checker reports "the first" witness.
std::vector<Subset> SubsetsInCanonicalOrder(int n);

// Canonical-order enumeration of the subsets of an arbitrary universe mask.
std::vector<Subset> SubsetsInCanonicalOrder(Subset universe);

// "{1,3,4}".
std::string FormatSubset(Subset s);

// Throws kGroundSetTooLarge when n exceeds the guard.
void CheckEnumerationGuard(int n, int guard, std::string_view what);

// |a - b| <= tol * max(|a|, |b|).
bool NearlyEqualRelative(double a, double b, double tol = kRelativeSlack);

// a >= b up to relative slack, measured against max(|a|, |b|).
bool GreaterOrNearlyEqual(double a, double b, double tol = kRelativeSlack);

}  // namespace assort

#endif  // ASSORT_COMMON_H_
