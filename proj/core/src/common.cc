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

#include "assort/common.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace assort {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kGroundSetTooLarge:
      return "GroundSetTooLarge";
    case ErrorCode::kNonPositiveRevenue:
      return "NonPositiveRevenue";
    case ErrorCode::kBoundCUnavailable:
      return "BoundCUnavailable";
    case ErrorCode::kRegularityViolation:
      return "RegularityViolation";
    case ErrorCode::kInvalidEpsilon:
      return "InvalidEpsilon";
    case ErrorCode::kSearchSpaceTooLarge:
      return "SearchSpaceTooLarge";
    case ErrorCode::kDeltaOutOfRange:
      return "DeltaOutOfRange";
    case ErrorCode::kInvalidParams:
      return "InvalidParams";
    case ErrorCode::kInvalidInstance:
      return "InvalidInstance";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

std::vector<int> Elements(Subset s) {
  std::vector<int> out;
  out.reserve(Cardinality(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

Subset FromElements(std::span<const int> products) {
  Subset s = 0;
  for (const int x : products) {
    if (x < 1 || x > kMaxProducts) {
      throw Error(ErrorCode::kInvalidInstance,
                  "product id out of range: " + std::to_string(x));
    }
    s |= Singleton(x);
  }
  return s;
}

bool LexLess(Subset a, Subset b) {
  while (a != 0 && b != 0) {
    const int lowest_a = std::countr_zero(a);
    const int lowest_b = std::countr_zero(b);
    if (lowest_a != lowest_b) return lowest_a < lowest_b;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::vector<Subset> SubsetsInCanonicalOrder(Subset universe) {
  std::vector<int> members;
  for (Subset rest = universe; rest != 0; rest &= rest - 1) {
    members.push_back(std::countr_zero(rest));
  }
  const int size = static_cast<int>(members.size());
  std::vector<Subset> out;
  out.reserve(size >= 63 ? 0 : (std::size_t{1} << size));
  out.push_back(0);
  // Lexicographic combinations of each cardinality.
  std::vector<int> pick;
  for (int card = 1; card <= size; ++card) {
    pick.resize(card);
    for (int i = 0; i < card; ++i) pick[i] = i;
    while (true) {
      Subset s = 0;
      for (const int i : pick) s |= Subset{1} << members[i];
      out.push_back(s);
      int i = card - 1;
      while (i >= 0 && pick[i] == size - card + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < card; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

std::vector<Subset> SubsetsInCanonicalOrder(int n) {
  return SubsetsInCanonicalOrder(FullSet(n));
}

std::string FormatSubset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (const int x : Elements(s)) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  out += "}";
  return out;
}

void CheckEnumerationGuard(int n, int guard, std::string_view what) {
  if (n > guard) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                std::string(what) + " needs n <= " + std::to_string(guard) +
                    ", got n = " + std::to_string(n));
  }
}

bool NearlyEqualRelative(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

bool GreaterOrNearlyEqual(double a, double b, double tol) {
  return a >= b || NearlyEqualRelative(a, b, tol);
}

}  // namespace assort
