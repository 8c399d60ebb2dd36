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

// JSON encoding of models, instances and instance files.
//
// Doubles are written in shortest round-trip form; kUnpriced is written as
// the string "inf". Malformed input raises Error with kParseError, invalid
// content the error of the corresponding constructor.

#ifndef ASSORT_IO_H_
#define ASSORT_IO_H_

#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "assort/assortment.h"
#include "assort/choice_model.h"
#include "assort/multi_period.h"
#include "assort/stackelberg.h"
#include "assort/udp.h"

namespace assort {

using Json = nlohmann::json;

// Model descriptors {"type": ..., ...}. Families without a descriptor of
// their own (the reduction models) are written as "tabular".
Json ModelToJson(const ChoiceModel& model,
                 int guard = kDefaultEnumerationGuard);
ChoiceModelPtr ModelFromJson(const Json& json);

// {"model": {...}, "revenue": [...]}.
Json ToJson(const AssortmentInstance& instance);
AssortmentInstance AssortmentFromJson(const Json& json);

// {"type": "udp_min", "items": n, "consumers": [{"bundle", "valuation"}]}.
Json ToJson(const UdpMinInstance& instance);
UdpMinInstance UdpMinFromJson(const Json& json);

// {"type": "udp_rank", "items": n, "consumers": [{"ranking",
// "valuations"}]}.
Json ToJson(const UdpRankInstance& instance);
UdpRankInstance UdpRankFromJson(const Json& json);

// {"type": "stackelberg", "vertices": V, "edges": [{"u", "v", "color",
// "cost"}]}, vertices 0-based. Only graphic instances are serializable.
Json ToJson(const StackelbergInstance& instance);
StackelbergInstance StackelbergFromJson(const Json& json);

// {"type": "multiperiod", "instance": {...}, "T": t, "Q": q}.
Json ToJson(const MultiPeriodInstance& instance);
MultiPeriodInstance MultiPeriodFromJson(const Json& json);

Json PriceToJson(double price);
double PriceFromJson(const Json& json);

enum class InstanceKind {
  kAssortment,
  kUdpMin,
  kUdpRank,
  kStackelberg,
  kMultiPeriod,
};

std::string_view InstanceKindName(InstanceKind kind);
InstanceKind InstanceKindFromName(std::string_view name);

struct InstanceFile {
  InstanceKind kind = InstanceKind::kAssortment;
  Json payload;
  std::optional<std::uint64_t> seed;
  std::string family;  // generator family, empty for hand-written files
  Json params = Json::object();

  bool operator==(const InstanceFile&) const = default;
};

Json ToJson(const InstanceFile& file);
// Accepts the wrapped form {"kind", "payload", ...} as well as a bare
// payload, whose kind is inferred from "type" or from its fields.
InstanceFile InstanceFileFromJson(const Json& json);

// Canonical text: two-space indent and a trailing newline.
std::string Dump(const Json& json);
Json ParseJson(std::string_view text);

Json ReadJsonFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

// FNV-1a 64 of `text`, as 16 hex digits.
std::string Digest(std::string_view text);

}  // namespace assort

#endif  // ASSORT_IO_H_
