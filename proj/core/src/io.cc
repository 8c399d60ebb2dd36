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

#include "assort/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "assort/models.h"

namespace assort {
namespace {

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

const Json& Field(const Json& json, const char* key) {
  if (!json.is_object()) Fail("expected an object");
  const auto it = json.find(key);
  if (it == json.end()) Fail(std::string("missing field \"") + key + "\"");
  return *it;
}

template <typename T>
T Get(const Json& json, const char* key) {
  try {
    return Field(json, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    Fail(std::string("field \"") + key + "\": " + e.what());
  }
}

std::vector<WeightedMallows> MallowsComponents(const Json& json) {
  std::vector<WeightedMallows> out;
  for (const Json& c : Field(json, "components")) {
    out.push_back({Get<double>(c, "weight"),
                   Get<std::vector<int>>(c, "central"),
                   Get<double>(c, "theta")});
  }
  return out;
}

std::shared_ptr<const SetFunction> CapacityFromJson(const Json& json,
                                                    int num_products) {
  const auto kind = Get<std::string>(json, "kind");
  if (kind == "table") {
    return std::make_shared<const TableSetFunction>(
        num_products, Get<std::vector<double>>(json, "values"));
  }
  if (kind == "coverage") {
    return std::make_shared<const CoverageSetFunction>(
        Get<std::vector<double>>(json, "weights"),
        Get<std::vector<std::vector<int>>>(json, "covers"));
  }
  Fail("unknown capacity kind \"" + kind + "\"");
}

Json CapacityToJson(const SetFunction& capacity) {
  if (const auto* table = dynamic_cast<const TableSetFunction*>(&capacity)) {
    return {{"kind", "table"}, {"values", table->values()}};
  }
  if (const auto* cover = dynamic_cast<const CoverageSetFunction*>(&capacity)) {
    return {{"kind", "coverage"},
            {"weights", cover->atom_weights()},
            {"covers", cover->covers()}};
  }
  throw Error(ErrorCode::kInvalidInstance, "unserializable capacity");
}

ChoiceModelPtr TabularFromJson(const Json& json) {
  const int n = Get<int>(json, "products");
  if (n < 1 || n > kDefaultEnumerationGuard) {
    Fail("tabular products must be in [1, 20]");
  }
  const Subset count = Subset{1} << n;
  std::vector<std::vector<double>> rows(count);
  std::vector<char> seen(count, 0);
  for (const Json& entry : Field(json, "entries")) {
    const auto set = Get<std::vector<int>>(entry, "set");
    const auto probabilities = Get<std::vector<double>>(entry, "probabilities");
    for (std::size_t i = 1; i < set.size(); ++i) {
      if (set[i - 1] >= set[i]) Fail("tabular sets must be sorted");
    }
    for (const int x : set) {
      if (x < 1 || x > n) Fail("tabular set has unknown product");
    }
    if (probabilities.size() != set.size()) {
      Fail("tabular entry needs one probability per member");
    }
    const Subset s = FromElements(set);
    if (seen[s]) Fail("duplicate tabular entry " + FormatSubset(s));
    seen[s] = 1;
    rows[s] = probabilities;
  }
  for (Subset s = 1; s < count; ++s) {
    if (!seen[s]) Fail("tabular entry missing for " + FormatSubset(s));
  }
  return std::make_shared<const TabularModel>(
      n, [&rows](Subset s) { return rows[s]; });
}

}  // namespace

Json ModelToJson(const ChoiceModel& model, int guard) {
  if (const auto* m = dynamic_cast<const MnlModel*>(&model)) {
    return {{"type", "mnl"}, {"utilities", m->utilities()}};
  }
  if (const auto* m = dynamic_cast<const MixedMnlModel*>(&model)) {
    Json components = Json::array();
    for (const auto& c : m->components()) {
      components.push_back({{"weight", c.weight}, {"utilities", c.utilities}});
    }
    return {{"type", "mixed_mnl"}, {"components", components}};
  }
  if (const auto* m = dynamic_cast<const MallowsModel*>(&model)) {
    return {
        {"type", "mallows"}, {"central", m->central()}, {"theta", m->theta()}};
  }
  if (const auto* m = dynamic_cast<const MallowsMixtureModel*>(&model)) {
    Json components = Json::array();
    for (const auto& c : m->components()) {
      components.push_back(
          {{"weight", c.weight}, {"central", c.central}, {"theta", c.theta}});
    }
    return {{"type", "mallows"}, {"components", components}};
  }
  if (const auto* m = dynamic_cast<const StochasticPreferenceModel*>(&model)) {
    Json rankings = Json::array();
    for (const auto& r : m->rankings()) {
      rankings.push_back({{"weight", r.weight}, {"order", r.order}});
    }
    return {{"type", "stochastic_preference"},
            {"products", m->num_products()},
            {"rankings", rankings}};
  }
  if (const auto* m = dynamic_cast<const HfamModel*>(&model)) {
    return {{"type", "hfam"},
            {"preference", m->preference()},
            {"capacity", CapacityToJson(m->capacity())}};
  }
  if (const auto* m = dynamic_cast<const TightExampleModel*>(&model)) {
    return {
        {"type", "tight_example"}, {"k", m->k()}, {"epsilon", m->epsilon()}};
  }
  const int n = model.num_products();
  CheckEnumerationGuard(n, guard, "tabular serialization");
  Json entries = Json::array();
  for (const Subset s : SubsetsInCanonicalOrder(n)) {
    if (s == 0) continue;
    entries.push_back(
        {{"set", Elements(s)}, {"probabilities", model.ChoiceVector(s)}});
  }
  return {{"type", "tabular"}, {"products", n}, {"entries", entries}};
}

ChoiceModelPtr ModelFromJson(const Json& json) {
  const auto type = Get<std::string>(json, "type");
  if (type == "mnl") {
    return std::make_shared<const MnlModel>(
        Get<std::vector<double>>(json, "utilities"));
  }
  if (type == "mixed_mnl") {
    std::vector<MixedMnlModel::Component> components;
    for (const Json& c : Field(json, "components")) {
      components.push_back(
          {Get<double>(c, "weight"), Get<std::vector<double>>(c, "utilities")});
    }
    return std::make_shared<const MixedMnlModel>(std::move(components));
  }
  if (type == "tabular") return TabularFromJson(json);
  if (type == "stochastic_preference") {
    std::vector<WeightedRanking> rankings;
    for (const Json& r : Field(json, "rankings")) {
      rankings.push_back(
          {Get<double>(r, "weight"), Get<std::vector<int>>(r, "order")});
    }
    return std::make_shared<const StochasticPreferenceModel>(
        Get<int>(json, "products"), std::move(rankings));
  }
  if (type == "mallows") {
    if (json.contains("components")) {
      return std::make_shared<const MallowsMixtureModel>(
          MallowsComponents(json));
    }
    return std::make_shared<const MallowsModel>(
        Get<std::vector<int>>(json, "central"), Get<double>(json, "theta"));
  }
  if (type == "hfam") {
    auto preference = Get<std::vector<int>>(json, "preference");
    const int n = static_cast<int>(preference.size());
    return std::make_shared<const HfamModel>(
        std::move(preference), CapacityFromJson(Field(json, "capacity"), n));
  }
  if (type == "tight_example") {
    return std::make_shared<const TightExampleModel>(
        Get<int>(json, "k"), Get<double>(json, "epsilon"));
  }
  Fail("unknown model type \"" + type + "\"");
}

Json ToJson(const AssortmentInstance& instance) {
  return {{"model", ModelToJson(instance.model())},
          {"revenue", instance.revenue()}};
}

AssortmentInstance AssortmentFromJson(const Json& json) {
  return AssortmentInstance(ModelFromJson(Field(json, "model")),
                            Get<std::vector<double>>(json, "revenue"));
}

Json ToJson(const UdpMinInstance& instance) {
  Json consumers = Json::array();
  for (const auto& c : instance.consumers()) {
    consumers.push_back({{"bundle", c.bundle}, {"valuation", c.valuation}});
  }
  return {{"type", "udp_min"},
          {"items", instance.num_items()},
          {"consumers", consumers}};
}

UdpMinInstance UdpMinFromJson(const Json& json) {
  std::vector<UdpMinConsumer> consumers;
  for (const Json& c : Field(json, "consumers")) {
    consumers.push_back(
        {Get<std::vector<int>>(c, "bundle"), Get<double>(c, "valuation")});
  }
  return UdpMinInstance(Get<int>(json, "items"), std::move(consumers));
}

Json ToJson(const UdpRankInstance& instance) {
  Json consumers = Json::array();
  for (const auto& c : instance.consumers()) {
    consumers.push_back({{"ranking", c.ranking}, {"valuations", c.valuations}});
  }
  return {{"type", "udp_rank"},
          {"items", instance.num_items()},
          {"consumers", consumers}};
}

UdpRankInstance UdpRankFromJson(const Json& json) {
  std::vector<UdpRankConsumer> consumers;
  for (const Json& c : Field(json, "consumers")) {
    consumers.push_back({Get<std::vector<int>>(c, "ranking"),
                         Get<std::vector<double>>(c, "valuations")});
  }
  return UdpRankInstance(Get<int>(json, "items"), std::move(consumers));
}

Json ToJson(const StackelbergInstance& instance) {
  const auto graph =
      std::dynamic_pointer_cast<const GraphicMatroid>(instance.matroid_ptr());
  if (!graph) {
    throw Error(ErrorCode::kInvalidInstance,
                "only graphic Stackelberg instances are serializable");
  }
  Json edges = Json::array();
  for (std::size_t e = 0; e < graph->edges().size(); ++e) {
    Json edge = {{"u", graph->edges()[e].first},
                 {"v", graph->edges()[e].second}};
    if (instance.colors()[e] == Color::kRed) {
      edge["color"] = "red";
      edge["cost"] = instance.costs()[e];
    } else {
      edge["color"] = "blue";
    }
    edges.push_back(edge);
  }
  return {{"type", "stackelberg"},
          {"vertices", graph->num_vertices()},
          {"edges", edges}};
}

StackelbergInstance StackelbergFromJson(const Json& json) {
  std::vector<std::pair<int, int>> edges;
  std::vector<Color> colors;
  std::vector<double> costs;
  for (const Json& e : Field(json, "edges")) {
    edges.emplace_back(Get<int>(e, "u"), Get<int>(e, "v"));
    const auto color = Get<std::string>(e, "color");
    if (color == "red") {
      colors.push_back(Color::kRed);
      costs.push_back(Get<double>(e, "cost"));
    } else if (color == "blue") {
      colors.push_back(Color::kBlue);
      costs.push_back(0.0);
    } else {
      Fail("edge color must be \"red\" or \"blue\"");
    }
  }
  auto graph = std::make_shared<const GraphicMatroid>(
      Get<int>(json, "vertices"), std::move(edges));
  return StackelbergInstance(std::move(graph), std::move(colors),
                             std::move(costs));
}

Json ToJson(const MultiPeriodInstance& instance) {
  return {{"type", "multiperiod"},
          {"instance", ToJson(instance.base())},
          {"T", instance.horizon()},
          {"Q", instance.capacity()}};
}

MultiPeriodInstance MultiPeriodFromJson(const Json& json) {
  return MultiPeriodInstance(AssortmentFromJson(Field(json, "instance")),
                             Get<int>(json, "T"), Get<int>(json, "Q"));
}

Json PriceToJson(double price) {
  if (std::isinf(price)) return "inf";
  return price;
}

double PriceFromJson(const Json& json) {
  if (json.is_string() && json.get<std::string>() == "inf") return kUnpriced;
  if (!json.is_number()) Fail("price must be a number or \"inf\"");
  return json.get<double>();
}

std::string_view InstanceKindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kAssortment:
      return "assortment";
    case InstanceKind::kUdpMin:
      return "udp_min";
    case InstanceKind::kUdpRank:
      return "udp_rank";
    case InstanceKind::kStackelberg:
      return "stackelberg";
    case InstanceKind::kMultiPeriod:
      return "multiperiod";
  }
  return "unknown";
}

InstanceKind InstanceKindFromName(std::string_view name) {
  for (const InstanceKind kind :
       {InstanceKind::kAssortment, InstanceKind::kUdpMin,
        InstanceKind::kUdpRank, InstanceKind::kStackelberg,
        InstanceKind::kMultiPeriod}) {
    if (InstanceKindName(kind) == name) return kind;
  }
  Fail("unknown instance kind \"" + std::string(name) + "\"");
}

Json ToJson(const InstanceFile& file) {
  Json out = {{"kind", InstanceKindName(file.kind)}};
  if (!file.family.empty()) out["family"] = file.family;
  if (file.seed) out["seed"] = *file.seed;
  if (!file.params.empty()) out["params"] = file.params;
  out["payload"] = file.payload;
  return out;
}

InstanceFile InstanceFileFromJson(const Json& json) {
  if (!json.is_object()) Fail("instance file must be an object");
  InstanceFile file;
  if (json.contains("kind")) {
    file.kind = InstanceKindFromName(Get<std::string>(json, "kind"));
    file.payload = Field(json, "payload");
    if (json.contains("seed")) file.seed = Get<std::uint64_t>(json, "seed");
    if (json.contains("family")) file.family = Get<std::string>(json, "family");
    if (json.contains("params")) file.params = Field(json, "params");
    return file;
  }
  file.payload = json;
  if (json.contains("type")) {
    file.kind = InstanceKindFromName(Get<std::string>(json, "type"));
  } else if (json.contains("model") && json.contains("revenue")) {
    file.kind = InstanceKind::kAssortment;
  } else {
    Fail("cannot infer the instance kind");
  }
  return file;
}

std::string Dump(const Json& json) { return json.dump(2) + "\n"; }

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Fail(e.what());
  }
}

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseJson(buffer.str());
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  // Write to a sibling and rename, so readers never see a partial file.
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kInvalidParams, "cannot write " + path.string());
    }
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

std::string Digest(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx",
                static_cast<unsigned long long>(hash));
  return out;
}

}  // namespace assort
