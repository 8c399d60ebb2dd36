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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "assort/axioms.h"
#include "assort/generate.h"
#include "assort/suite.h"
#include "test_support.h"

namespace assort {
namespace {

namespace fs = std::filesystem;

void ExpectSameModel(const ChoiceModel& a, const ChoiceModel& b) {
  ASSERT_EQ(a.num_products(), b.num_products());
  for (Subset s = 0; s < (Subset{1} << a.num_products()); ++s) {
    EXPECT_EQ(a.ChoiceVector(s), b.ChoiceVector(s));
  }
}

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("assort_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(RoundTrip, EveryModelFamily) {
  std::mt19937_64 rng(501);
  for (const char* family :
       {"mnl", "mixed_mnl", "stochastic_preference", "mallows", "hfam"}) {
    const ChoiceModelPtr model = RandomModel(family, 4, rng);
    const Json json = ModelToJson(*model);
    EXPECT_EQ(json["type"], family);
    const ChoiceModelPtr back = ModelFromJson(ParseJson(Dump(json)));
    ExpectSameModel(*model, *back);
    EXPECT_EQ(ModelToJson(*back), json);
  }
  const ChoiceModelPtr tight = GenerateTightInstance(3, 0.1).model_ptr();
  ExpectSameModel(*tight, *ModelFromJson(ModelToJson(*tight)));
  const ChoiceModelPtr table = testing::McFaddenModel();
  EXPECT_EQ(ModelToJson(*table)["type"], "tabular");
  ExpectSameModel(*table, *ModelFromJson(ModelToJson(*table)));
}

TEST(RoundTrip, Instances) {
  std::mt19937_64 rng(503);
  const AssortmentInstance assortment = RandomAssortment("mnl", 3, rng);
  const AssortmentInstance a2 = AssortmentFromJson(ToJson(assortment));
  EXPECT_EQ(a2.revenue(), assortment.revenue());
  ExpectSameModel(a2.model(), assortment.model());

  const UdpMinInstance umin = RandomUdpMin(3, 3, 3, rng);
  EXPECT_EQ(ToJson(UdpMinFromJson(ToJson(umin))), ToJson(umin));
  const UdpRankInstance urank = RandomUdpRank(3, 3, 3, rng);
  EXPECT_EQ(ToJson(UdpRankFromJson(ToJson(urank))), ToJson(urank));
  const StackelbergInstance st = RandomStackelbergGraph(4, {1.0, 2.0}, rng);
  const StackelbergInstance st2 = StackelbergFromJson(ToJson(st));
  EXPECT_EQ(ToJson(st2), ToJson(st));
  EXPECT_EQ(st2.colors(), st.colors());

  const MultiPeriodInstance mp(assortment, 3, 2);
  const MultiPeriodInstance mp2 = MultiPeriodFromJson(ToJson(mp));
  EXPECT_EQ(mp2.horizon(), 3);
  EXPECT_EQ(mp2.capacity(), 2);
  EXPECT_EQ(ToJson(mp2), ToJson(mp));
}

TEST(RoundTrip, InstanceFile) {
  const InstanceFile file =
      Generate(InstanceKind::kAssortment, "mallows", Json{{"n", 4}}, 17);
  const InstanceFile back = InstanceFileFromJson(ParseJson(Dump(ToJson(file))));
  EXPECT_EQ(back, file);
  EXPECT_EQ(back.seed, 17u);
  EXPECT_EQ(back.family, "mallows");
}

TEST(RoundTrip, DoublesAreExact) {
  const std::vector<double> values = {0.1, 1.0 / 3.0, 2.0 / 7.0, 1e-300,
                                      123456789.123456789};
  const Json back = ParseJson(Dump(Json(values)));
  EXPECT_EQ(back.get<std::vector<double>>(), values);
}

TEST(Prices, InfinityIsAString) {
  EXPECT_EQ(PriceToJson(kUnpriced), "inf");
  EXPECT_EQ(PriceToJson(2.5), 2.5);
  EXPECT_EQ(PriceFromJson(Json("inf")), kUnpriced);
  EXPECT_EQ(PriceFromJson(Json(3)), 3.0);
  EXPECT_ASSORT_ERROR(PriceFromJson(Json("free")), ErrorCode::kParseError);
}

TEST(Parse, Errors) {
  EXPECT_ASSORT_ERROR(ParseJson("{\"model\": "), ErrorCode::kParseError);
  EXPECT_ASSORT_ERROR(ModelFromJson(Json{{"type", "logit"}}),
                      ErrorCode::kParseError);
  EXPECT_ASSORT_ERROR(ModelFromJson(Json{{"type", "mnl"}}),
                      ErrorCode::kParseError);
  EXPECT_ASSORT_ERROR(
      ModelFromJson(Json{{"type", "mnl"}, {"utilities", "high"}}),
      ErrorCode::kParseError);
  EXPECT_ASSORT_ERROR(InstanceFileFromJson(Json::array()),
                      ErrorCode::kParseError);
  EXPECT_ASSORT_ERROR(InstanceFileFromJson(Json{{"kind", "poker"}}),
                      ErrorCode::kParseError);
  EXPECT_ASSORT_ERROR(InstanceFileFromJson(Json{{"x", 1}}),
                      ErrorCode::kParseError);
  EXPECT_ASSORT_ERROR(ReadJsonFile("/nonexistent/assort.json"),
                      ErrorCode::kParseError);
}

TEST(Parse, KindInference) {
  EXPECT_EQ(InstanceFileFromJson(
                Json{{"model", {{"type", "mnl"}}}, {"revenue", Json::array()}})
                .kind,
            InstanceKind::kAssortment);
  EXPECT_EQ(InstanceFileFromJson(Json{{"type", "udp_rank"}}).kind,
            InstanceKind::kUdpRank);
}

TEST(Generator, DeterministicPerSeed) {
  for (const auto& [kind, family] :
       std::vector<std::pair<InstanceKind, std::string>>{
           {InstanceKind::kAssortment, "hfam"},
           {InstanceKind::kMultiPeriod, "mnl"},
           {InstanceKind::kUdpMin, "random"},
           {InstanceKind::kUdpRank, "random"},
           {InstanceKind::kStackelberg, "random_graph"}}) {
    const InstanceFile a = Generate(kind, family, Json::object(), 99);
    const InstanceFile b = Generate(kind, family, Json::object(), 99);
    EXPECT_EQ(Dump(ToJson(a)), Dump(ToJson(b))) << family;
    const InstanceFile c = Generate(kind, family, Json::object(), 100);
    EXPECT_NE(Dump(ToJson(a)), Dump(ToJson(c))) << family;
  }
}

TEST(Generator, RecordsEffectiveParams) {
  const InstanceFile file =
      Generate(InstanceKind::kAssortment, "mixed_mnl", Json{{"n", 3}}, 1);
  EXPECT_EQ(file.params["n"], 3);
  EXPECT_TRUE(file.params.contains("components"));
  EXPECT_TRUE(file.params.contains("max_revenue"));
  const InstanceFile udp =
      Generate(InstanceKind::kUdpMin, "random", Json::object(), 1);
  EXPECT_EQ(udp.params["n"], 3);
  EXPECT_EQ(udp.params["m"], 3);
}

TEST(Generator, InvalidParams) {
  EXPECT_ASSORT_ERROR(
      Generate(InstanceKind::kAssortment, "mnl", Json{{"n", "five"}}, 1),
      ErrorCode::kInvalidParams);
  EXPECT_ASSORT_ERROR(
      Generate(InstanceKind::kAssortment, "probit", Json::object(), 1),
      ErrorCode::kInvalidParams);
  EXPECT_ASSORT_ERROR(Generate(InstanceKind::kUdpMin, "mnl", Json::object(), 1),
                      ErrorCode::kInvalidParams);
}

TEST(Generator, TightExample) {
  const InstanceFile file = Generate(InstanceKind::kAssortment, "tight",
                                     Json{{"k", 3}, {"eps", 0.1}}, 1);
  const AssortmentInstance instance = AssortmentFromJson(file.payload);
  EXPECT_EQ(instance.num_products(), 6);
  EXPECT_TRUE(CheckAxioms(instance.model()).AllPassed());
}

TEST(Generator, StackelbergRandomGraph) {
  const InstanceFile file = Generate(InstanceKind::kStackelberg, "random_graph",
                                     Json{{"v", 5}, {"redCosts", {1, 2}}}, 3);
  const StackelbergInstance instance = StackelbergFromJson(file.payload);
  const auto& graph = dynamic_cast<const GraphicMatroid&>(instance.matroid());
  EXPECT_EQ(graph.num_vertices(), 5);
  for (const double c : instance.cost_levels()) {
    EXPECT_TRUE(c == 1.0 || c == 2.0);
  }
  EXPECT_EQ(Rank(instance.matroid(), instance.red()), 4);
}

TEST(Digest, StableAndSensitive) {
  EXPECT_EQ(Digest("abc"), Digest("abc"));
  EXPECT_NE(Digest("abc"), Digest("abd"));
  EXPECT_EQ(Digest("").size(), Digest("anything").size());
}

TEST(Files, AtomicWrite) {
  const fs::path dir = TempDir("write");
  const fs::path path = dir / "out.json";
  WriteTextFile(path, "{\"a\": 1}\n");
  WriteTextFile(path, "{\"a\": 2}\n");
  EXPECT_FALSE(fs::exists(path.string() + ".tmp"));
  EXPECT_EQ(ReadJsonFile(path)["a"], 2);
}

TEST(Suite, EmptyListPasses) {
  const SuiteResult result = RunSuite({});
  EXPECT_EQ(result.exit_code, kExitPass);
  EXPECT_EQ(result.summary["files"], 0);
}

TEST(Suite, GeneratedRegularInstancesPass) {
  const fs::path dir = TempDir("suite");
  std::vector<fs::path> files;
  for (int i = 0; i < 50; ++i) {
    const char* family =
        testing::RegularFamilies()[i % testing::RegularFamilies().size()];
    const InstanceKind kind =
        i % 2 ? InstanceKind::kAssortment : InstanceKind::kMultiPeriod;
    const fs::path path = dir / ("i" + std::to_string(i) + ".json");
    WriteTextFile(path, Dump(ToJson(Generate(kind, family, Json{{"n", 4}},
                                             static_cast<std::uint64_t>(i)))));
    files.push_back(path);
  }
  files.push_back(dir / "udp.json");
  WriteTextFile(
      files.back(),
      Dump(ToJson(Generate(InstanceKind::kUdpRank, "random", {}, 5))));
  files.push_back(dir / "st.json");
  WriteTextFile(files.back(), Dump(ToJson(Generate(InstanceKind::kStackelberg,
                                                   "random_graph", {}, 5))));
  SuiteOptions options;
  options.report_dir = dir / "reports";
  const SuiteResult result = RunSuite(files, options);
  EXPECT_EQ(result.exit_code, kExitPass) << result.summary.dump();
  EXPECT_EQ(result.summary["passed"], 52);
  ASSERT_EQ(result.lines.size(), files.size());
  EXPECT_EQ(result.lines[0]["status"], "pass");
  EXPECT_TRUE(fs::exists(dir / "reports" / "i0.report.json"));
}

TEST(Suite, ViolatorFailsWithViolation) {
  const fs::path dir = TempDir("violator");
  const fs::path path = dir / "bad.json";
  WriteTextFile(path, Dump(ToJson(AssortmentInstance(
                          testing::RegularityViolator(), {1.0, 2.0}))));
  const SuiteResult result = RunSuite({path});
  EXPECT_EQ(result.exit_code, kExitFail);
  ASSERT_EQ(result.lines.size(), 1u);
  EXPECT_EQ(result.lines[0]["status"], "fail");
  EXPECT_FALSE(result.lines[0]["violations"].empty());
}

TEST(Suite, UnreadableFileIsAnError) {
  const SuiteResult result = RunSuite({"/nonexistent/x.json"});
  EXPECT_EQ(result.exit_code, kExitInputError);
  EXPECT_EQ(result.lines[0]["status"], "error");
}

TEST(Suite, ExpandPatterns) {
  const fs::path dir = TempDir("glob");
  WriteTextFile(dir / "a.json", "{}");
  WriteTextFile(dir / "b.json", "{}");
  EXPECT_EQ(ExpandPatterns({(dir / "*.json").string()}).size(), 2u);
  EXPECT_EQ(ExpandPatterns({(dir / "*.none").string()}).size(), 1u);
}

}  // namespace
}  // namespace assort
