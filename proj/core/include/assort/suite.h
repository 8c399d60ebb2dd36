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

// JSON reports and the batch verification runner.
//
// Every report is computed from the instance alone; the only fields that are
// not reproducible are the wall-clock timings.

#ifndef ASSORT_SUITE_H_
#define ASSORT_SUITE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "assort/assortment.h"
#include "assort/axioms.h"
#include "assort/io.h"
#include "assort/multi_period.h"
#include "assort/stackelberg.h"
#include "assort/udp.h"

namespace assort {

// Process exit codes shared by the CLI and the suite.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;

struct Limits {
  int enumeration = kDefaultEnumerationGuard;
  std::uint64_t pricing = kDefaultPricingGuard;
};

Json SubsetToJson(Subset s);
Json ToJson(const AxiomReport& report);
Json ToJson(const SubmodularityReport& report);
Json ToJson(const BoundReport& report);
Json ToJson(const GuaranteeReport& report);
Json ToJson(const MonotonicityReport& report);
Json ToJson(const DpTable& table);

// {opt, revord, ratio, bounds{A, B_exact, B_log, C_exact, C_log, nu,
// lambda_tilde}}; fields of methods not run are null.
struct SolveOptions {
  bool revenue_ordered = true;
  bool brute_force = true;
  bool bounds = true;
};
Json SolveReport(const AssortmentInstance& instance,
                 const SolveOptions& options, const Limits& limits = {});

// Every check below returns an object with a boolean "passed" and appends a
// readable line per failure to `violations` when given.
using Violations = std::vector<std::string>;

Json CheckModelAxioms(const ChoiceModel& model, const Limits& limits,
                      Violations* violations = nullptr);
Json CheckGuarantees(const AssortmentInstance& instance, const Limits& limits,
                     Violations* violations = nullptr);

// Reduced OPT equals pricing OPT, reduced model regular, uniform-pricing
// revenues equal the revenue-ordered candidate revenues.
Json CheckReduction(const UdpMinInstance& instance, const Limits& limits,
                    Violations* violations = nullptr);
Json CheckReduction(const UdpRankInstance& instance, const Limits& limits,
                    Violations* violations = nullptr);
Json CheckReduction(const StackelbergInstance& instance, const Limits& limits,
                    Violations* violations = nullptr);

// Uniform pricing against OPT/(1 + ln rho) (and OPT/(1 + ln m) for UDP_min).
Json CheckUniformBounds(const UdpMinInstance& instance, const Limits& limits,
                        Violations* violations = nullptr);
Json CheckUniformBounds(const UdpRankInstance& instance, const Limits& limits,
                        Violations* violations = nullptr);
Json CheckUniformBounds(const StackelbergInstance& instance,
                        const Limits& limits, Violations* violations = nullptr);

// Nesting monotonicity, marginal value properties and l* agreement.
Json CheckMonotonicity(const MultiPeriodInstance& instance,
                       const Limits& limits, Violations* violations = nullptr);

enum class Check { kAxioms, kGuarantees, kReductions, kMonotonicity };

std::string_view CheckName(Check check);
Check CheckFromName(std::string_view name);  // throws kInvalidParams
std::vector<Check> AllChecks();

struct SuiteOptions {
  std::vector<Check> checks = AllChecks();
  Limits limits;
  // When set, each file's report line is also written to
  // <report_dir>/<stem>.report.json.
  std::optional<std::filesystem::path> report_dir;
};

struct SuiteResult {
  std::vector<Json> lines;  // one per input file, in input order
  Json summary;             // {files, passed, failed, errors}
  int exit_code = kExitPass;
};

// Runs the selected checks on one instance file. A check not applicable to
// the file's kind is omitted.
Json RunChecks(const InstanceFile& file, const SuiteOptions& options,
               Violations* violations = nullptr);

SuiteResult RunSuite(const std::vector<std::filesystem::path>& files,
                     const SuiteOptions& options = {});

// Expands shell-style patterns; a pattern without matches is kept verbatim
// so that the suite reports it as unreadable.
std::vector<std::filesystem::path> ExpandPatterns(
    const std::vector<std::string>& patterns);

}  // namespace assort

#endif  // ASSORT_SUITE_H_
