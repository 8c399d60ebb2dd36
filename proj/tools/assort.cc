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

// assort: command-line front end.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "assort/assortment.h"
#include "assort/generate.h"
#include "assort/io.h"
#include "assort/multi_period.h"
#include "assort/stackelberg.h"
#include "assort/suite.h"
#include "assort/udp.h"

namespace assort {
namespace {

struct Globals {
  bool json = false;
  int guard_n = kDefaultEnumerationGuard;
  std::uint64_t guard_prices = kDefaultPricingGuard;

  Limits limits() const { return {guard_n, guard_prices}; }
};

// Input problems map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t DefaultSeed() {
  const char* env = std::getenv("ASSORT_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw UsageError("ASSORT_SEED must be a nonnegative integer");
  }
}

InstanceFile Load(const std::string& path, std::optional<InstanceKind> want) {
  InstanceFile file = InstanceFileFromJson(ReadJsonFile(path));
  if (want && file.kind != *want) {
    throw UsageError(path + ": expected a " +
                     std::string(InstanceKindName(*want)) + " instance, got " +
                     std::string(InstanceKindName(file.kind)));
  }
  return file;
}

// Human-readable rendering: one "path: value" line per leaf.
void Flatten(const Json& json, const std::string& prefix, std::ostream& out) {
  const bool leafy_array =
      json.is_array() &&
      std::all_of(json.begin(), json.end(),
                  [](const Json& v) { return v.is_primitive(); });
  if (json.is_object() && !json.empty()) {
    for (const auto& [key, value] : json.items()) {
      Flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (json.is_array() && !leafy_array) {
    for (std::size_t i = 0; i < json.size(); ++i) {
      Flatten(json[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ": " << json.dump() << "\n";
  }
}

void Emit(const Globals& globals, const Json& json) {
  if (globals.json) {
    std::cout << Dump(json);
  } else {
    Flatten(json, "", std::cout);
  }
}

void EmitOrWrite(const Globals& globals, const Json& json,
                 const std::string& output) {
  if (output.empty()) {
    std::cout << Dump(json);
  } else {
    WriteTextFile(output, Dump(json));
    if (!globals.json) std::cerr << "wrote " << output << "\n";
  }
}

Json ParseParams(const std::string& params_json,
                 const std::vector<std::string>& sets) {
  Json params = params_json.empty() ? Json::object() : ParseJson(params_json);
  if (!params.is_object()) throw UsageError("--params must be a JSON object");
  for (const std::string& entry : sets) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--set expects key=value, got \"" + entry + "\"");
    }
    const std::string key = entry.substr(0, eq);
    const std::string value = entry.substr(eq + 1);
    try {
      params[key] = ParseJson(value);
    } catch (const Error&) {
      params[key] = value;
    }
  }
  return params;
}

template <typename Udp>
Json UdpSolve(const Udp& instance, const Limits& limits) {
  const UniformPricingResult uniform = UniformPricing(instance);
  const PricingSolution best =
      BruteForcePricing(instance, std::nullopt, limits.pricing);
  Json prices = Json::array();
  for (const double p : best.prices) prices.push_back(PriceToJson(p));
  return {{"opt", best.revenue},
          {"opt_prices", prices},
          {"uniform_price", uniform.price},
          {"uniform_revenue", uniform.revenue},
          {"uniform_candidates", uniform.candidates},
          {"uniform_revenues", uniform.revenues},
          {"ratio", best.revenue > 0.0 ? uniform.revenue / best.revenue : 1.0},
          {"rho", ValuationRatio(instance)}};
}

template <typename Udp>
Json UdpReduce(const Udp& instance, const Limits& limits) {
  const UdpReduction reduction =
      ReduceToAssortment(instance, limits.enumeration);
  Json products = Json::array();
  for (const PricedItem& p : reduction.products) {
    products.push_back({{"item", p.item}, {"price", p.price}});
  }
  InstanceFile file;
  file.payload = ToJson(reduction.instance);
  return {{"instance", ToJson(file)},
          {"products", products},
          {"price_levels", reduction.price_levels}};
}

template <typename Udp>
Json UdpVerify(const Udp& instance, const Limits& limits) {
  Json reduction = CheckReduction(instance, limits);
  Json bounds = CheckUniformBounds(instance, limits);
  const bool passed =
      reduction["passed"].get<bool>() && bounds["passed"].get<bool>();
  return {{"passed", passed}, {"reduction", reduction}, {"bounds", bounds}};
}

int RunUdp(const Globals& globals, const std::string& action,
           const std::string& path, const std::string& output) {
  const InstanceFile file = Load(path, std::nullopt);
  Json result;
  if (file.kind == InstanceKind::kUdpMin) {
    const UdpMinInstance instance = UdpMinFromJson(file.payload);
    if (action == "solve") result = UdpSolve(instance, globals.limits());
    if (action == "reduce") result = UdpReduce(instance, globals.limits());
    if (action == "verify") result = UdpVerify(instance, globals.limits());
  } else if (file.kind == InstanceKind::kUdpRank) {
    const UdpRankInstance instance = UdpRankFromJson(file.payload);
    if (action == "solve") result = UdpSolve(instance, globals.limits());
    if (action == "reduce") result = UdpReduce(instance, globals.limits());
    if (action == "verify") result = UdpVerify(instance, globals.limits());
  } else {
    throw UsageError(path + ": not a udp_min or udp_rank instance");
  }
  if (action == "reduce" && !output.empty()) {
    WriteTextFile(output, Dump(result["instance"]));
  }
  Emit(globals, result);
  if (action == "verify" && !result["passed"].get<bool>()) return kExitFail;
  return kExitPass;
}

int RunStackelberg(const Globals& globals, const std::string& action,
                   const std::string& path, const std::string& output) {
  const StackelbergInstance instance =
      StackelbergFromJson(Load(path, InstanceKind::kStackelberg).payload);
  const Limits limits = globals.limits();
  Json result;
  if (action == "solve") {
    const StackelbergUniformResult uniform = UniformPricing(instance);
    const StackelbergSolution best =
        BruteForceStackelberg(instance, limits.pricing);
    Json prices = Json::array();
    for (const double p : best.prices) prices.push_back(PriceToJson(p));
    const FollowerOutcome outcome = RevenueOfPrices(instance, best.prices);
    result = {
        {"opt", best.revenue},
        {"opt_prices", prices},
        {"bought_blue", outcome.bought_blue},
        {"uniform_price", uniform.price},
        {"uniform_revenue", uniform.revenue},
        {"uniform_candidates", uniform.candidates},
        {"uniform_revenues", uniform.revenues},
        {"ratio", best.revenue > 0.0 ? uniform.revenue / best.revenue : 1.0}};
  } else if (action == "reduce") {
    const StackelbergReduction reduction =
        ReduceToAssortment(instance, limits.enumeration);
    Json products = Json::array();
    for (const PricedItem& p : reduction.products) {
      products.push_back({{"blue_element", p.item}, {"price", p.price}});
    }
    result = {{"instance", nullptr},
              {"products", products},
              {"price_levels", reduction.price_levels}};
    if (reduction.instance) {
      InstanceFile file;
      file.payload = ToJson(*reduction.instance);
      result["instance"] = ToJson(file);
      if (!output.empty()) WriteTextFile(output, Dump(result["instance"]));
    } else if (!output.empty()) {
      throw UsageError("no blue elements: the reduced instance is empty");
    }
  } else {
    Json reduction = CheckReduction(instance, limits);
    Json bounds = CheckUniformBounds(instance, limits);
    result = {{"passed",
               reduction["passed"].get<bool>() && bounds["passed"].get<bool>()},
              {"reduction", reduction},
              {"bounds", bounds}};
  }
  Emit(globals, result);
  if (action == "verify" && !result["passed"].get<bool>()) return kExitFail;
  return kExitPass;
}

MultiPeriodInstance LoadMultiPeriod(const std::string& path,
                                    std::optional<int> horizon,
                                    std::optional<int> capacity) {
  const InstanceFile file = Load(path, std::nullopt);
  if (file.kind == InstanceKind::kMultiPeriod) {
    MultiPeriodInstance loaded = MultiPeriodFromJson(file.payload);
    return MultiPeriodInstance(loaded.base(),
                               horizon.value_or(loaded.horizon()),
                               capacity.value_or(loaded.capacity()));
  }
  if (file.kind != InstanceKind::kAssortment) {
    throw UsageError(path + ": expected an assortment or multiperiod instance");
  }
  if (!horizon || !capacity) {
    throw UsageError("--T and --Q are required for an assortment instance");
  }
  return MultiPeriodInstance(AssortmentFromJson(file.payload), *horizon,
                             *capacity);
}

int Main(int argc, char** argv) {
  CLI::App app{"Assortment optimization under regular discrete choice models"};
  app.require_subcommand(1);
  Globals globals;
  app.add_flag("--json", globals.json, "Machine-readable JSON output");
  app.add_option("--guard-n", globals.guard_n,
                 "Largest product count for subset enumeration")
      ->check(CLI::Range(1, 64));
  app.add_option("--guard-prices", globals.guard_prices,
                 "Largest number of price assignments to enumerate");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  std::string gen_kind;
  std::string gen_family;
  std::string gen_params;
  std::vector<std::string> gen_sets;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_output;
  gen->add_option("kind", gen_kind,
                  "assortment | udp_min | udp_rank | stackelberg | "
                  "multiperiod")
      ->required();
  gen->add_option("family", gen_family,
                  "mnl | mixed_mnl | stochastic_preference | mallows | hfam | "
                  "tight | random | random_graph")
      ->required();
  gen->add_option("--params", gen_params, "Family parameters as JSON object");
  gen->add_option("--set", gen_sets, "Single parameter key=value");
  gen->add_option("--seed", gen_seed, "Seed (default: $ASSORT_SEED or 0)");
  gen->add_option("-o,--output", gen_output, "Write to file instead of stdout");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an assortment instance");
  std::string solve_path;
  std::string solve_method = "both";
  bool solve_bounds = false;
  solve->add_option("instance", solve_path)->required();
  solve->add_option("--method", solve_method)
      ->check(CLI::IsMember({"revord", "brute", "both"}));
  solve->add_flag("--bounds", solve_bounds, "Include the bound report");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Approximation bounds");
  std::string bounds_path;
  bool bounds_no_opt = false;
  bounds->add_option("instance", bounds_path)->required();
  bounds->add_flag("--no-opt", bounds_no_opt,
                   "Skip brute force; bound C is then omitted");

  // udp
  auto* udp = app.add_subcommand("udp", "Unit-demand envy-free pricing");
  std::string udp_action;
  std::string udp_path;
  std::string udp_output;
  udp->add_option("action", udp_action)
      ->required()
      ->check(CLI::IsMember({"solve", "reduce", "verify"}));
  udp->add_option("instance", udp_path)->required();
  udp->add_option("-o,--output", udp_output,
                  "reduce: also write the reduced instance file");

  // stackelberg
  auto* stack =
      app.add_subcommand("stackelberg", "Stackelberg matroid pricing");
  std::string stack_action;
  std::string stack_path;
  std::string stack_output;
  stack->add_option("action", stack_action)
      ->required()
      ->check(CLI::IsMember({"solve", "reduce", "verify"}));
  stack->add_option("instance", stack_path)->required();
  stack->add_option("-o,--output", stack_output,
                    "reduce: also write the reduced instance file");

  // multiperiod
  auto* multi = app.add_subcommand("multiperiod", "Multi-period capacity DP");
  std::string multi_path;
  std::optional<int> multi_t;
  std::optional<int> multi_q;
  bool multi_check = false;
  multi->add_option("instance", multi_path)->required();
  multi->add_option("--T", multi_t, "Horizon")->check(CLI::PositiveNumber);
  multi->add_option("--Q", multi_q, "Capacity")->check(CLI::PositiveNumber);
  multi->add_flag("--check", multi_check, "Verify monotonicity properties");

  // suite
  auto* suite = app.add_subcommand("suite", "Batch verification (JSON lines)");
  std::vector<std::string> suite_patterns;
  std::vector<std::string> suite_checks;
  std::string suite_report_dir;
  suite->add_option("files", suite_patterns, "Instance files or glob patterns");
  suite
      ->add_option("--checks", suite_checks,
                   "axioms, guarantees, reductions, monotonicity (default all)")
      ->delimiter(',');
  suite->add_option("--report-dir", suite_report_dir,
                    "Also write one report file per instance");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  const Limits limits = globals.limits();
  if (gen->parsed()) {
    const InstanceFile file = Generate(
        InstanceKindFromName(gen_kind), gen_family,
        ParseParams(gen_params, gen_sets), gen_seed.value_or(DefaultSeed()));
    EmitOrWrite(globals, ToJson(file), gen_output);
    return kExitPass;
  }
  if (solve->parsed()) {
    const AssortmentInstance instance =
        AssortmentFromJson(Load(solve_path, InstanceKind::kAssortment).payload);
    SolveOptions options;
    options.revenue_ordered = solve_method != "brute";
    options.brute_force = solve_method != "revord";
    options.bounds = solve_bounds;
    Emit(globals, SolveReport(instance, options, limits));
    return kExitPass;
  }
  if (bounds->parsed()) {
    const AssortmentInstance instance = AssortmentFromJson(
        Load(bounds_path, InstanceKind::kAssortment).payload);
    std::optional<Subset> optimal;
    if (!bounds_no_opt) {
      optimal = BruteForceOptimum(instance, limits.enumeration).assortment;
    }
    Emit(globals, ToJson(ComputeBounds(instance, optimal)));
    return kExitPass;
  }
  if (udp->parsed()) return RunUdp(globals, udp_action, udp_path, udp_output);
  if (stack->parsed()) {
    return RunStackelberg(globals, stack_action, stack_path, stack_output);
  }
  if (multi->parsed()) {
    const MultiPeriodInstance instance =
        LoadMultiPeriod(multi_path, multi_t, multi_q);
    const DpTable table = SolveDp(instance, true, limits.enumeration);
    Json result = {{"table", ToJson(table)}};
    bool passed = true;
    if (multi_check) {
      result["checks"] = CheckMonotonicity(instance, limits);
      passed = result["checks"]["passed"].get<bool>();
    }
    if (!table.warning.empty()) std::cerr << table.warning << "\n";
    Emit(globals, result);
    return passed ? kExitPass : kExitFail;
  }
  if (suite->parsed()) {
    SuiteOptions options;
    options.limits = limits;
    if (!suite_checks.empty()) {
      options.checks.clear();
      for (const std::string& name : suite_checks) {
        options.checks.push_back(CheckFromName(name));
      }
    }
    if (!suite_report_dir.empty()) options.report_dir = suite_report_dir;
    const SuiteResult result =
        RunSuite(ExpandPatterns(suite_patterns), options);
    for (const Json& line : result.lines) std::cout << line.dump() << "\n";
    std::cout << Json{{"summary", result.summary}}.dump() << "\n";
    return result.exit_code;
  }
  return kExitInputError;
}

}  // namespace
}  // namespace assort

int main(int argc, char** argv) {
  try {
    return assort::Main(argc, argv);
  } catch (const assort::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const assort::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return assort::kExitInputError;
}
