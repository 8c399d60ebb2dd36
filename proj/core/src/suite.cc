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

#include "assort/suite.h"

#include <glob.h>

#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "assort/matroid.h"

namespace assort {
namespace {

constexpr int kTieBreakTrials = 50;
constexpr int kMaxExhaustiveMatroid = 16;

Json Nullable(const std::optional<bool>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json ToJson(const AxiomVerdict& verdict) {
  Json out = {{"passed", verdict.passed}};
  if (verdict.witness) {
    const AxiomWitness& w = *verdict.witness;
    out["witness"] = {{"x", w.product},
                      {"S", SubsetToJson(w.smaller)},
                      {"S_prime", SubsetToJson(w.larger)},
                      {"value_S", w.smaller_value},
                      {"value_S_prime", w.larger_value}};
  }
  return out;
}

Json PricesToJson(const std::vector<double>& prices) {
  Json out = Json::array();
  for (const double p : prices) out.push_back(PriceToJson(p));
  return out;
}

bool ListsNearlyEqual(const std::vector<double>& a,
                      const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!NearlyEqualRelative(a[i], b[i])) return false;
  }
  return true;
}

void Note(Violations* violations, std::string line) {
  if (violations != nullptr) violations->push_back(std::move(line));
}

void NoteAxioms(const AxiomReport& report, std::string_view prefix,
                Violations* violations) {
  const std::pair<const char*, const AxiomVerdict*> verdicts[] = {
      {"nonnegative", &report.nonnegative},
      {"offered_only", &report.offered_only},
      {"at_most_one", &report.at_most_one},
      {"regularity", &report.regularity},
  };
  for (const auto& [name, verdict] : verdicts) {
    if (verdict->passed) continue;
    std::string line = std::string(prefix) + "." + name + " violated";
    if (verdict->witness) line += " at " + verdict->witness->ToString();
    Note(violations, std::move(line));
  }
}

template <typename Udp>
Json CheckUdpReduction(const Udp& instance, const Limits& limits,
                       Violations* violations) {
  const UdpReduction reduction =
      ReduceToAssortment(instance, limits.enumeration);
  const PricingSolution pricing =
      BruteForcePricing(instance, std::nullopt, limits.pricing);
  const AssortmentSolution opt =
      BruteForceOptimum(reduction.instance, limits.enumeration);
  const double induced =
      SimulatePurchases(instance, reduction.PricesOf(opt.assortment)).revenue;
  const AxiomReport axioms =
      CheckAxioms(reduction.instance.model(), limits.enumeration);
  const UniformPricingResult uniform = UniformPricing(instance);
  const RevenueOrderedResult revord = RevenueOrdered(reduction.instance);

  const bool opt_equal = NearlyEqualRelative(opt.revenue, pricing.revenue);
  const bool induced_equal = NearlyEqualRelative(induced, opt.revenue);
  const bool lists_equal = ListsNearlyEqual(uniform.revenues, revord.revenues);
  if (!opt_equal) {
    Note(violations,
         "reduction: OPT(reduced) = " + std::to_string(opt.revenue) +
             " but OPT(pricing) = " + std::to_string(pricing.revenue));
  }
  if (!induced_equal) {
    Note(violations,
         "reduction: prices induced by S* earn " + std::to_string(induced));
  }
  if (!lists_equal) {
    Note(violations,
         "reduction: uniform pricing revenues differ from revenue-ordered");
  }
  NoteAxioms(axioms, "reduction.axioms", violations);
  return {{"passed",
           opt_equal && induced_equal && lists_equal && axioms.AllPassed()},
          {"products", reduction.instance.num_products()},
          {"opt_pricing", pricing.revenue},
          {"opt_prices", PricesToJson(pricing.prices)},
          {"opt_reduced", opt.revenue},
          {"opt_reduced_assortment", SubsetToJson(opt.assortment)},
          {"opt_equal", opt_equal},
          {"induced_revenue", induced},
          {"uniform_revenues", uniform.revenues},
          {"revord_revenues", revord.revenues},
          {"uniform_equals_revord", lists_equal},
          {"reduced_axioms", ToJson(axioms)}};
}

Json CheckAgainst(double uniform, double opt, double parameter,
                  std::string_view name, Violations* violations) {
  const double factor = 1.0 / (1.0 + std::log(parameter));
  const bool holds = GreaterOrNearlyEqual(uniform, factor * opt);
  if (!holds) {
    Note(violations, "bounds: uniform " + std::to_string(uniform) +
                         " < OPT/(1 + ln " + std::string(name) +
                         ") = " + std::to_string(factor * opt));
  }
  return {{"parameter", parameter}, {"factor", factor}, {"holds", holds}};
}

template <typename Udp>
Json CheckUdpBounds(const Udp& instance, const Limits& limits,
                    Violations* violations) {
  const PricingSolution pricing =
      BruteForcePricing(instance, std::nullopt, limits.pricing);
  const UniformPricingResult uniform = UniformPricing(instance);
  const Json rho = CheckAgainst(uniform.revenue, pricing.revenue,
                                ValuationRatio(instance), "rho", violations);
  const Json m = CheckAgainst(uniform.revenue, pricing.revenue,
                              instance.num_consumers(), "m", violations);
  return {{"passed", rho["holds"].get<bool>() && m["holds"].get<bool>()},
          {"opt", pricing.revenue},
          {"uniform_price", uniform.price},
          {"uniform_revenue", uniform.revenue},
          {"ratio",
           pricing.revenue > 0.0 ? uniform.revenue / pricing.revenue : 1.0},
          {"rho", rho},
          {"m", m}};
}

double Millis(std::chrono::steady_clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

}  // namespace

Json SubsetToJson(Subset s) { return Elements(s); }

Json ToJson(const AxiomReport& report) {
  return {{"passed", report.AllPassed()},
          {"nonnegative", ToJson(report.nonnegative)},
          {"offered_only", ToJson(report.offered_only)},
          {"at_most_one", ToJson(report.at_most_one)},
          {"regularity", ToJson(report.regularity)}};
}

Json ToJson(const SubmodularityReport& report) {
  Json out = {{"passed", report.passed}, {"max_gap", report.max_gap}};
  if (report.witness) {
    const SubmodularityWitness& w = *report.witness;
    out["witness"] = {{"S", SubsetToJson(w.smaller)},
                      {"S_prime", SubsetToJson(w.larger)},
                      {"x", w.product},
                      {"gain_S", w.smaller_gain},
                      {"gain_S_prime", w.larger_gain}};
  }
  return out;
}

Json ToJson(const BoundReport& report) {
  Json out = {
      {"k", report.k},
      {"A", report.bound_a},
      {"sum_B", report.sum_b},
      {"B_exact", report.bound_b_exact},
      {"rho", report.rho},
      {"B_log", report.bound_b_log},
      {"C_exact", nullptr},
      {"C_log", nullptr},
      {"nu", nullptr},
      {"lambda_tilde", report.lambda_tilde},
      {"nu_at_most_lambda_tilde", Nullable(report.nu_at_most_lambda_tilde)},
      {"largest", report.largest}};
  if (report.c) {
    out["C_exact"] = report.c->exact;
    out["C_log"] = report.c->log;
    out["nu"] = report.c->nu;
    out["sum_C"] = report.c->sum;
    out["N"] = report.c->n_values;
    out["ell"] = report.c->ell;
  }
  return out;
}

Json ToJson(const GuaranteeReport& report) {
  return {{"passed", report.passed()},
          {"opt", report.opt.revenue},
          {"opt_assortment", SubsetToJson(report.opt.assortment)},
          {"revord", report.revord.revenue},
          {"revord_assortment", SubsetToJson(report.revord.assortment)},
          {"ratio", report.ratio},
          {"bounds", ToJson(report.bounds)},
          {"holds",
           {{"A", report.holds_a},
            {"B_exact", report.holds_b_exact},
            {"B_log", report.holds_b_log},
            {"C_exact", Nullable(report.holds_c_exact)},
            {"C_log", Nullable(report.holds_c_log)},
            {"technical", report.holds_technical}}},
          {"technical_violation_level", report.technical_violation_level}};
}

Json ToJson(const MonotonicityReport& report) {
  Json cells = Json::array();
  for (const CellViolation& v : report.violations) {
    cells.push_back({{"t", v.t}, {"q", v.q}, {"property", v.property}});
  }
  return {{"passed", report.passed}, {"violations", cells}};
}

Json ToJson(const DpTable& table) {
  Json out = {{"T", table.horizon},
              {"Q", table.capacity},
              {"k", table.levels},
              {"J", table.value},
              {"J_level", table.level_value},
              {"lstar", table.lstar},
              {"regular", table.regular}};
  if (!table.warning.empty()) out["warning"] = table.warning;
  return out;
}

Json SolveReport(const AssortmentInstance& instance,
                 const SolveOptions& options, const Limits& limits) {
  Json out = {{"opt", nullptr},
              {"revord", nullptr},
              {"ratio", nullptr},
              {"bounds", nullptr}};
  std::optional<AssortmentSolution> opt;
  if (options.brute_force) {
    opt = BruteForceOptimum(instance, limits.enumeration);
    out["opt"] = opt->revenue;
    out["opt_assortment"] = SubsetToJson(opt->assortment);
  }
  if (options.revenue_ordered) {
    const RevenueOrderedResult result = RevenueOrdered(instance);
    out["revord"] = result.best.revenue;
    out["revord_assortment"] = SubsetToJson(result.best.assortment);
    out["revord_level"] = result.best_level;
    Json candidates = Json::array();
    for (std::size_t i = 0; i < result.levels.size(); ++i) {
      candidates.push_back({{"threshold", result.levels[i]},
                            {"assortment", SubsetToJson(result.candidates[i])},
                            {"revenue", result.revenues[i]}});
    }
    out["candidates"] = candidates;
    if (opt) {
      out["ratio"] =
          opt->revenue > 0.0 ? result.best.revenue / opt->revenue : 1.0;
    }
  }
  if (options.bounds) {
    std::optional<Subset> optimal;
    if (opt) optimal = opt->assortment;
    out["bounds"] = ToJson(ComputeBounds(instance, optimal));
  }
  return out;
}

Json CheckModelAxioms(const ChoiceModel& model, const Limits& limits,
                      Violations* violations) {
  const AxiomReport axioms = CheckAxioms(model, limits.enumeration);
  const AxiomVerdict purchase =
      CheckPurchaseMonotonicity(model, limits.enumeration);
  NoteAxioms(axioms, "axioms", violations);
  if (!purchase.passed) {
    std::string line = "axioms.purchase_monotonicity violated";
    if (purchase.witness) line += " at " + purchase.witness->ToString();
    Note(violations, std::move(line));
  }
  Json out = ToJson(axioms);
  out["purchase_monotonicity"] = ToJson(purchase);
  out["passed"] = axioms.AllPassed() && purchase.passed;
  return out;
}

Json CheckGuarantees(const AssortmentInstance& instance, const Limits& limits,
                     Violations* violations) {
  try {
    const GuaranteeReport report =
        VerifyGuarantee(instance, limits.enumeration);
    if (!report.passed()) {
      Note(violations,
           "guarantees: revord = " + std::to_string(report.revord.revenue) +
               " below a bound times OPT = " +
               std::to_string(report.opt.revenue));
    }
    return ToJson(report);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRegularityViolation) throw;
    Note(violations, std::string("guarantees: ") + e.what());
    return {{"passed", false}, {"reason", e.what()}};
  }
}

Json CheckReduction(const UdpMinInstance& instance, const Limits& limits,
                    Violations* violations) {
  return CheckUdpReduction(instance, limits, violations);
}

Json CheckReduction(const UdpRankInstance& instance, const Limits& limits,
                    Violations* violations) {
  return CheckUdpReduction(instance, limits, violations);
}

Json CheckReduction(const StackelbergInstance& instance, const Limits& limits,
                    Violations* violations) {
  const StackelbergReduction reduction =
      ReduceToAssortment(instance, limits.enumeration);
  const StackelbergSolution best =
      BruteForceStackelberg(instance, limits.pricing);
  const StackelbergUniformResult uniform = UniformPricing(instance);
  Json out = {{"opt_stackelberg", best.revenue},
              {"opt_prices", PricesToJson(best.prices)},
              {"uniform_revenues", uniform.revenues}};
  bool passed = true;

  double opt_reduced = 0.0;
  std::vector<double> revord_revenues(uniform.revenues.size(), 0.0);
  if (reduction.instance) {
    const AssortmentSolution opt =
        BruteForceOptimum(*reduction.instance, limits.enumeration);
    opt_reduced = opt.revenue;
    out["opt_reduced_assortment"] = SubsetToJson(opt.assortment);
    revord_revenues = RevenueOrdered(*reduction.instance).revenues;
    const AxiomReport axioms =
        CheckAxioms(reduction.instance->model(), limits.enumeration);
    NoteAxioms(axioms, "reduction.axioms", violations);
    out["reduced_axioms"] = ToJson(axioms);
    passed = passed && axioms.AllPassed();
  }
  const bool opt_equal = NearlyEqualRelative(opt_reduced, best.revenue);
  const bool lists_equal = ListsNearlyEqual(uniform.revenues, revord_revenues);
  out["opt_reduced"] = opt_reduced;
  out["opt_equal"] = opt_equal;
  out["revord_revenues"] = revord_revenues;
  out["uniform_equals_revord"] = lists_equal;
  if (!opt_equal) {
    Note(violations,
         "reduction: OPT(reduced) = " + std::to_string(opt_reduced) +
             " but OPT(stackelberg) = " + std::to_string(best.revenue));
  }
  if (!lists_equal) {
    Note(violations,
         "reduction: uniform pricing revenues differ from revenue-ordered");
  }
  passed = passed && opt_equal && lists_equal;

  const auto* graph = dynamic_cast<const GraphicMatroid*>(&instance.matroid());
  if (graph != nullptr &&
      reduction.auxiliary->ground_set_size() <= kMaxExhaustiveMatroid) {
    const GraphicMatroid copies = ParallelCopiesGraph(*graph, instance);
    const int size = reduction.auxiliary->ground_set_size();
    bool same = copies.ground_set_size() == size;
    for (std::uint64_t mask = 0; same && mask < (std::uint64_t{1} << size);
         ++mask) {
      std::vector<int> elements;
      for (int e = 0; e < size; ++e) {
        if ((mask >> e) & 1) elements.push_back(e);
      }
      same = reduction.auxiliary->IsIndependent(elements) ==
             copies.IsIndependent(elements);
    }
    out["auxiliary_equals_parallel_copies"] = same;
    if (!same) {
      Note(violations, "reduction: M' differs from the parallel-copies graph");
    }
    passed = passed && same;
  }

  std::mt19937_64 rng(1);
  const TieBreakReport tie =
      CheckTieBreakIndependence(instance, best.prices, kTieBreakTrials, rng);
  out["tie_break_independent"] = tie.passed;
  if (!tie.passed) {
    Note(violations, "reduction: follower revenue depends on the ordering");
  }
  out["passed"] = passed && tie.passed;
  return out;
}

Json CheckUniformBounds(const UdpMinInstance& instance, const Limits& limits,
                        Violations* violations) {
  return CheckUdpBounds(instance, limits, violations);
}

Json CheckUniformBounds(const UdpRankInstance& instance, const Limits& limits,
                        Violations* violations) {
  return CheckUdpBounds(instance, limits, violations);
}

Json CheckUniformBounds(const StackelbergInstance& instance,
                        const Limits& limits, Violations* violations) {
  const StackelbergSolution best =
      BruteForceStackelberg(instance, limits.pricing);
  const StackelbergUniformResult uniform = UniformPricing(instance);
  const std::vector<double>& levels = instance.cost_levels();
  const Json rho =
      CheckAgainst(uniform.revenue, best.revenue,
                   levels.back() / levels.front(), "rho", violations);
  return {{"passed", rho["holds"].get<bool>()},
          {"opt", best.revenue},
          {"uniform_price", uniform.price},
          {"uniform_revenue", uniform.revenue},
          {"ratio", best.revenue > 0.0 ? uniform.revenue / best.revenue : 1.0},
          {"rho", rho}};
}

Json CheckMonotonicity(const MultiPeriodInstance& instance,
                       const Limits& limits, Violations* violations) {
  const DpTable table = SolveDp(instance, true, limits.enumeration);
  const std::pair<const char*, MonotonicityReport> reports[] = {
      {"nesting", CheckNestingMonotonicity(table)},
      {"marginal_value", CheckMarginalValue(table)},
      {"lstar_agreement", CheckLStarAgreement(instance, table)},
  };
  Json out = {{"regular", table.regular}};
  bool passed = true;
  for (const auto& [name, report] : reports) {
    out[name] = ToJson(report);
    passed = passed && report.passed;
    for (const CellViolation& v : report.violations) {
      Note(violations, std::string("monotonicity: ") + v.property +
                           " fails at t=" + std::to_string(v.t) +
                           ", q=" + std::to_string(v.q));
    }
  }
  if (!table.warning.empty()) out["warning"] = table.warning;
  out["J_TQ"] = table.value[table.horizon][table.capacity];
  out["passed"] = passed;
  return out;
}

std::string_view CheckName(Check check) {
  switch (check) {
    case Check::kAxioms:
      return "axioms";
    case Check::kGuarantees:
      return "guarantees";
    case Check::kReductions:
      return "reductions";
    case Check::kMonotonicity:
      return "monotonicity";
  }
  return "?";
}

Check CheckFromName(std::string_view name) {
  for (const Check c : AllChecks()) {
    if (CheckName(c) == name) return c;
  }
  throw Error(ErrorCode::kInvalidParams,
              "unknown check \"" + std::string(name) + "\"");
}

std::vector<Check> AllChecks() {
  return {Check::kAxioms, Check::kGuarantees, Check::kReductions,
          Check::kMonotonicity};
}

Json RunChecks(const InstanceFile& file, const SuiteOptions& options,
               Violations* violations) {
  const Limits& limits = options.limits;
  using Clock = std::chrono::steady_clock;
  Json checks = Json::object();
  Json timings = Json::object();

  // Each entry runs only when its check is selected.
  std::vector<std::pair<Check, std::function<Json()>>> plan;
  auto start = Clock::now();
  switch (file.kind) {
    case InstanceKind::kAssortment: {
      auto instance = std::make_shared<AssortmentInstance>(
          AssortmentFromJson(file.payload));
      plan.emplace_back(Check::kAxioms, [=] {
        return CheckModelAxioms(instance->model(), limits, violations);
      });
      plan.emplace_back(Check::kGuarantees, [=] {
        return CheckGuarantees(*instance, limits, violations);
      });
      break;
    }
    case InstanceKind::kMultiPeriod: {
      auto instance = std::make_shared<MultiPeriodInstance>(
          MultiPeriodFromJson(file.payload));
      plan.emplace_back(Check::kAxioms, [=] {
        return CheckModelAxioms(instance->base().model(), limits, violations);
      });
      plan.emplace_back(Check::kGuarantees, [=] {
        return CheckGuarantees(instance->base(), limits, violations);
      });
      plan.emplace_back(Check::kMonotonicity, [=] {
        return CheckMonotonicity(*instance, limits, violations);
      });
      break;
    }
    case InstanceKind::kUdpMin: {
      auto instance =
          std::make_shared<UdpMinInstance>(UdpMinFromJson(file.payload));
      plan.emplace_back(Check::kReductions, [=] {
        return CheckReduction(*instance, limits, violations);
      });
      plan.emplace_back(Check::kGuarantees, [=] {
        return CheckUniformBounds(*instance, limits, violations);
      });
      break;
    }
    case InstanceKind::kUdpRank: {
      auto instance =
          std::make_shared<UdpRankInstance>(UdpRankFromJson(file.payload));
      plan.emplace_back(Check::kReductions, [=] {
        return CheckReduction(*instance, limits, violations);
      });
      plan.emplace_back(Check::kGuarantees, [=] {
        return CheckUniformBounds(*instance, limits, violations);
      });
      break;
    }
    case InstanceKind::kStackelberg: {
      auto instance = std::make_shared<StackelbergInstance>(
          StackelbergFromJson(file.payload));
      plan.emplace_back(Check::kReductions, [=] {
        return CheckReduction(*instance, limits, violations);
      });
      plan.emplace_back(Check::kGuarantees, [=] {
        return CheckUniformBounds(*instance, limits, violations);
      });
      break;
    }
  }
  timings["load"] = Millis(Clock::now() - start);

  bool passed = true;
  bool errored = false;
  for (const Check selected : options.checks) {
    for (const auto& [check, run] : plan) {
      if (check != selected) continue;
      const std::string name(CheckName(check));
      start = Clock::now();
      try {
        checks[name] = run();
        passed = passed && checks[name]["passed"].get<bool>();
      } catch (const std::exception& e) {
        checks[name] = {{"passed", false}, {"error", e.what()}};
        errored = true;
        Note(violations, name + ": error: " + e.what());
      }
      timings[name] = Millis(Clock::now() - start);
    }
  }
  return {{"passed", passed && !errored},
          {"errored", errored},
          {"checks", checks},
          {"timings_ms", timings}};
}

SuiteResult RunSuite(const std::vector<std::filesystem::path>& files,
                     const SuiteOptions& options) {
  SuiteResult result;
  if (options.report_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*options.report_dir, ec);
    if (ec) {
      throw Error(ErrorCode::kInvalidParams,
                  "cannot create " + options.report_dir->string());
    }
  }
  int passed = 0;
  int failed = 0;
  int errors = 0;
  for (const std::filesystem::path& path : files) {
    Json line = {{"file", path.string()}};
    Violations violations;
    std::string status;
    try {
      const InstanceFile file = InstanceFileFromJson(ReadJsonFile(path));
      line["digest"] = Digest(Dump(ToJson(file)));
      line["kind"] = InstanceKindName(file.kind);
      if (file.seed) line["seed"] = *file.seed;
      if (!file.family.empty()) line["family"] = file.family;
      if (!file.params.empty()) line["params"] = file.params;
      Json outcome = RunChecks(file, options, &violations);
      status = outcome["errored"].get<bool>()  ? "error"
               : outcome["passed"].get<bool>() ? "pass"
                                               : "fail";
      line["checks"] = std::move(outcome["checks"]);
      line["timings_ms"] = std::move(outcome["timings_ms"]);
    } catch (const std::exception& e) {
      status = "error";
      line["error"] = e.what();
    }
    line["status"] = status;
    line["violations"] = violations;
    if (status == "pass") {
      ++passed;
    } else if (status == "fail") {
      ++failed;
    } else {
      ++errors;
    }
    if (options.report_dir) {
      WriteTextFile(
          *options.report_dir / (path.stem().string() + ".report.json"),
          Dump(line));
    }
    result.lines.push_back(std::move(line));
  }
  result.summary = {{"files", static_cast<int>(files.size())},
                    {"passed", passed},
                    {"failed", failed},
                    {"errors", errors}};
  result.exit_code = failed > 0   ? kExitFail
                     : errors > 0 ? kExitInputError
                                  : kExitPass;
  return result;
}

std::vector<std::filesystem::path> ExpandPatterns(
    const std::vector<std::string>& patterns) {
  std::vector<std::filesystem::path> out;
  for (const std::string& pattern : patterns) {
    glob_t matches{};
    const int rc = glob(pattern.c_str(), 0, nullptr, &matches);
    if (rc == 0) {
      for (std::size_t i = 0; i < matches.gl_pathc; ++i) {
        out.emplace_back(matches.gl_pathv[i]);
      }
    } else {
      out.emplace_back(pattern);
    }
    globfree(&matches);
  }
  return out;
}

}  // namespace assort
