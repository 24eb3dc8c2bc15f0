#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "om/dispatch.hpp"

namespace om {

/// Backend choice plus the worker fan-out used by enumeration and sweeps.
struct SolverConfig {
  std::string backend = "highs";
  mip::SolveOptions options;
  int threads = 1;

  std::unique_ptr<mip::Solver> make() const { return mip::make_solver(backend); }
};

enum class WorstCaseMethod : std::uint8_t { DualMilp, Enumerate };

WorstCaseMethod parse_worst_case_method(const std::string&);
std::string to_string(WorstCaseMethod);

struct WorstCaseOptions {
  WorstCaseMethod method = WorstCaseMethod::DualMilp;
  SolverConfig solver;
  ModelOptions model;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

struct WorstCaseResult {
  Realization realization;
  double ope_cost = 0;          // inner objective at the worst point (incl. slack penalty)
  OperationSchedule schedule;   // dispatch under the worst point
  double milp_objective = 0;    // dual reformulation objective (DualMilp only)
  std::uint64_t evaluated = 0;  // points scanned (Enumerate only)
};

/// Max over the budget sets of the inner dispatch cost for a fixed plan.
/// DualMilp dualizes the inner LP and linearizes the flag-dual products with
/// per-constraint big-M bounds; Enumerate scans every realization (serial
/// when solver.threads == 1, OpenMP fan-out otherwise) and is the reference
/// oracle.
WorstCaseResult worst_case(const InvestmentPlan& plan, const DeviceCatalog& cat,
                           const ForecastSet& forecasts, const TimeGrid& grid,
                           const EconomicParams& econ, const UncertaintyConfig& uconfig,
                           const WorstCaseOptions& opts);

/// The dual MILP for a prepared template; exposed for inspection and tests.
struct WorstCaseMilp {
  mip::LinearModel model;
  std::vector<int> flag_cols;  // per template flag id; -1 when the flag cannot matter
};
WorstCaseMilp build_worst_case_milp(const DispatchTemplate&, const TimeGrid&,
                                    const EconomicParams&, const UncertaintyConfig&,
                                    const DeviceCatalog&, double big_m_scale = 1.0);

}  // namespace om
