#pragma once

#include <utility>
#include <vector>

#include "om/dpm.hpp"
#include "om/worst_case.hpp"

namespace om {

struct CcgOptions {
  double eps = 1e-4;  // relative UB-LB gap at which the loop stops
  int max_iter = 50;
  WorstCaseMethod method = WorstCaseMethod::DualMilp;
  SolverConfig solver;
  ModelOptions model;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

enum class CcgStatus : std::uint8_t { Converged, IterationLimit, Stalled };

std::string to_string(CcgStatus);

struct CcgIterate {
  int iter = 0;
  double lb = 0, ub = 0, gap = 0;
  double worst_cost = 0;  // subproblem value at this iterate's plan
  double seconds = 0;
};

struct CcgState {
  std::vector<CcgIterate> trace;
  double lb = 0, ub = 0, gap = 0;
  int iterations = 0;
  CcgStatus status = CcgStatus::IterationLimit;
};

struct CcgResult {
  InvestmentPlan plan;  // incumbent achieving the final UB
  CcgState state;
  Realization worst_realization;      // worst case of the incumbent plan
  OperationSchedule worst_schedule;   // dispatch under that worst case
  double cost_inv = 0;
  double worst_ope_cost = 0;  // includes any water-slack penalty
  double total = 0;
};

/// First-stage problem over the pooled scenarios: minimize investment plus
/// an epigraph of the recourse cost of every pooled realization. Returns the
/// plan and the bound (full objective).
std::pair<InvestmentPlan, double> master_solve(const DeviceCatalog&, const ForecastSet&,
                                               const TimeGrid&, const EconomicParams&,
                                               const UncertaintyConfig&,
                                               const std::vector<Realization>& pool,
                                               mip::Solver&, const mip::SolveOptions& = {},
                                               const ModelOptions& = {});

/// Column-and-constraint generation on the two-stage robust model.
CcgResult ccg_solve(const DeviceCatalog&, const ForecastSet&, const TimeGrid&,
                    const EconomicParams&, const UncertaintyConfig&, const CcgOptions& = {});

}  // namespace om
