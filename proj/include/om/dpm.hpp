#pragma once

#include "om/dispatch.hpp"

namespace om {

/// The one-shot planning model: binaries per candidate plus one nominal
/// operation block, minimizing discounted investment plus operation cost.
struct DpmModel {
  mip::LinearModel model;
  XCols x;
  OperationVars ops;
};

DpmModel build_dpm(const DeviceCatalog&, const ForecastSet&, const TimeGrid&,
                   const EconomicParams&, int delta_t, const ModelOptions& = {});

struct PlanResult {
  InvestmentPlan plan;
  OperationSchedule schedule;
  double cost_inv = 0;
  double cost_ope = 0;
  double total = 0;
  mip::SolveOutcome outcome;
};

PlanResult solve_dpm(const DeviceCatalog&, const ForecastSet&, const TimeGrid&,
                     const EconomicParams&, int delta_t, mip::Solver&,
                     const mip::SolveOptions& = {}, const ModelOptions& = {});

/// Shared adequacy/feasibility preflight used by both planners.
void check_structural_feasibility(const DeviceCatalog&, const ForecastSet&, const TimeGrid&,
                                  const ModelOptions&);

/// Investment columns with discounted cost coefficients plus the adequacy
/// row; the SDU constant lands on the objective offset.
XCols add_investment_columns(mip::LinearModel&, const DeviceCatalog&, const TimeGrid&,
                             const EconomicParams&, double max_load, const ModelOptions&);

InvestmentPlan extract_plan(const XCols&, const std::vector<double>& col_value);

}  // namespace om
