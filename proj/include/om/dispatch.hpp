#pragma once

#include <optional>
#include <string>
#include <vector>

#include "om/catalog.hpp"
#include "om/costs.hpp"
#include "om/grid.hpp"
#include "om/mip/model.hpp"
#include "om/mip/solver.hpp"
#include "om/schedule.hpp"
#include "om/tidal.hpp"
#include "om/uncertainty.hpp"

namespace om {

struct ModelOptions {
  // Bound each NDU by its hourly availability forecast. Switching this off
  // reproduces the looser rated-power bound.
  bool ndu_availability_bound = true;
  // Capacity-adequacy constraint on installed generation; off is a debug aid.
  bool enforce_adequacy = true;
  // Cap the nominal tidal profile at each unit's rated power.
  bool cap_tpg_at_rated = true;
};

/// Numeric per-slot data consumed by the operation constraints: realized
/// load, the effective NDU bound and the effective TPG bound per unit.
struct RealizedInputs {
  Series3 load_mw;
  std::vector<Series3> ndu_cap_mw;
  std::vector<Series3> tpg_cap_mw;
};

/// Inputs at the forecast (zero-deviation) point for a given tidal delay.
RealizedInputs nominal_inputs(const ForecastSet&, const DeviceCatalog&, int delta_t,
                              const EconomicParams&, const ModelOptions& = {});

/// Inputs under a concrete realization of the budget sets.
RealizedInputs realized_inputs(const ForecastSet&, const DeviceCatalog&,
                               const UncertaintyConfig&, const Realization&,
                               const EconomicParams&, const ModelOptions& = {});

/// Column indices of one operation block (constraint set (6)-(18)) inside a
/// model. Device families are indexed [unit][slot] with slot = (y*D + d)*H + h.
struct OperationVars {
  int slots = 0;
  std::vector<std::vector<int>> du, ndu, tpg, ch, dch, soc;
  std::vector<int> water, shed;
  std::vector<int> slack;                          // per (y*D + d); empty if no slack
  std::vector<std::pair<int, double>> cost_terms;  // dispatch objective of this block
  std::vector<int> balance_rows;                   // per slot

  int slot(const TimeGrid& g, int y, int d, int h) const {
    return (y * g.days + d) * g.hours_per_day + h;
  }
};

/// Candidate-investment columns.
struct XCols {
  std::vector<int> du, ndu, tpg, ess;
};

/// Emit constraints (6)-(18) for one copy of the operation problem. When
/// `x` is given the capacity caps are rows linked to the binaries; when
/// `fixed` is given they collapse into variable bounds. Cost terms are
/// returned and, if `costs_in_objective`, also placed on the columns.
OperationVars add_operation_block(mip::LinearModel& m, const DeviceCatalog& cat,
                                  const TimeGrid& g, const EconomicParams& econ,
                                  const RealizedInputs& data, const XCols* x,
                                  const InvestmentPlan* fixed, bool water_slack,
                                  bool costs_in_objective, const std::string& tag);

/// Fixed-plan inner dispatch LP, annotated with how every right-hand side
/// and bound moves with the uncertainty flags. The annotations drive both
/// the enumeration oracle (patch + re-solve) and the dual reformulation.
struct DispatchTemplate {
  mip::LinearModel model;  // objective: operation cost + water-slack penalty
  OperationVars vars;
  TimeGrid grid;
  InvestmentPlan plan;
  double beta_load = 0, beta_tpg = 0;
  int num_tpg_units = 0;

  struct UTerm {
    int u = 0;  // index in the flag layout below
    double coef = 0;
  };
  // flag layout: [0,S) load up, [S,2S) load down, then per-unit TPG up
  // blocks, then per-unit TPG down blocks, with S = H*D*Y.
  int u_load_up(int s) const { return s; }
  int u_load_down(int s) const { return vars.slots + s; }
  int u_tpg_up(int k, int s) const { return 2 * vars.slots + k * vars.slots + s; }
  int u_tpg_down(int k, int s) const {
    return 2 * vars.slots + (num_tpg_units + k) * vars.slots + s;
  }
  int u_total() const { return 2 * vars.slots + 2 * num_tpg_units * vars.slots; }

  std::vector<std::vector<UTerm>> row_rhs_terms;  // per row; empty = fixed rhs
  std::vector<std::vector<UTerm>> col_ub_terms;   // per col; empty = fixed bound

  std::vector<double> flag_values(const Realization&) const;
};

DispatchTemplate make_dispatch_template(const InvestmentPlan& plan, const DeviceCatalog& cat,
                                        const ForecastSet& forecasts, const TimeGrid& g,
                                        const EconomicParams& econ, const UncertaintyConfig& u,
                                        const ModelOptions& = {});

/// The template's LP with bounds/rhs evaluated at a concrete realization.
mip::LinearModel instantiate(const DispatchTemplate&, const Realization&);

/// Read an operation schedule out of a solved model.
OperationSchedule extract_schedule(const OperationVars&, const DeviceCatalog&, const TimeGrid&,
                                   const std::vector<double>& col_value);

struct DispatchResult {
  OperationSchedule schedule;
  double objective = 0;  // operation cost + slack penalty
  mip::SolveOutcome outcome;
};

/// Solve the fixed-plan operation problem under one realization.
DispatchResult dispatch(const InvestmentPlan& plan, const Realization& realization,
                        const DeviceCatalog& cat, const ForecastSet& forecasts, const TimeGrid& g,
                        const EconomicParams& econ, const UncertaintyConfig& u,
                        mip::Solver& solver, const mip::SolveOptions& = {},
                        const ModelOptions& = {});

}  // namespace om
