#include "om/dpm.hpp"

#include <stdexcept>

namespace om {

void check_structural_feasibility(const DeviceCatalog& cat, const ForecastSet& f,
                                  const TimeGrid& g, const ModelOptions& opt) {
  const auto& dsu = cat.desalination;
  if (g.hours_per_day * dsu.rated_capacity_tph < dsu.daily_demand_t - 1e-9)
    throw std::runtime_error(
        "infeasible inputs: daily water demand exceeds H * desalination capacity (" +
        std::to_string(dsu.daily_demand_t) + " t > " +
        std::to_string(g.hours_per_day * dsu.rated_capacity_tph) + " t)");
  if (opt.enforce_adequacy && cat.total_generation_capacity() < f.max_load() - 1e-9)
    throw std::runtime_error(
        "infeasible inputs: building every candidate still leaves installed capacity " +
        std::to_string(cat.total_generation_capacity()) + " MW below the load peak " +
        std::to_string(f.max_load()) + " MW");
}

XCols add_investment_columns(mip::LinearModel& m, const DeviceCatalog& cat, const TimeGrid& g,
                             const EconomicParams& econ, double max_load,
                             const ModelOptions& opt) {
  XCols x;
  for (int i = 0; i < cat.num_du(); ++i)
    x.du.push_back(m.add_col("x_du" + std::to_string(i), 0, 1,
                             du_investment_coefficient(cat.dispatchable[i], g, econ),
                             mip::VarType::Binary));
  for (int j = 0; j < cat.num_ndu(); ++j)
    x.ndu.push_back(m.add_col("x_ndu" + std::to_string(j), 0, 1,
                              ndu_investment_coefficient(cat.renewable[j], g, econ),
                              mip::VarType::Binary));
  for (int k = 0; k < cat.num_tpg(); ++k)
    x.tpg.push_back(m.add_col("x_tpg" + std::to_string(k), 0, 1,
                              tpg_investment_coefficient(cat.tidal[k], g, econ),
                              mip::VarType::Binary));
  for (int l = 0; l < cat.num_ess(); ++l)
    x.ess.push_back(m.add_col("x_ess" + std::to_string(l), 0, 1,
                              ess_investment_coefficient(cat.storage[l], g, econ),
                              mip::VarType::Binary));
  m.objective_offset += sdu_investment_constant(cat, g, econ);

  if (opt.enforce_adequacy) {
    std::vector<std::pair<int, double>> e;
    for (int i = 0; i < cat.num_du(); ++i)
      e.emplace_back(x.du[i], cat.dispatchable[i].rated_power_mw);
    for (int j = 0; j < cat.num_ndu(); ++j)
      e.emplace_back(x.ndu[j], cat.renewable[j].rated_power_mw);
    for (int k = 0; k < cat.num_tpg(); ++k) e.emplace_back(x.tpg[k], cat.tidal[k].rated_power_mw);
    m.add_row("adequacy", mip::RowSense::GE, max_load, e);
  }
  return x;
}

InvestmentPlan extract_plan(const XCols& x, const std::vector<double>& col) {
  InvestmentPlan p;
  auto bit = [&](int c) { return static_cast<std::uint8_t>(col.at(c) > 0.5 ? 1 : 0); };
  for (int c : x.du) p.du.push_back(bit(c));
  for (int c : x.ndu) p.ndu.push_back(bit(c));
  for (int c : x.tpg) p.tpg.push_back(bit(c));
  for (int c : x.ess) p.ess.push_back(bit(c));
  return p;
}

DpmModel build_dpm(const DeviceCatalog& cat, const ForecastSet& f, const TimeGrid& g,
                   const EconomicParams& econ, int delta_t, const ModelOptions& opt) {
  check_structural_feasibility(cat, f, g, opt);
  DpmModel dpm;
  dpm.x = add_investment_columns(dpm.model, cat, g, econ, f.max_load(), opt);
  const RealizedInputs nominal = nominal_inputs(f, cat, delta_t, econ, opt);
  dpm.ops = add_operation_block(dpm.model, cat, g, econ, nominal, &dpm.x, nullptr,
                                /*water_slack=*/false, /*costs_in_objective=*/true, "op_");
  return dpm;
}

PlanResult solve_dpm(const DeviceCatalog& cat, const ForecastSet& f, const TimeGrid& g,
                     const EconomicParams& econ, int delta_t, mip::Solver& solver,
                     const mip::SolveOptions& sopt, const ModelOptions& opt) {
  DpmModel dpm = build_dpm(cat, f, g, econ, delta_t, opt);
  PlanResult res;
  res.outcome = solver.solve(dpm.model, sopt);
  if (res.outcome.status == mip::SolveStatus::Infeasible)
    throw std::runtime_error(
        "DPM infeasible: no investment plan can serve the load and water demand");
  if (!res.outcome.optimal())
    throw std::runtime_error("DPM solve failed: " + mip::to_string(res.outcome.status) +
                             (res.outcome.detail.empty() ? "" : " (" + res.outcome.detail + ")"));
  res.plan = extract_plan(dpm.x, res.outcome.col_value);
  res.schedule = extract_schedule(dpm.ops, cat, g, res.outcome.col_value);
  res.cost_inv = investment_cost(cat, res.plan, g, econ);
  res.cost_ope = operation_cost(res.schedule, cat, econ, g);
  res.schedule.cost_inv = res.cost_inv;
  res.schedule.cost_ope = res.cost_ope;
  res.total = res.outcome.objective;
  return res;
}

}  // namespace om
